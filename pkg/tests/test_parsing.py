from fractions import Fraction

import pytest
from hypothesis import given, settings

from splitquat import ParseError, SplitQuaternion, parse_quat

from conftest import quats


class TestGrammar:
    @pytest.mark.parametrize(
        "text,coeffs",
        [
            ("1+3i+2j+k", (1, 3, 2, 1)),
            ("-1/2+j", (Fraction(-1, 2), 0, 1, 0)),
            ("0", (0, 0, 0, 0)),
            ("k", (0, 0, 0, 1)),
            ("-k", (0, 0, 0, -1)),
            ("i+j", (0, 1, 1, 0)),
            ("7", (7, 0, 0, 0)),
            ("2/3-4/5i", (Fraction(2, 3), Fraction(-4, 5), 0, 0)),
            ("1-i-j-k", (1, -1, -1, -1)),
            ("i+i", (0, 2, 0, 0)),
        ],
    )
    def test_exact_literals(self, text, coeffs):
        q = parse_quat(text)
        assert q == SplitQuaternion(*coeffs)
        assert q.is_exact

    def test_decimal_switches_to_floats(self):
        q = parse_quat("2.5i-k")
        assert not q.is_exact
        assert q.q1 == 2.5 and q.q3 == -1.0

    def test_whitespace_ignored(self):
        assert parse_quat(" 1 + 3i +2 j+ k ") == parse_quat("1+3i+2j+k")

    def test_leading_sign(self):
        assert parse_quat("-1/2+j") == -parse_quat("1/2-j")

    def test_exact_backend_reads_decimals_exactly(self):
        q = parse_quat("2.5i", backend="exact")
        assert q.is_exact
        assert q.q1 == Fraction(5, 2)

    def test_approx_backend_forces_floats(self):
        q = parse_quat("1+3i", backend="approx")
        assert not q.is_exact

    @pytest.mark.parametrize(
        "text,value",
        [("1e-9i", 1e-9), ("2E3i", 2000.0), ("1.5e-2i", 0.015), ("-2.5e1i", -25.0)],
    )
    def test_scientific_notation(self, text, value):
        q = parse_quat(text)
        assert not q.is_exact
        assert q.q1 == value

    def test_scientific_notation_exact_backend(self):
        assert parse_quat("1.5e-2", backend="exact").q0 == Fraction(3, 200)


class TestErrors:
    def test_truncated_literal(self):
        with pytest.raises(ParseError) as exc:
            parse_quat("1+")
        assert exc.value.position == 2

    @pytest.mark.parametrize(
        "text", ["", "  ", "1++2", "x", "1i2", "1/", "1/0", "3//4", ".", "2e", "1.5e+"]
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_quat(text)

    def test_position_reported_on_original_string(self):
        with pytest.raises(ParseError) as exc:
            parse_quat("1 + ")
        assert exc.value.position == 4

    def test_unknown_backend(self):
        with pytest.raises(ValueError):
            parse_quat("1", backend="symbolic")


class TestRoundTrip:
    @given(quats)
    @settings(max_examples=100)
    def test_display_parses_back(self, q):
        assert parse_quat(str(q)) == q

    def test_float_display_parses_close(self):
        q = SplitQuaternion(1 / 3, 0.125, -2.75, 1e-4)
        back = parse_quat(str(q))
        assert back.isclose(q, 1e-9)

    def test_tiny_float_coefficients_round_trip(self):
        q = SplitQuaternion(-1.0, 1.22464679915e-16, 1.0, 0.0)
        back = parse_quat(str(q))
        assert back.isclose(q, 1e-9)
