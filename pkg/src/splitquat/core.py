"""Split-quaternion value type and its basic algebra.

Split quaternions form the four-dimensional real algebra spanned by
``1, i, j, k`` with

    i*i = -1,   j*j = k*k = +1,
    i*j = k = -j*i,   j*k = -i = -k*j,   k*i = j = -i*k.

The quadratic form ``q0^2 + q1^2 - q2^2 - q3^2`` is multiplicative and
its sign splits the algebra into timelike (positive), spacelike
(negative) and lightlike (zero) elements; the lightlike ones are exactly
the zero divisors, and they are what most of this library is about.

Coefficients are either all :class:`~fractions.Fraction` (exact backend)
or all :class:`float` (approximate backend with absolute tolerance
``eps``); mixing converts the whole value to floats.  Values are
immutable, so they are safe to share between threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import NotInvertibleError
from .scalars import (
    DEFAULT_EPS,
    Scalar,
    as_scalar,
    format_scalar,
    scalar_is_zero,
    scalars_close,
)

_UNITS = ("", "i", "j", "k")


class CausalClass(enum.Enum):
    """Sign of the quadratic form: the causal character of an element."""

    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SplitQuaternion:
    """Immutable split quaternion ``q0 + q1*i + q2*j + q3*k``."""

    q0: Scalar
    q1: Scalar
    q2: Scalar
    q3: Scalar

    def __post_init__(self):
        coeffs = tuple(as_scalar(c) for c in (self.q0, self.q1, self.q2, self.q3))
        if any(isinstance(c, float) for c in coeffs):
            coeffs = tuple(float(c) for c in coeffs)
        for name, value in zip(("q0", "q1", "q2", "q3"), coeffs):
            object.__setattr__(self, name, value)

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def from_scalar(cls, x) -> "SplitQuaternion":
        return cls(x, 0, 0, 0)

    @classmethod
    def from_complex_pair(cls, z1, z2) -> "SplitQuaternion":
        """Rebuild ``z1 + z2*j`` from two complex-subalgebra values.

        ``z1`` and ``z2`` may be SplitQuaternions with zero j,k parts,
        Python complex numbers, or plain scalars.
        """
        re1, im1 = _complex_parts(z1)
        re2, im2 = _complex_parts(z2)
        return cls(re1, im1, re2, im2)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return SplitQuaternion(
            self.q0 + other.q0, self.q1 + other.q1, self.q2 + other.q2, self.q3 + other.q3
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return SplitQuaternion(
            self.q0 - other.q0, self.q1 - other.q1, self.q2 - other.q2, self.q3 - other.q3
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return SplitQuaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        if isinstance(other, SplitQuaternion):
            p, q = self, other
            return SplitQuaternion(
                p.q0 * q.q0 - p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3,
                p.q0 * q.q1 + p.q1 * q.q0 - p.q2 * q.q3 + p.q3 * q.q2,
                p.q0 * q.q2 + p.q2 * q.q0 - p.q1 * q.q3 + p.q3 * q.q1,
                p.q0 * q.q3 + p.q3 * q.q0 + p.q1 * q.q2 - p.q2 * q.q1,
            )
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return SplitQuaternion(self.q0 * s, self.q1 * s, self.q2 * s, self.q3 * s)

    def __rmul__(self, other):
        # scalars are central, so left and right scaling agree
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self * s

    def __truediv__(self, other):
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return SplitQuaternion(self.q0 / s, self.q1 / s, self.q2 / s, self.q3 / s)

    # ------------------------------------------------------------------
    # involutions and parts
    # ------------------------------------------------------------------

    def conjugate(self) -> "SplitQuaternion":
        """Flip every imaginary coefficient: q0 - q1*i - q2*j - q3*k."""
        return SplitQuaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def prime(self) -> "SplitQuaternion":
        """Flip only the i coefficient; preserves the quadratic form."""
        return SplitQuaternion(self.q0, -self.q1, self.q2, self.q3)

    @property
    def re(self) -> Scalar:
        return self.q0

    @property
    def im(self) -> "SplitQuaternion":
        return SplitQuaternion(0 * self.q0, self.q1, self.q2, self.q3)

    @property
    def coeffs(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.q0, self.q1, self.q2, self.q3)

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.q0, float)

    # ------------------------------------------------------------------
    # invariants
    # ------------------------------------------------------------------

    @property
    def quadratic_form(self) -> Scalar:
        """The multiplicative form q0^2 + q1^2 - q2^2 - q3^2."""
        return self.q0 * self.q0 + self.q1 * self.q1 - self.q2 * self.q2 - self.q3 * self.q3

    @property
    def im_squared(self) -> Scalar:
        """Scalar value of im(q)*im(q): -q1^2 + q2^2 + q3^2, a similarity invariant."""
        return -self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3

    @property
    def im_norm_sq(self) -> Scalar:
        """Euclidean q1^2 + q2^2 + q3^2; zero exactly for real values."""
        return self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3

    def classify(self, eps: float = DEFAULT_EPS) -> CausalClass:
        """Causal class by the sign of the quadratic form.

        On the float backend a form within ``eps`` of zero counts as
        lightlike; exact values use strict sign tests.
        """
        form = self.quadratic_form
        if scalar_is_zero(form, eps):
            return CausalClass.LIGHTLIKE
        return CausalClass.TIMELIKE if form > 0 else CausalClass.SPACELIKE

    # ------------------------------------------------------------------
    # predicates and comparisons
    # ------------------------------------------------------------------

    def is_zero(self, eps: float = DEFAULT_EPS) -> bool:
        return all(scalar_is_zero(c, eps) for c in self.coeffs)

    def is_real(self, eps: float = DEFAULT_EPS) -> bool:
        return all(scalar_is_zero(c, eps) for c in (self.q1, self.q2, self.q3))

    def is_lightlike(self, eps: float = DEFAULT_EPS) -> bool:
        return scalar_is_zero(self.quadratic_form, eps)

    def isclose(self, other: "SplitQuaternion", eps: float = DEFAULT_EPS) -> bool:
        """Coefficientwise equality; exact coefficients compare exactly."""
        return all(scalars_close(a, b, eps) for a, b in zip(self.coeffs, other.coeffs))

    # ------------------------------------------------------------------
    # inversion and conversions
    # ------------------------------------------------------------------

    def inverse(self, eps: float = DEFAULT_EPS) -> "SplitQuaternion":
        """Two-sided inverse conj(q)/form; raises on zero divisors."""
        form = self.quadratic_form
        if scalar_is_zero(form, eps):
            raise NotInvertibleError(
                "quadratic form is zero; zero divisors have no inverse "
                "(see pinv.mp_inverse for the generalized inverse)"
            )
        return self.conjugate() / form

    def to_float(self) -> "SplitQuaternion":
        return SplitQuaternion(*(float(c) for c in self.coeffs))

    def to_exact(self) -> "SplitQuaternion":
        """Exact view of the float coefficients (binary expansion, no rounding)."""
        return SplitQuaternion(*(Fraction(c) for c in self.coeffs))

    def to_complex_pair(self) -> Tuple["SplitQuaternion", "SplitQuaternion"]:
        """Split q = z1 + z2*j with z1, z2 in the complex subalgebra R + R*i."""
        return (
            SplitQuaternion(self.q0, self.q1, 0 * self.q0, 0 * self.q0),
            SplitQuaternion(self.q2, self.q3, 0 * self.q0, 0 * self.q0),
        )

    # ------------------------------------------------------------------
    # display
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for coeff, unit in zip(self.coeffs, _UNITS):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            magnitude = -coeff if coeff < 0 else coeff
            body = format_scalar(magnitude)
            if unit:
                body = unit if magnitude == 1 else body + unit
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(sign + body)
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"SplitQuaternion({str(self)!r})"


def _coerce(x):
    if isinstance(x, SplitQuaternion):
        return x
    try:
        return SplitQuaternion.from_scalar(as_scalar(x))
    except TypeError:
        return None


def _complex_parts(z) -> Tuple[Scalar, Scalar]:
    if isinstance(z, SplitQuaternion):
        if not (scalar_is_zero(z.q2, 0.0) and scalar_is_zero(z.q3, 0.0)):
            raise ValueError("complex-pair component has nonzero j or k part")
        return z.q0, z.q1
    if isinstance(z, complex):
        return z.real, z.imag
    return as_scalar(z), 0


ZERO = SplitQuaternion(0, 0, 0, 0)
ONE = SplitQuaternion(1, 0, 0, 0)
I = SplitQuaternion(0, 1, 0, 0)
J = SplitQuaternion(0, 0, 1, 0)
K = SplitQuaternion(0, 0, 0, 1)
