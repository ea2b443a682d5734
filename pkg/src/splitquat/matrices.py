"""4x4 real matrix tools for the regular representations.

``left_matrix(q)`` and ``right_matrix(q)`` are the matrices of ``x -> q*x``
and ``x -> x*q`` acting on coefficient columns.  ``t_matrix`` and
``s_matrix`` are the operator matrices whose kernels carry the solutions
of ``x*a = b*x`` and ``x*a = b*conj(x)``.

Rank, determinant, nullspaces, and the Moore-Penrose inverse (by
full-rank factorization) are computed by Gaussian elimination, exactly
over rationals.  Closed-form spectra and determinants are provided as
cross-checks; elimination is the source of truth for every rank
decision taken elsewhere in the library.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .core import I, J, K, ONE, SplitQuaternion
from .scalars import (
    DEFAULT_EPS,
    Scalar,
    as_scalar,
    format_scalar,
    is_exact,
    scalar_is_zero,
    scalar_sqrt,
    scalars_close,
)

Vec4 = Tuple[Scalar, Scalar, Scalar, Scalar]


def vec(q: SplitQuaternion) -> Vec4:
    """Coefficient column of a quaternion."""
    return q.coeffs


def unvec(v: Sequence[Scalar]) -> SplitQuaternion:
    return SplitQuaternion(*v)


@dataclass(frozen=True)
class Mat4:
    """Immutable 4x4 matrix over the scalar backends, row-major."""

    rows: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in self.rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("Mat4 requires 4 rows of 4 entries")
        if any(isinstance(x, float) for row in rows for x in row):
            rows = tuple(tuple(float(x) for x in row) for row in rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls) -> "Mat4":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(4)) for i in range(4)))

    @classmethod
    def zero(cls) -> "Mat4":
        return cls(tuple(tuple(Fraction(0) for _ in range(4)) for _ in range(4)))

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Mat4":
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(4)) for i in range(4)))

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.rows[0][0], float)

    def __add__(self, other: "Mat4") -> "Mat4":
        return Mat4(tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other: "Mat4") -> "Mat4":
        return Mat4(tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self) -> "Mat4":
        return Mat4(tuple(tuple(-a for a in row) for row in self.rows))

    def __matmul__(self, other: "Mat4") -> "Mat4":
        cols = list(zip(*other.rows))
        return Mat4(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows)
        )

    def scale(self, s) -> "Mat4":
        s = as_scalar(s)
        return Mat4(tuple(tuple(a * s for a in row) for row in self.rows))

    def __truediv__(self, s) -> "Mat4":
        s = as_scalar(s)
        return Mat4(tuple(tuple(a / s for a in row) for row in self.rows))

    def apply(self, v: Sequence[Scalar]) -> Vec4:
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.rows)

    def transpose(self) -> "Mat4":
        return Mat4(tuple(zip(*self.rows)))

    def isclose(self, other: "Mat4", eps: float = DEFAULT_EPS) -> bool:
        return all(
            scalars_close(a, b, eps)
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )

    def is_symmetric(self, eps: float = DEFAULT_EPS) -> bool:
        return self.isclose(self.transpose(), eps)

    def rank(self, eps: float = DEFAULT_EPS) -> int:
        _, pivots = _rref([list(r) for r in self.rows], eps)
        return len(pivots)

    def det(self, eps: float = DEFAULT_EPS) -> Scalar:
        return _det([list(r) for r in self.rows], eps)

    def __str__(self) -> str:
        widths = [max(len(format_scalar(self.rows[r][c])) for r in range(4)) for c in range(4)]
        return "\n".join(
            "[ " + "  ".join(format_scalar(x).rjust(w) for x, w in zip(row, widths)) + " ]"
            for row in self.rows
        )


# ----------------------------------------------------------------------
# elimination primitives (work on lists of lists, any m x n shape)
# ----------------------------------------------------------------------


def _zero_entry(x: Scalar, eps: float) -> bool:
    if isinstance(x, float):
        return abs(x) <= eps
    return x == 0


def _rref(rows: List[List[Scalar]], eps: float) -> Tuple[List[List[Scalar]], List[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        best_row = None
        best = None
        for rr in range(r, m):
            v = rows[rr][c]
            if not _zero_entry(v, eps) and (best is None or abs(v) > best):
                best, best_row = abs(v), rr
        if best_row is None:
            continue
        rows[r], rows[best_row] = rows[best_row], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for rr in range(m):
            if rr != r and rows[rr][c] != 0:
                f = rows[rr][c]
                rows[rr] = [x - f * y for x, y in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def _det(rows: List[List[Scalar]], eps: float) -> Scalar:
    n = len(rows)
    exact = not any(isinstance(x, float) for row in rows for x in row)
    det: Scalar = Fraction(1) if exact else 1.0
    for c in range(n):
        best_row = None
        best = None
        for rr in range(c, n):
            v = rows[rr][c]
            if not _zero_entry(v, eps) and (best is None or abs(v) > best):
                best, best_row = abs(v), rr
        if best_row is None:
            return Fraction(0) if exact else 0.0
        if best_row != c:
            rows[c], rows[best_row] = rows[best_row], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        for rr in range(c + 1, n):
            if rows[rr][c] != 0:
                f = rows[rr][c] / piv
                rows[rr] = [x - f * y for x, y in zip(rows[rr], rows[c])]
    return det


def _matmul(a: List[List[Scalar]], b: List[List[Scalar]]) -> List[List[Scalar]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _transpose(a: List[List[Scalar]]) -> List[List[Scalar]]:
    return [list(col) for col in zip(*a)]


def _inverse(rows: List[List[Scalar]]) -> List[List[Scalar]]:
    """Inverse of a small square matrix by Gauss-Jordan; raises if singular."""
    n = len(rows)
    exact = not any(isinstance(x, float) for row in rows for x in row)
    one: Scalar = Fraction(1) if exact else 1.0
    aug = [list(row) + [one * (i == j) for j in range(n)] for i, row in enumerate(rows)]
    reduced, pivots = _rref(aug, 0.0 if exact else DEFAULT_EPS)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in reduced]


# ----------------------------------------------------------------------
# representations
# ----------------------------------------------------------------------


def left_matrix(q: SplitQuaternion) -> Mat4:
    """Matrix of x -> q*x on coefficient columns."""
    q0, q1, q2, q3 = q.coeffs
    return Mat4(
        (
            (q0, -q1, q2, q3),
            (q1, q0, q3, -q2),
            (q2, q3, q0, -q1),
            (q3, -q2, q1, q0),
        )
    )


def right_matrix(q: SplitQuaternion) -> Mat4:
    """Matrix of x -> x*q on coefficient columns."""
    q0, q1, q2, q3 = q.coeffs
    return Mat4(
        (
            (q0, -q1, q2, q3),
            (q1, q0, -q3, q2),
            (q2, -q3, q0, q1),
            (q3, q2, -q1, q0),
        )
    )


#: Conjugation sign matrix: vec(conj(x)) = F_MATRIX . vec(x).
F_MATRIX = Mat4.diagonal((1, -1, -1, -1))


def t_matrix(a: SplitQuaternion, b: SplitQuaternion) -> Mat4:
    """Matrix whose kernel is the solution space of x*a = b*x."""
    return right_matrix(a) - left_matrix(b)


def s_matrix(a: SplitQuaternion, b: SplitQuaternion) -> Mat4:
    """Matrix whose kernel is the solution space of x*a = b*conj(x)."""
    return right_matrix(a) - left_matrix(b) @ F_MATRIX


# ----------------------------------------------------------------------
# spectra, determinants, rank cases
# ----------------------------------------------------------------------

Complexish = Tuple[Scalar, Scalar]  # (real, imaginary) parts


def _sqrt_signed(x: Scalar) -> Complexish:
    """Square root of a scalar as a (re, im) pair; im > 0 when x < 0."""
    if x < 0:
        root = scalar_sqrt(-x)
        zero: Scalar = Fraction(0) if is_exact(root) else 0.0
        return (zero, root)
    root = scalar_sqrt(x)
    zero = Fraction(0) if is_exact(root) else 0.0
    return (root, zero)


class TRankCase(enum.Enum):
    """Degeneration taxonomy for t_matrix on non-real inputs."""

    NONSINGULAR = "nonsingular"
    RANK2 = "rank2"  # equal real parts and equal im_squared
    RANK3 = "rank3"  # distinct real parts with vanishing determinant

    @property
    def rank(self) -> int:
        return {"nonsingular": 4, "rank2": 2, "rank3": 3}[self.value]


class SRankCase(enum.Enum):
    """Degeneration taxonomy for s_matrix."""

    NONSINGULAR = "nonsingular"
    RANK1 = "rank1"  # conj(a) + b = 0
    RANK3A = "rank3a"  # equal quadratic forms, conj(a)+b non-lightlike
    RANK3B = "rank3b"  # equal quadratic forms, conj(a)+b nonzero lightlike
    RANK3C = "rank3c"  # distinct quadratic forms, conj(a)+b nonzero lightlike

    @property
    def rank(self) -> int:
        return {"nonsingular": 4, "rank1": 1, "rank3a": 3, "rank3b": 3, "rank3c": 3}[self.value]


def t_eigenvalues(a: SplitQuaternion, b: SplitQuaternion) -> Tuple[Complexish, ...]:
    """The four eigenvalues (a0 +/- sqrt(Ka)) - (b0 +/- sqrt(Kb)) as (re, im) pairs."""
    sa = _sqrt_signed(a.im_squared)
    sb = _sqrt_signed(b.im_squared)
    d = a.q0 - b.q0
    return tuple(
        (d + s1 * sa[0] - s2 * sb[0], s1 * sa[1] - s2 * sb[1])
        for s1 in (1, -1)
        for s2 in (1, -1)
    )


def t_det(a: SplitQuaternion, b: SplitQuaternion) -> Scalar:
    """Closed-form determinant d^4 - 2d^2(Ka+Kb) + (Ka-Kb)^2, d = a0-b0."""
    d = a.q0 - b.q0
    ka, kb = a.im_squared, b.im_squared
    d2 = d * d
    return d2 * d2 - 2 * d2 * (ka + kb) + (ka - kb) * (ka - kb)


def t_rank_case(a: SplitQuaternion, b: SplitQuaternion, eps: float = DEFAULT_EPS) -> TRankCase:
    """Classify the degeneration of t_matrix(a, b).

    The advertised ranks hold for non-real a and b; the elimination rank
    is always available via ``t_matrix(a, b).rank()``.
    """
    if scalars_close(a.q0, b.q0, eps) and scalars_close(a.im_squared, b.im_squared, eps):
        return TRankCase.RANK2
    if not scalars_close(a.q0, b.q0, eps) and scalar_is_zero(t_matrix(a, b).det(eps), eps):
        return TRankCase.RANK3
    return TRankCase.NONSINGULAR


def s_eigenvalues(a: SplitQuaternion, b: SplitQuaternion) -> Tuple[Complexish, ...]:
    """Eigenvalues a0 +/- sqrt(Ka + Ib) and a0+b0 +/- sqrt(Ka+Kb+2(a1b1-a2b2-a3b3))."""
    r1 = a.im_squared + b.quadratic_form
    r2 = a.im_squared + b.im_squared + 2 * (a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3)
    s1 = _sqrt_signed(r1)
    s2 = _sqrt_signed(r2)
    a0, ab0 = a.q0, a.q0 + b.q0
    return (
        (a0 + s1[0], s1[1]),
        (a0 - s1[0], -s1[1]),
        (ab0 + s2[0], s2[1]),
        (ab0 - s2[0], -s2[1]),
    )


def s_det(a: SplitQuaternion, b: SplitQuaternion) -> Scalar:
    """Closed-form determinant (Ia - Ib) * I(conj(a) + b)."""
    return (a.quadratic_form - b.quadratic_form) * (a.conjugate() + b).quadratic_form


def s_rank_case(a: SplitQuaternion, b: SplitQuaternion, eps: float = DEFAULT_EPS) -> SRankCase:
    w = a.conjugate() + b
    forms_equal = scalars_close(a.quadratic_form, b.quadratic_form, eps)
    w_lightlike = scalar_is_zero(w.quadratic_form, eps)
    if forms_equal:
        if w.is_zero(eps):
            return SRankCase.RANK1
        if not w_lightlike:
            return SRankCase.RANK3A
        return SRankCase.RANK3B
    if w_lightlike:
        return SRankCase.RANK3C
    return SRankCase.NONSINGULAR


# ----------------------------------------------------------------------
# Moore-Penrose inverse and nullspaces
# ----------------------------------------------------------------------


def mat_mp_inverse(m: Mat4, eps: float = DEFAULT_EPS) -> Mat4:
    """Moore-Penrose inverse by full-rank factorization m = B C.

    With C the nonzero rows of the reduced echelon form and B the pivot
    columns of m, the inverse is C^T (C C^T)^-1 (B^T B)^-1 B^T.  Exact
    over rationals; the zero matrix maps to itself.
    """
    reduced, pivots = _rref([list(r) for r in m.rows], eps)
    r = len(pivots)
    if r == 0:
        return Mat4.zero()
    c_block = [reduced[i] for i in range(r)]
    b_block = [[m.rows[i][p] for p in pivots] for i in range(4)]
    ct = _transpose(c_block)
    bt = _transpose(b_block)
    cct_inv = _inverse(_matmul(c_block, ct))
    btb_inv = _inverse(_matmul(bt, b_block))
    x = _matmul(_matmul(ct, cct_inv), _matmul(btb_inv, bt))
    return Mat4(tuple(tuple(row) for row in x))


def nullspace_basis(m: Mat4, eps: float = DEFAULT_EPS) -> List[Vec4]:
    """Exact kernel basis; one vector per free column, dimension 4 - rank."""
    reduced, pivots = _rref([list(r) for r in m.rows], eps)
    free = [c for c in range(4) if c not in pivots]
    exact = m.is_exact
    zero: Scalar = Fraction(0) if exact else 0.0
    one: Scalar = Fraction(1) if exact else 1.0
    basis = []
    for f in free:
        v = [zero] * 4
        v[f] = one
        for row_idx, p in enumerate(pivots):
            v[p] = -reduced[row_idx][f]
        basis.append(tuple(v))
    return basis


def linear_system_consistent(m: Mat4, rhs: Sequence[Scalar], eps: float = DEFAULT_EPS) -> bool:
    """Whether m . x = rhs has a solution, by rank comparison."""
    plain = [list(r) for r in m.rows]
    _, pivots = _rref([row[:] for row in plain], eps)
    augmented = [row + [as_scalar(v)] for row, v in zip(plain, rhs)]
    _, aug_pivots = _rref(augmented, eps)
    return len(aug_pivots) == len(pivots)


# ----------------------------------------------------------------------
# writing a linear map as a sum of two-sided multiplications
# ----------------------------------------------------------------------

_BASIS = (ONE, I, J, K)


@lru_cache(maxsize=1)
def _product_basis_inverse() -> Tuple[Tuple[Fraction, ...], ...]:
    """Inverse of the 16x16 change of basis from {L(e_i) R(e_j)} to matrix units.

    The sixteen products span all 4x4 real matrices, so any linear map
    on the algebra can be rewritten as a finite sum of maps
    y -> l * y * r.
    """
    columns = []
    for bi in _BASIS:
        for bj in _BASIS:
            prod = left_matrix(bi) @ right_matrix(bj)
            columns.append([x for row in prod.rows for x in row])
    big = [[columns[c][r] for c in range(16)] for r in range(16)]
    return tuple(tuple(row) for row in _inverse(big))


def quaternion_term_decomposition(
    m: Mat4,
) -> Tuple[Tuple[SplitQuaternion, SplitQuaternion], ...]:
    """Express the linear map of ``m`` as a sum of terms y -> l*y*r."""
    inv = _product_basis_inverse()
    flat = [x for row in m.rows for x in row]
    coeffs = [sum(inv[r][c] * flat[c] for c in range(16)) for r in range(16)]
    terms = []
    idx = 0
    for bi in _BASIS:
        for bj in _BASIS:
            c = coeffs[idx]
            idx += 1
            if c != 0:
                terms.append((bi * c, bj))
    return tuple(terms)
