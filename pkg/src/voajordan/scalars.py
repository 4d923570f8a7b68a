"""Exact coefficient arithmetic: rationals, polynomials in r, dense linear algebra.

Every quantity in this package is a polynomial in a formal central parameter r
with rational coefficients.  Working in Q[r] instead of Q(r) is deliberate:
the deformed bracket multiplies scalars by r and never divides, so one
symbolic computation certifies all central charges at once.  Rank and kernel
computations over generic r use fraction-free elimination with polynomial
pivots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

F0 = Fraction(0)
F1 = Fraction(1)


class Scalar:
    """Element of Q[r]: coeffs[k] multiplies r**k, with no trailing zeros.

    Values are immutable; canonical form makes equality of tuples equality of
    polynomials.  Arithmetic accepts int and Fraction operands.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        while cs and not cs[-1]:
            cs = cs[:-1]
        self.coeffs = cs

    @staticmethod
    def _make(cs: tuple[Fraction, ...]) -> "Scalar":
        # internal: cs already canonical (Fractions, no trailing zeros)
        s = Scalar.__new__(Scalar)
        s.coeffs = cs
        return s

    @property
    def degree(self) -> int:
        """Degree in r; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        """The value as a Fraction; only valid when degree <= 0."""
        if len(self.coeffs) > 1:
            raise ValueError(f"not a constant: {self}")
        return self.coeffs[0] if self.coeffs else F0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        other = scalar(other)
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] += c
        while cs and not cs[-1]:
            cs.pop()
        return Scalar._make(tuple(cs))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-scalar(other))

    def __rsub__(self, other):
        return scalar(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            if other == 1:
                return self
            return Scalar._make(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) == 1:
            return Scalar._make(tuple(a[0] * c for c in b))
        if len(b) == 1:
            return Scalar._make(tuple(b[0] * c for c in a))
        cs = [F0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    cs[i + j] += ca * cb
        while cs and not cs[-1]:
            cs.pop()
        return Scalar._make(tuple(cs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        """Division by a nonzero rational (polynomial division is separate)."""
        if isinstance(other, Scalar):
            other = other.constant()
        other = Fraction(other)
        return Scalar._make(tuple(c / other for c in self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == scalar(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def specialize(self, r_value) -> Fraction:
        """Evaluate at a concrete rational central charge (ring homomorphism)."""
        r_value = Fraction(r_value)
        out = F0
        for c in reversed(self.coeffs):
            out = out * r_value + c
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                mag = str(abs(c))
            else:
                var = "r" if k == 1 else f"r^{k}"
                mag = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(mag if c > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({self})"


def scalar(x) -> Scalar:
    """Coerce an int, Fraction, or Scalar into a Scalar."""
    if isinstance(x, Scalar):
        return x
    x = Fraction(x)
    return Scalar._make((x,)) if x else ZERO


ZERO = Scalar._make(())
ONE = Scalar._make((F1,))
R = Scalar._make((F0, F1))


def rational_times_r(q) -> Scalar:
    """The scalar q*r; used for deformed central terms."""
    q = Fraction(q)
    return Scalar._make((F0, q)) if q else ZERO


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """Polynomial quotient a/b in Q[r]; raises if the division is not exact."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if b.is_rational():
        return a / b.constant()
    rem = list(a.coeffs)
    quot = [F0] * max(len(rem) - len(b.coeffs) + 1, 0)
    lead = b.coeffs[-1]
    db = len(b.coeffs) - 1
    while len(rem) - 1 >= db and any(rem):
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) - 1 < db:
            break
        q = rem[-1] / lead
        shift = len(rem) - 1 - db
        quot[shift] = q
        for k, c in enumerate(b.coeffs):
            rem[shift + k] -= q * c
    if any(rem):
        raise ValueError(f"inexact polynomial division: {a} by {b}")
    return Scalar(quot)


def poly_gcd(a: Scalar, b: Scalar) -> Scalar:
    """Monic gcd in Q[r] (zero if both arguments are zero)."""
    while not b.is_zero():
        a, b = b, _poly_mod(a, b)
    if a.is_zero():
        return ZERO
    return a / a.coeffs[-1]


def _poly_mod(a: Scalar, b: Scalar) -> Scalar:
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    db = len(b.coeffs) - 1
    while True:
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) - 1 < db:
            break
        q = rem[-1] / lead
        shift = len(rem) - 1 - db
        for k, c in enumerate(b.coeffs):
            rem[shift + k] -= q * c
    return Scalar(rem)


def primitive_vector(vec) -> tuple[Scalar, ...]:
    """Strip a common polynomial factor and rational content from a vector.

    Used to keep fraction-free eliminations small; does not change the span.
    The first nonzero entry ends up with a positive leading coefficient.
    """
    nonzero = [v for v in vec if not v.is_zero()]
    if not nonzero:
        return tuple(vec)
    g = ZERO
    for v in nonzero:
        g = poly_gcd(g, v)
        if g.degree == 0:
            break
    if g.degree > 0:
        vec = [exact_div(v, g) for v in vec]
    nums = 0
    dens = 1
    for v in vec:
        for c in v.coeffs:
            nums = gcd(nums, c.numerator)
            dens = dens * c.denominator // gcd(dens, c.denominator)
    content = Fraction(nums, dens) if nums else F1
    first = next(v for v in vec if not v.is_zero())
    if first.coeffs[-1] < 0:
        content = -content
    return tuple(v / content for v in vec)


@dataclass(frozen=True)
class ScalarMatrix:
    """Dense row-major matrix of Scalars."""

    rows: int
    cols: int
    entries: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows) -> "ScalarMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(scalar(x) for r in rows for x in r)
        return ScalarMatrix(len(rows), ncols, flat)

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Scalar]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def transpose(self) -> "ScalarMatrix":
        flat = tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        return ScalarMatrix(self.cols, self.rows, flat)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def specialize(self, r_value) -> "ScalarMatrix":
        flat = tuple(scalar(e.specialize(r_value)) for e in self.entries)
        return ScalarMatrix(self.rows, self.cols, flat)

    def __str__(self) -> str:
        return "[" + "; ".join(
            ", ".join(str(self.entry(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        ) + "]"


def determinant(m: ScalarMatrix) -> Scalar:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    work = [m.row(i) for i in range(n)]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if work[k][k].is_zero():
            for kk in range(k + 1, n):
                if not work[kk][k].is_zero():
                    work[k], work[kk] = work[kk], work[k]
                    sign = -sign
                    break
            else:
                return ZERO
        piv = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = exact_div(piv * work[i][j] - work[i][k] * work[k][j], prev)
            work[i][k] = ZERO
        prev = piv
    det = work[n - 1][n - 1]
    return det if sign > 0 else -det


def nullspace(m: ScalarMatrix, r_value=None) -> tuple[int, list[tuple[Scalar, ...]]]:
    """Rank and an exact kernel basis, over Q(r) or at a specialized r.

    With r_value absent the rank is the generic one: pivots are nonzero
    polynomials, eliminated fraction-free so entries stay in Q[r].  Returned
    kernel vectors satisfy m @ v = 0 identically.
    """
    if r_value is not None:
        m = m.specialize(r_value)
    work = [m.row(i) for i in range(m.rows)]
    ncols = m.cols
    pivot_cols: list[int] = []
    r_i = 0
    for c in range(ncols):
        pivot_row = None
        for k in range(r_i, len(work)):
            if not work[k][c].is_zero():
                pivot_row = k
                break
        if pivot_row is None:
            continue
        work[r_i], work[pivot_row] = work[pivot_row], work[r_i]
        piv = work[r_i][c]
        for k in range(r_i + 1, len(work)):
            f = work[k][c]
            if f.is_zero():
                continue
            row = [piv * x - f * y for x, y in zip(work[k], work[r_i])]
            work[k] = list(primitive_vector(row))
        pivot_cols.append(c)
        r_i += 1
    rank = len(pivot_cols)
    pivot_set = set(pivot_cols)
    kernel: list[tuple[Scalar, ...]] = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [ZERO] * ncols
        x[f] = ONE
        for i in range(rank - 1, -1, -1):
            c = pivot_cols[i]
            s = ZERO
            for j in range(c + 1, ncols):
                if not x[j].is_zero() and not work[i][j].is_zero():
                    s = s + work[i][j] * x[j]
            piv = work[i][c]
            x = [piv * v for v in x]
            x[c] = -s
        kernel.append(primitive_vector(x))
    return rank, kernel
