"""Exact arithmetic in Q and the real quadratic fields Q[sqrt(D)].

A `QuadRat` is a pair u + v*sqrt(D) of exact rationals with a small squarefree
field tag D in {1, 2, 3, 5}.  D = 1 encodes the rational field itself (v is
pinned to zero), so the polynomial stack above this module is written once
over `QuadRat` and serves both ground fields.

`FieldSpec` rows hold the construction data for each supported degree n: the
root-of-unity order N and every admissible value of (zeta + 1/zeta)^2 for a
primitive N-th root zeta.  Matrix validity is tested against these values.

All values are immutable and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "SUPPORTED_D",
    "FieldMismatchError",
    "QuadRat",
    "FieldSpec",
    "field_spec",
    "supported_degrees",
    "rational_sqrt",
]

SUPPORTED_D = (1, 2, 3, 5)


class FieldMismatchError(ValueError):
    """Arithmetic attempted between elements of distinct quadratic fields."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if q is not a square."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class QuadRat:
    """Element u + v*sqrt(D) of Q[sqrt(D)]; D = 1 means plain rational."""

    u: Fraction
    v: Fraction = Fraction(0)
    D: int = 1

    def __post_init__(self):
        object.__setattr__(self, "u", _frac(self.u))
        object.__setattr__(self, "v", _frac(self.v))
        if self.D not in SUPPORTED_D:
            raise ValueError(f"unsupported field tag D={self.D}")
        if self.D == 1 and self.v != 0:
            raise ValueError("D=1 encodes Q: the sqrt component must be zero")

    @classmethod
    def of(cls, u, v=0, D: int = 1) -> "QuadRat":
        return cls(_frac(u), _frac(v), D)

    @classmethod
    def rational(cls, q, D: int = 1) -> "QuadRat":
        """A plain rational value carried inside the field tagged D."""
        return cls(_frac(q), Fraction(0), D)

    # -- coercion ------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, QuadRat):
            if other.D != self.D:
                raise FieldMismatchError(
                    f"cannot combine Q[sqrt({self.D})] with Q[sqrt({other.D})]"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRat(_frac(other), Fraction(0), self.D)
        return None

    # -- predicates ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.u + o.u, self.v + o.v, self.D)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.u - o.u, self.v - o.v, self.D)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadRat(-self.u, -self.v, self.D)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadRat(
            self.u * o.u + self.v * o.v * self.D,
            self.u * o.v + self.v * o.u,
            self.D,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = QuadRat.rational(1, self.D)
        for _ in range(abs(k)):
            out = out * base
        return out

    # -- field structure -----------------------------------------------------

    def conj(self) -> "QuadRat":
        """The nontrivial field automorphism sqrt(D) -> -sqrt(D)."""
        return QuadRat(self.u, -self.v, self.D)

    def norm(self) -> Fraction:
        """Field norm u^2 - D*v^2 (the product with the conjugate)."""
        return self.u * self.u - self.v * self.v * self.D

    def inverse(self) -> "QuadRat":
        if self.is_zero:
            raise ZeroDivisionError("division by zero in Q[sqrt(D)]")
        n = self.norm()
        # sqrt(D) is irrational for D > 1, so a nonzero element has nonzero norm.
        if n == 0:
            raise ArithmeticError(f"nonzero element with zero norm: {self!r}")
        return QuadRat(self.u / n, -self.v / n, self.D)

    def sqrt(self) -> "QuadRat | None":
        """Exact square root inside the same field, or None."""
        if self.is_zero:
            return QuadRat.rational(0, self.D)
        if self.v == 0:
            r = rational_sqrt(self.u)
            if r is not None:
                return QuadRat(r, Fraction(0), self.D)
            if self.D > 1:
                r = rational_sqrt(self.u / self.D)
                if r is not None:
                    return QuadRat(Fraction(0), r, self.D)
            return None
        # (x + y*sqrt(D))^2 = u + v*sqrt(D) forces x^2 = (u +- q)/2 with
        # q^2 = u^2 - D v^2 and y = v/(2x).
        q = rational_sqrt(self.norm())
        if q is None:
            return None
        for s in (q, -q):
            x = rational_sqrt((self.u + s) / 2)
            if x is not None and x != 0:
                return QuadRat(x, self.v / (2 * x), self.D)
        return None

    def __str__(self) -> str:
        if self.v == 0:
            return str(self.u)
        sign = "+" if self.v > 0 else "-"
        return f"({self.u}{sign}{abs(self.v)}*s)"


@dataclass(frozen=True)
class FieldSpec:
    """Construction data for one supported degree n.

    N is the relevant root-of-unity order (n for odd n, 2n for even n); t is
    the preferred value of (zeta + 1/zeta)^2 and admissible_t lists the value
    for every primitive choice of zeta that lands in Q[sqrt(D)].
    """

    n: int
    N: int
    D: int
    t: QuadRat
    admissible_t: tuple[QuadRat, ...]


def _build_table() -> dict[int, FieldSpec]:
    half = Fraction(1, 2)
    rows = [
        # n,  D,  t,              all admissible (zeta^k + zeta^-k)^2
        (3, 1, (1, 0), [(1, 0)]),
        (4, 1, (2, 0), [(2, 0)]),
        (6, 1, (3, 0), [(3, 0)]),
        (5, 5, (Fraction(3, 2), -half), [(Fraction(3, 2), -half), (Fraction(3, 2), half)]),
        (8, 2, (2, 1), [(2, 1), (2, -1)]),
        (10, 5, (Fraction(5, 2), -half), [(Fraction(5, 2), -half), (Fraction(5, 2), half)]),
        (12, 3, (2, 1), [(2, 1), (2, -1)]),
    ]
    table = {}
    for n, D, t, adm in rows:
        N = n if n % 2 == 1 else 2 * n
        tval = QuadRat.of(t[0], t[1], D)
        admissible = tuple(QuadRat.of(u, v, D) for u, v in adm)
        table[n] = FieldSpec(n=n, N=N, D=D, t=tval, admissible_t=admissible)
    return table


_TABLE = _build_table()


def field_spec(n: int) -> FieldSpec:
    """Table row for degree n; raises ValueError for unsupported degrees."""
    try:
        return _TABLE[n]
    except KeyError:
        raise ValueError(
            f"no field data for n={n}; supported: {sorted(_TABLE)}"
        ) from None


def supported_degrees() -> tuple[int, ...]:
    return tuple(sorted(_TABLE))
