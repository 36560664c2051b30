"""Dense univariate polynomials and rational functions over Q[sqrt(D)].

Coefficients are stored lowest degree first with trailing zeros trimmed; the
zero polynomial has an empty coefficient tuple but still carries its field
tag.  Division, gcd and the extended Euclidean algorithm use exact field
arithmetic throughout; degrees in this package stay small (<= 24), so plain
Euclid is the right tool.

`RatFunc` keeps rational functions in the canonical coprime form with a monic
denominator, which makes equality a plain component comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arith import FieldMismatchError, QuadRat

__all__ = [
    "Poly",
    "RatFunc",
    "poly_gcd",
    "ext_gcd",
    "compose_mod",
    "normalize_primitive",
    "integralize",
    "as_rational_poly",
]


def _lift_coeff(c, D: int) -> QuadRat:
    if isinstance(c, QuadRat):
        if c.D != D:
            raise FieldMismatchError(f"coefficient tagged D={c.D} in a D={D} polynomial")
        return c
    if isinstance(c, (int, Fraction)):
        return QuadRat.rational(c, D)
    raise TypeError(f"bad coefficient type {type(c).__name__}")


class Poly:
    """Univariate polynomial over Q[sqrt(D)], lowest degree first."""

    __slots__ = ("coeffs", "D")

    def __init__(self, coeffs=(), D: int | None = None):
        items = list(coeffs)
        if D is None:
            D = next((c.D for c in items if isinstance(c, QuadRat)), 1)
        lifted = [_lift_coeff(c, D) for c in items]
        while lifted and lifted[-1].is_zero:
            lifted.pop()
        self.coeffs = tuple(lifted)
        self.D = D

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, D: int = 1) -> "Poly":
        return cls((), D)

    @classmethod
    def one(cls, D: int = 1) -> "Poly":
        return cls((1,), D)

    @classmethod
    def x(cls, D: int = 1) -> "Poly":
        return cls((0, 1), D)

    @classmethod
    def constant(cls, c, D: int | None = None) -> "Poly":
        if D is None and isinstance(c, QuadRat):
            D = c.D
        return cls((c,), D if D is not None else 1)

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> QuadRat:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> QuadRat:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return QuadRat.rational(0, self.D)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.D == other.D and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.D, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring operations --------------------------------------------------------

    def _lift(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.D != self.D:
                raise FieldMismatchError(
                    f"cannot combine polynomials over D={self.D} and D={other.D}"
                )
            return other
        if isinstance(other, (int, Fraction, QuadRat)):
            return Poly.constant(_lift_coeff(other, self.D), self.D)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.D)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.D)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Poly.zero(self.D)
        if o.degree == 0:
            return self.scale(o.coeffs[0])
        if self.degree == 0:
            return o.scale(self.coeffs[0])
        out = [QuadRat.rational(0, self.D)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero:
                continue
            for j, cj in enumerate(o.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return Poly(out, self.D)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = _lift_coeff(c, self.D)
        return Poly([a * c for a in self.coeffs], self.D)

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly.zero(self.D), self
        inv_lc = o.lc.inverse()
        quot = [QuadRat.rational(0, self.D)] * (dq + 1)
        for k in range(dq, -1, -1):
            coef = rem[k + o.degree] * inv_lc
            quot[k] = coef
            if not coef.is_zero:
                for j, cj in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - coef * cj
        return Poly(quot, self.D), Poly(rem[: o.degree], self.D)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus and evaluation --------------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.D)

    def __call__(self, x):
        x = _lift_coeff(x, self.D)
        acc = QuadRat.rational(0, self.D)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot make the zero polynomial monic")
        return self.scale(self.lc.inverse())

    # -- printing (the parse side lives in grammar.py) -----------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            parts.append(_term_str(c, k, first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self}, D={self.D})"


def _term_str(c: QuadRat, k: int, first: bool) -> str:
    xpart = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
    if c.v != 0:
        lead = "" if first else "+"
        cpart = str(c)  # parenthesized, signs inside
        return f"{lead}{cpart}*{xpart}" if xpart else f"{lead}{cpart}"
    q = c.u
    sign = "-" if q < 0 else ("" if first else "+")
    mag = abs(q)
    if not xpart:
        return f"{sign}{mag}"
    if mag == 1:
        return f"{sign}{xpart}"
    return f"{sign}{mag}*{xpart}"


# -- gcd machinery -------------------------------------------------------------


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over the coefficient field, by plain Euclid."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def ext_gcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, u, v) with u*f + v*g = d and d the monic gcd."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    D = f.D
    r0, r1 = f, g
    s0, s1 = Poly.one(D), Poly.zero(D)
    t0, t1 = Poly.zero(D), Poly.one(D)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = r0.lc.inverse()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def compose_mod(P: Poly, Q: Poly, f: Poly) -> Poly:
    """Residue of P(Q(X)) modulo f, by Horner over the quotient ring."""
    if f.is_zero:
        raise ZeroDivisionError("composition modulo the zero polynomial")
    Q = Q % f
    acc = Poly.zero(P.D)
    for c in reversed(P.coeffs):
        acc = (acc * Q + c) % f
    return acc


# -- normal forms ----------------------------------------------------------------


def _int_parts(f: Poly):
    """All Fraction components (u and v) of the coefficients."""
    for c in f.coeffs:
        yield c.u
        if f.D > 1:
            yield c.v


def normalize_primitive(f: Poly) -> Poly:
    """Canonical representative of f up to a rational scalar.

    Clears denominators of every rational component, divides out the integer
    content, and makes the leading coefficient's first nonzero component
    positive.  Idempotent, and invariant under rational rescaling of f.
    """
    if f.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    den_lcm = 1
    for q in _int_parts(f):
        den_lcm = den_lcm * q.denominator // math.gcd(den_lcm, q.denominator)
    content = 0
    for q in _int_parts(f):
        content = math.gcd(content, abs(q.numerator * (den_lcm // q.denominator)))
    out = f.scale(Fraction(den_lcm, content))
    head = out.lc.u if out.lc.u != 0 else out.lc.v
    if head < 0:
        out = -out
    return out


def integralize(f: Poly) -> tuple[int, Poly]:
    """(m, m*f) with m the lcm of coefficient denominators.

    The input must have purely rational coefficients; the result is retagged
    to D = 1 with integer coefficients.
    """
    g = as_rational_poly(f)
    m = 1
    for c in g.coeffs:
        m = m * c.u.denominator // math.gcd(m, c.u.denominator)
    return m, Poly([c.u * m for c in g.coeffs], 1)


def as_rational_poly(f: Poly) -> Poly:
    """Retag a polynomial whose coefficients are all rational to D = 1."""
    for c in f.coeffs:
        if c.v != 0:
            raise ValueError(f"coefficient {c} is not rational")
    return Poly([c.u for c in f.coeffs], 1)


def is_integer_poly(f: Poly) -> bool:
    return f.D == 1 and all(c.u.denominator == 1 for c in f.coeffs)


# -- rational functions -------------------------------------------------------------


class RatFunc:
    """Quotient of polynomials in reduced form: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.D)
        if den.D != num.D:
            raise FieldMismatchError("numerator and denominator field tags differ")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if not num.is_zero else den
        if g.degree > 0:
            num, den = num // g, den // g
        inv = den.lc.inverse()
        self.num = num.scale(inv)
        self.den = den.scale(inv)

    @classmethod
    def x(cls, D: int = 1) -> "RatFunc":
        return cls(Poly.x(D))

    @property
    def D(self) -> int:
        return self.num.D if not self.num.is_zero else self.den.D

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def _lift(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, QuadRat)):
            return RatFunc(Poly.constant(other, self.den.D), Poly.one(self.den.D))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"
