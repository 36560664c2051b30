"""2x2 matrices over Q[sqrt(D)], their Moebius action, and orbit sums.

A matrix A acts on rational functions by g -> (a*g + b)/(c*g + d); the
candidate polynomial is the numerator of

    F = X + A(X) + A^2(X) + ... + A^(n-1)(X) + C.

A matrix is admissible for degree n when trace(A)^2 = t * det(A) for one of
the tabulated values t = (zeta + 1/zeta)^2, zeta a primitive N-th root of
unity.  This single predicate replaces the scaling parameter bookkeeping:
matrices that differ by a nonzero rational factor act identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .arith import FieldMismatchError, FieldSpec, QuadRat
from .poly import Poly, RatFunc, normalize_primitive

__all__ = [
    "Mat2",
    "MatrixValidity",
    "ConstructionParams",
    "ConstructionResult",
    "InvalidMatrixError",
    "DegenerateConstructionError",
    "validate_matrix",
    "moebius_apply",
    "orbit_sum",
    "construct_f1",
    "search_params",
]


class InvalidMatrixError(ValueError):
    """Matrix fails the admissibility predicate for the requested field."""


class DegenerateConstructionError(ValueError):
    """The orbit sum collapsed to a constant (or its denominator vanished)."""


def _entry(x, D: int) -> QuadRat:
    if isinstance(x, QuadRat):
        if x.D != D:
            raise FieldMismatchError(f"entry tagged D={x.D} in a D={D} matrix")
        return x
    return QuadRat.rational(x, D)


@dataclass(frozen=True)
class Mat2:
    """Invertible 2x2 matrix (a b; c d) over Q[sqrt(D)]."""

    a: QuadRat
    b: QuadRat
    c: QuadRat
    d: QuadRat

    def __post_init__(self):
        tags = {x.D for x in (self.a, self.b, self.c, self.d)}
        if len(tags) != 1:
            raise FieldMismatchError(f"mixed field tags in matrix: {sorted(tags)}")
        if self.det().is_zero:
            raise ValueError("matrix must be invertible")

    @classmethod
    def of(cls, a, b, c, d, D: int = 1) -> "Mat2":
        return cls(_entry(a, D), _entry(b, D), _entry(c, D), _entry(d, D))

    @classmethod
    def identity(cls, D: int = 1) -> "Mat2":
        return cls.of(1, 0, 0, 1, D)

    @property
    def D(self) -> int:
        return self.a.D

    def det(self) -> QuadRat:
        return self.a * self.d - self.b * self.c

    def trace(self) -> QuadRat:
        return self.a + self.d

    @property
    def is_scalar(self) -> bool:
        return self.b.is_zero and self.c.is_zero and self.a == self.d

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if other.D != self.D:
            raise FieldMismatchError("matrix field tags differ")
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def pow(self, k: int) -> "Mat2":
        """A^k for k >= 0, by repeated multiplication (exact, degrees are small)."""
        if k < 0:
            raise ValueError("negative matrix power not needed here")
        out = Mat2.identity(self.D)
        for _ in range(k):
            out = out @ self
        return out

    def conj(self) -> "Mat2":
        """Entrywise image under sqrt(D) -> -sqrt(D)."""
        return Mat2(self.a.conj(), self.b.conj(), self.c.conj(), self.d.conj())

    def scale(self, c) -> "Mat2":
        c = _entry(c, self.D)
        return Mat2(self.a * c, self.b * c, self.c * c, self.d * c)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QuadRat)):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    def __repr__(self) -> str:
        return f"Mat2({self})"


@dataclass(frozen=True)
class MatrixValidity:
    ok: bool
    matched_t: QuadRat | None = None
    reason: str = ""


def validate_matrix(spec: FieldSpec, A: Mat2) -> MatrixValidity:
    """Accept iff trace(A)^2 = t * det(A) for some admissible t of the spec."""
    if A.D != spec.D:
        return MatrixValidity(False, None, f"matrix over D={A.D}, spec needs D={spec.D}")
    tr2 = A.trace() ** 2
    det = A.det()
    for t in spec.admissible_t:
        if tr2 == t * det:
            return MatrixValidity(True, t)
    return MatrixValidity(
        False, None, "trace^2 != t*det for every admissible t of the field table"
    )


@dataclass(frozen=True)
class ConstructionParams:
    """A validated (field row, matrix, additive constant) triple."""

    spec: FieldSpec
    A: Mat2
    C: QuadRat

    def __post_init__(self):
        verdict = validate_matrix(self.spec, self.A)
        if not verdict.ok:
            raise InvalidMatrixError(verdict.reason)
        if self.C.D != self.spec.D:
            raise FieldMismatchError(
                f"constant tagged D={self.C.D}, spec needs D={self.spec.D}"
            )


@dataclass(frozen=True)
class ConstructionResult:
    f1: Poly
    degree: int
    n: int

    @property
    def full_degree(self) -> bool:
        return self.degree == self.n


def moebius_apply(A: Mat2, g: RatFunc) -> RatFunc:
    """(a*g + b)/(c*g + d), reduced."""
    num = g.num.scale(A.a) + g.den.scale(A.b)
    den = g.num.scale(A.c) + g.den.scale(A.d)
    if den.is_zero:
        raise DegenerateConstructionError("Moebius denominator vanishes identically")
    return RatFunc(num, den)


def orbit_sum(params: ConstructionParams) -> RatFunc:
    """F = X + A(X) + ... + A^(n-1)(X) + C, summed exactly."""
    D = params.spec.D
    X = RatFunc.x(D)
    F = X
    power = Mat2.identity(D)
    for _ in range(1, params.spec.n):
        power = power @ params.A
        F = F + moebius_apply(power, X)
    return F + params.C


def construct_f1(params: ConstructionParams) -> ConstructionResult:
    """Primitive numerator polynomial of the orbit sum.

    Raises DegenerateConstructionError when the sum is constant; a result of
    degree below n is returned with full_degree False (e.g. c = 0 matrices,
    whose orbit sums are affine).
    """
    F = orbit_sum(params)
    num = F.num
    if num.degree <= 0:
        raise DegenerateConstructionError("orbit sum is a constant")
    f1 = normalize_primitive(num)
    return ConstructionResult(f1=f1, degree=f1.degree, n=params.spec.n)


# -- parameter search ----------------------------------------------------------


def _rationals_by_height(bound: int) -> list[Fraction]:
    """0, +-1, then every reduced p/q with max(|p|, q) <= bound, by shells."""
    out = []
    for h in range(1, bound + 1):
        shell = set()
        for den in range(1, h + 1):
            for num in range(-h, h + 1):
                q = Fraction(num, den)
                if max(abs(q.numerator), q.denominator) == h:
                    shell.add(q)
        out.extend(sorted(shell))
    return out


def _values_by_height(bound: int, D: int) -> list[QuadRat]:
    if D == 1:
        return [QuadRat.rational(q) for q in _rationals_by_height(bound)]
    rats = _rationals_by_height(bound)
    vals = [QuadRat(u, v, D) for u, v in product(rats, rats)]
    vals.sort(key=lambda x: (max(_h(x.u), _h(x.v)), x.u, x.v))
    return vals


def _h(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)


def _trace_terms(spec: FieldSpec, traces) -> list[tuple[QuadRat, QuadRat]]:
    """(s, s^2 (t-4)/t) for every nonzero trace candidate and admissible t."""
    terms = []
    for s in traces:
        if s.is_zero:
            continue  # trace 0 forces det 0
        for t in spec.admissible_t:
            terms.append((s, s * s * (t - 4) / t))
    return terms


def _solve_diagonals(b: QuadRat, c: QuadRat, trace_terms) -> list[Mat2]:
    """All matrices with the given off-diagonal entries, admissible trace.

    For trace s and admissible t the diagonal must satisfy a + d = s and
    a*d = s^2/t + b*c, so a and d exist in K iff the discriminant
    s^2 (t-4)/t - 4*b*c is a square there.
    """
    found: list[Mat2] = []
    seen = set()
    four_bc = 4 * (b * c)
    for s, term in trace_terms:
        root = (term - four_bc).sqrt()
        if root is None:
            continue
        a1 = (s + root) / 2
        diag = [a1] if a1 == s - a1 else [a1, s - a1]
        for a in diag:
            d = s - a
            key = (a, d)
            if key in seen or (a * d - b * c).is_zero:
                continue
            seen.add(key)
            found.append(Mat2(a, b, c, d))
    return found


def search_params(
    spec: FieldSpec,
    budget: int,
    height: int = 3,
    seeds: tuple[ConstructionParams, ...] = (),
    certify_budget: int = 30,
) -> list[ConstructionParams]:
    """Deterministic enumeration of construction parameters with certified f1.

    Off-diagonal entries (b, c) and the constant C run over field values of
    bounded height; for each (b, c) the diagonal is solved from the trace/det
    constraint over a height-bounded list of traces.  Every candidate (seeds
    first) is constructed and kept when f1 has degree n and is certified
    irreducible.  `budget` caps the number of candidates tried.
    """
    from .galois import certify_f1_irreducible

    hits: list[ConstructionParams] = []
    tried = 0

    def consider(params: ConstructionParams) -> bool:
        nonlocal tried
        if tried >= budget:
            return False
        tried += 1
        try:
            result = construct_f1(params)
        except DegenerateConstructionError:
            return True
        if not result.full_degree:
            return True
        ok, _note = certify_f1_irreducible(result.f1, prime_budget=certify_budget)
        if ok:
            hits.append(params)
        return True

    for params in seeds:
        if not consider(params):
            return hits

    values = _values_by_height(height, spec.D)
    trace_terms = _trace_terms(spec, values)
    pairs = sorted(
        product(values, values),
        key=lambda bc: (
            max(_h(bc[0].u), _h(bc[0].v), _h(bc[1].u), _h(bc[1].v)),
            bc[0].u, bc[0].v, bc[1].u, bc[1].v,
        ),
    )
    for b, c in pairs:
        if c.is_zero:
            continue  # c = 0 gives affine orbit sums, degree <= 1
        for A in _solve_diagonals(b, c, trace_terms):
            for C in values:
                if not consider(ConstructionParams(spec=spec, A=A, C=C)):
                    return hits
    return hits
