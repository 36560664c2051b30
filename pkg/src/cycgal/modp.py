"""Factorization types modulo primes and the permutation-group type oracles.

The only factorization data the certification pipeline ever needs is the
multiset of irreducible-factor degrees of a squarefree polynomial mod p.
Distinct-degree factorization delivers exactly that via gcds with X^(p^d) - X,
so no equal-degree (randomized) splitting is implemented.

Irreducibility over Q is certified from reduction types alone: either some
prime gives an irreducible reduction, or the degree-set sieve (subset sums of
observed types) leaves no possible proper factor degree.

Permutation models of the wreath product Cn wr C2 and of dihedral groups act
as cycle-type oracles: every factorization type of a certified polynomial must
occur among the cycle types of the group, which is the consistency check the
reports quote.  For degree >= 10 this certifies "consistent with", never
"equal to".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .poly import Poly, as_rational_poly, integralize, poly_gcd

__all__ = [
    "BadPrimeError",
    "NotSquarefreeError",
    "FactorType",
    "PolyP",
    "is_prime",
    "primes",
    "reduce_mod_p",
    "is_squarefree_mod_p",
    "ddf_type",
    "ScanResult",
    "scan_primes",
    "IrreducibilityCertificate",
    "certify_irreducible_Q",
    "GroupModel",
    "wreath_group_model",
    "cycle_type",
    "wreath_admissible_types",
    "dihedral_perms",
    "dihedral_admissible_types",
    "cyclic_admissible_types",
]


class BadPrimeError(ValueError):
    """The prime divides the leading coefficient; skip it."""


class NotSquarefreeError(ValueError):
    """Reduction mod p has a repeated factor; types would be meaningless."""


def is_prime(n: int) -> bool:
    """Trial division; fine for the machine-word primes used here."""
    if n < 2 or n >= 2**63:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    k = 5
    while k * k <= n:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


def primes() -> Iterator[int]:
    yield 2
    yield 3
    found = [2, 3]
    n = 5
    while True:
        if all(n % q for q in found if q * q <= n):
            found.append(n)
            yield n
        n += 2


@dataclass(frozen=True)
class FactorType:
    """Multiset of irreducible-factor degrees, stored sorted descending."""

    degrees: tuple[int, ...]

    def __init__(self, degrees):
        ds = tuple(sorted((int(d) for d in degrees), reverse=True))
        if any(d < 1 for d in ds):
            raise ValueError("factor degrees must be positive")
        object.__setattr__(self, "degrees", ds)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.degrees) + ")"

    def __repr__(self) -> str:
        return f"FactorType{self}"


def full_cycle_type(n: int) -> FactorType:
    """The type (n, 1, ..., 1) on 2n points that certifies the wreath group."""
    return FactorType([n] + [1] * n)


# -- arithmetic of residue-coefficient polynomials (lowest degree first) ----------


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _trim(rem)
    inv = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - db - 1, -1, -1):
        coef = rem[k + db] * inv % p
        quot[k] = coef
        if coef:
            for j, y in enumerate(b):
                rem[k + j] = (rem[k + j] - coef * y) % p
    return _trim(quot), _trim(rem)


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _pow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    out = [1]
    base = _divmod(base, mod, p)[1]
    while e:
        if e & 1:
            out = _divmod(_mul(out, base, p), mod, p)[1]
        base = _divmod(_mul(base, base, p), mod, p)[1]
        e >>= 1
    return out


def _deriv(a: list[int], p: int) -> list[int]:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


@dataclass(frozen=True)
class PolyP:
    """Polynomial over F_p; residues lowest degree first, leading nonzero."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime below 2^63")
        cs = [c % self.p for c in self.coeffs]
        object.__setattr__(self, "coeffs", tuple(_trim(cs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def monic(self) -> "PolyP":
        if not self.coeffs:
            raise ValueError("zero polynomial")
        inv = pow(self.coeffs[-1], -1, self.p)
        return PolyP(self.p, tuple(c * inv % self.p for c in self.coeffs))

    def __str__(self) -> str:
        from .arith import QuadRat  # local to avoid import noise at module load

        return str(Poly([QuadRat.rational(c) for c in self.coeffs], 1)) + f" mod {self.p}"


def reduce_mod_p(f: Poly, p: int) -> PolyP:
    """Coefficientwise reduction of an integer polynomial mod p."""
    g = as_rational_poly(f)
    if any(c.u.denominator != 1 for c in g.coeffs):
        raise ValueError("integer coefficients required")
    if g.is_zero:
        raise ValueError("cannot reduce the zero polynomial")
    if g.lc.u.numerator % p == 0:
        raise BadPrimeError(f"{p} divides the leading coefficient")
    return PolyP(p, tuple(c.u.numerator % p for c in g.coeffs))


def is_squarefree_mod_p(f: PolyP) -> bool:
    if f.degree < 1:
        raise ValueError("degree >= 1 required")
    cs = list(f.coeffs)
    return len(_gcd(cs, _deriv(cs, f.p), f.p)) == 1


def ddf_type(f: PolyP) -> FactorType:
    """Factorization type by distinct-degree factorization.

    Splits off the product of all irreducible factors of degree d via
    gcd(f, X^(p^d) - X) for d = 1, 2, ...; a block of total degree e
    contributes e/d copies of d.  Requires a squarefree input.
    """
    if f.degree < 1:
        raise ValueError("degree >= 1 required")
    if not is_squarefree_mod_p(f):
        raise NotSquarefreeError("input has a repeated factor mod p")
    p = f.p
    work = list(f.monic().coeffs)
    x = [0, 1]
    h = _divmod(x, work, p)[1]
    degrees: list[int] = []
    d = 0
    while len(work) - 1 >= 2 * (d + 1):
        d += 1
        h = _pow_mod(h, p, work, p)
        g = _gcd(work, _sub(h, x, p), p)
        if len(g) > 1:
            block = len(g) - 1
            degrees.extend([d] * (block // d))
            work = _divmod(work, g, p)[0]
            h = _divmod(h, work, p)[1]
    if len(work) > 1:
        degrees.append(len(work) - 1)
    out = FactorType(degrees)
    assert out.total == f.degree
    return out


# -- prime scanning -----------------------------------------------------------------


@dataclass(frozen=True)
class ScanResult:
    """Log of factorization types over scanned primes, plus the first match."""

    found_prime: int | None
    found_type: FactorType | None
    log: tuple[tuple[int, FactorType], ...]
    skipped: tuple[tuple[int, str], ...]

    @property
    def matched(self) -> bool:
        return self.found_prime is not None

    def as_dict(self) -> dict:
        return {
            "found": None
            if not self.matched
            else {"p": self.found_prime, "type": list(self.found_type.degrees)},
            "log": [{"p": p, "type": list(t.degrees)} for p, t in self.log],
            "skipped": [{"p": p, "reason": r} for p, r in self.skipped],
        }


def scan_primes(
    f: Poly, predicate: Callable[[FactorType], bool] | None, budget: int
) -> ScanResult:
    """Factor f modulo 2, 3, 5, ... until the predicate matches.

    Primes dividing the leading coefficient or giving a non-squarefree
    reduction are skipped (and logged as such); `budget` counts every prime
    examined, usable or not.  With predicate None the full budget is logged.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    log: list[tuple[int, FactorType]] = []
    skipped: list[tuple[int, str]] = []
    examined = 0
    for p in primes():
        if examined >= budget:
            break
        examined += 1
        try:
            fp = reduce_mod_p(f, p)
        except BadPrimeError:
            skipped.append((p, "divides leading coefficient"))
            continue
        if not is_squarefree_mod_p(fp):
            skipped.append((p, "not squarefree"))
            continue
        t = ddf_type(fp)
        log.append((p, t))
        if predicate is not None and predicate(t):
            return ScanResult(p, t, tuple(log), tuple(skipped))
    return ScanResult(None, None, tuple(log), tuple(skipped))


# -- irreducibility over Q -------------------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityCertificate:
    status: str  # "pass" | "reducible" | "inconclusive"
    witness_prime: int | None = None
    sieve_primes: tuple[int, ...] = ()
    rational_root: Fraction | None = None
    square_factor: Poly | None = None
    log: tuple[tuple[int, FactorType], ...] = ()
    skipped: tuple[tuple[int, str], ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "witness_prime": self.witness_prime,
            "sieve_primes": list(self.sieve_primes),
            "rational_root": None if self.rational_root is None else str(self.rational_root),
            "square_factor": None if self.square_factor is None else str(self.square_factor),
            "log": [{"p": p, "type": list(t.degrees)} for p, t in self.log],
        }


def _bounded_divisors(n: int, cap: int = 10**6, max_divisors: int = 4096) -> list[int]:
    """Positive divisors of n from trial division up to `cap` (best effort)."""
    n = abs(n)
    factors: dict[int, int] = {}
    m = n
    d = 2
    while d <= cap and d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    divs = [1]
    for q, e in factors.items():
        divs = [a * q**k for a in divs for k in range(e + 1)]
        if len(divs) > max_divisors:
            return divs[:max_divisors]
    return sorted(divs)


def certify_irreducible_Q(f: Poly, budget: int = 100) -> IrreducibilityCertificate:
    """Certificate that f is irreducible over Q, or a reducibility witness.

    Fast paths: an exact repeated-factor check (gcd with the derivative) and a
    rational-root search over divisor candidates.  Then primes are scanned;
    an irreducible reduction certifies immediately, and otherwise the set of
    degrees a proper factor could have (subset sums of each observed type) is
    intersected across primes until it empties out.
    """
    _, g = integralize(f)
    deg = g.degree
    if deg < 1:
        raise ValueError("degree >= 1 required")
    if deg == 1:
        return IrreducibilityCertificate(status="pass")

    sq = poly_gcd(g, g.derivative())
    if sq.degree > 0:
        return IrreducibilityCertificate(status="reducible", square_factor=sq)

    c0 = g.coeffs[0].u.numerator
    lc = g.lc.u.numerator
    if c0 == 0:
        return IrreducibilityCertificate(status="reducible", rational_root=Fraction(0))
    lc_divisors = _bounded_divisors(lc)
    for num in _bounded_divisors(c0):
        for den in lc_divisors:
            for r in (Fraction(num, den), Fraction(-num, den)):
                if g(r).is_zero:
                    return IrreducibilityCertificate(status="reducible", rational_root=r)

    # incremental scan + degree-set sieve
    possible = set(range(1, deg))  # degrees a proper factor might have
    log: list[tuple[int, FactorType]] = []
    skipped: list[tuple[int, str]] = []
    examined = 0
    for p in primes():
        if examined >= budget:
            break
        examined += 1
        try:
            fp = reduce_mod_p(g, p)
        except BadPrimeError:
            skipped.append((p, "divides leading coefficient"))
            continue
        if not is_squarefree_mod_p(fp):
            skipped.append((p, "not squarefree"))
            continue
        t = ddf_type(fp)
        log.append((p, t))
        if t.degrees == (deg,):
            return IrreducibilityCertificate(
                status="pass", witness_prime=p, log=tuple(log), skipped=tuple(skipped)
            )
        possible &= _subset_sums(t)
        if not possible:
            return IrreducibilityCertificate(
                status="pass",
                sieve_primes=tuple(p for p, _ in log),
                log=tuple(log),
                skipped=tuple(skipped),
            )
    return IrreducibilityCertificate(
        status="inconclusive", log=tuple(log), skipped=tuple(skipped)
    )


def _subset_sums(t: FactorType) -> set[int]:
    """Degrees strictly between 0 and t.total reachable as subset sums."""
    mask = 1
    for d in t.degrees:
        mask |= mask << d
    return {k for k in range(1, t.total) if (mask >> k) & 1}


# -- permutation models ------------------------------------------------------------------

Perm = tuple[int, ...]


def _compose(a: Perm, b: Perm) -> Perm:
    """Apply b first, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def cycle_type(perm: Perm) -> FactorType:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return FactorType(lengths)


@dataclass(frozen=True)
class GroupModel:
    """Cn wr C2 realized on the 2n points x_1..x_n, y_1..y_n."""

    n: int
    sigma: Perm
    tau: Perm
    rho: Perm
    elements: tuple[Perm, ...]


def wreath_group_model(n: int) -> GroupModel:
    """Permutations sigma, tau, rho and all 2n^2 products sigma^j tau^k rho^l.

    Verifies the defining relations rho*sigma = tau*rho, rho*tau = sigma*rho,
    rho^2 = id and the group order before returning.
    """
    if n < 3:
        raise ValueError("n >= 3 required")
    idp = tuple(range(2 * n))
    sigma = tuple([(i + 1) % n for i in range(n)] + [n + i for i in range(n)])
    tau = tuple([i for i in range(n)] + [n + (i + 1) % n for i in range(n)])
    rho = tuple([n + i for i in range(n)] + [i for i in range(n)])

    if _compose(rho, sigma) != _compose(tau, rho):
        raise AssertionError("relation rho*sigma = tau*rho violated")
    if _compose(rho, tau) != _compose(sigma, rho):
        raise AssertionError("relation rho*tau = sigma*rho violated")
    if _compose(rho, rho) != idp:
        raise AssertionError("rho is not an involution")

    elements = []
    sj = idp
    for _ in range(n):
        sjtk = sj
        for _ in range(n):
            elements.append(sjtk)
            elements.append(_compose(sjtk, rho))
            sjtk = _compose(sjtk, tau)
        sj = _compose(sj, sigma)
    if len(set(elements)) != 2 * n * n:
        raise AssertionError("group order is not 2*n^2")
    return GroupModel(n=n, sigma=sigma, tau=tau, rho=rho, elements=tuple(elements))


def wreath_admissible_types(model: GroupModel) -> frozenset[FactorType]:
    """Cycle types of the wreath group acting on the 2n roots."""
    return frozenset(cycle_type(g) for g in model.elements)


def dihedral_perms(n: int) -> tuple[Perm, ...]:
    """The 2n rotations and reflections of n points."""
    rotations = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    reflections = [tuple((k - i) % n for i in range(n)) for k in range(n)]
    return tuple(rotations + reflections)


def dihedral_admissible_types(n: int) -> frozenset[FactorType]:
    return frozenset(cycle_type(g) for g in dihedral_perms(n))


def cyclic_admissible_types(n: int) -> frozenset[FactorType]:
    """Cycle types of the powers of an n-cycle."""
    return frozenset(
        FactorType([n // math.gcd(n, k)] * math.gcd(n, k)) for k in range(n)
    )
