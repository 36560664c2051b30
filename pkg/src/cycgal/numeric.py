"""Multiprecision root finding and the dihedral resolvent pipeline.

Roots of f1 and of its conjugate are found simultaneously (Aberth-Ehrlich
with a deterministic circular start), chained into Moebius orbits, and the
resolvent conjugates z_k = sum_j x_(j+k) * y_j are expanded into a monic
integer polynomial g.  Rounding to integers is the single inexact link, so g
is verified three ways: recomputation at doubled precision must reproduce the
same integers, g must certify irreducible over Q, and a prime scan of g must
show only dihedral-admissible factorization types.

Precisions are in bits; computations run inside local mpmath contexts, so the
global mpmath state is never touched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .arith import QuadRat
from .galois import WreathReport, conjugate_poly
from .modp import certify_irreducible_Q, dihedral_admissible_types, scan_primes
from .moebius import Mat2
from .poly import Poly, poly_gcd

__all__ = [
    "PrecisionError",
    "CollisionError",
    "RootPairingError",
    "DihedralResolventError",
    "embed",
    "find_roots",
    "RootOrbit",
    "orbit_roots",
    "resolvent_conjugates",
    "reconstruct_integer_poly",
    "DihedralResult",
    "dihedral_resolvent",
]

_GUARD_BITS = 32
_MAX_ITERATIONS = 600
_PREC_CAP = 4096


class PrecisionError(ArithmeticError):
    """Signal that the current precision did not suffice; escalate and retry."""


class CollisionError(ValueError):
    """Resolvent conjugates are not pairwise distinct; switch resolvents."""


class RootPairingError(ArithmeticError):
    """A Moebius orbit point could not be matched to a computed root."""


class DihedralResolventError(RuntimeError):
    """The resolvent pipeline failed beyond recovery; diagnostics attached."""


def embed(x: QuadRat, prec: int = 256) -> mp.mpf:
    """Real embedding of u + v*sqrt(D) with sqrt(D) the positive root."""
    if prec < 64:
        raise ValueError("prec >= 64 bits required")
    with mp.workprec(prec):
        val = mp.mpf(x.u.numerator) / x.u.denominator
        if x.v != 0:
            val += mp.mpf(x.v.numerator) / x.v.denominator * mp.sqrt(x.D)
        return val


def _embedded_coeffs(f: Poly, prec: int) -> list[mp.mpc]:
    return [mp.mpc(embed(c, prec)) for c in f.coeffs]


def _horner(cs: list[mp.mpc], z: mp.mpc) -> mp.mpc:
    acc = mp.mpc(0)
    for c in reversed(cs):
        acc = acc * z + c
    return acc


def _mag_bound(c: QuadRat) -> Fraction:
    # |u + v*sqrt(D)| <= |u| + 3|v| for D <= 5
    return abs(c.u) + 3 * abs(c.v)


def _root_guard_bits(f: Poly) -> int:
    """Extra working bits so residuals meet the 2^(-prec/2) bound.

    The residual at a root known to relative error 2^-wp is about
    |f'(z)| * |z| * 2^-wp <= deg * ||f|| * R^deg * 2^-wp with R the root
    bound, so wp needs deg * log2(R) bits of headroom.
    """
    lc = f.lc
    lc_lower = abs(lc.norm()) / _mag_bound(lc)
    radius = 1 + max(_mag_bound(c) / lc_lower for c in f.coeffs)
    bits = radius.numerator.bit_length() - radius.denominator.bit_length() + 1
    return _GUARD_BITS + f.degree * max(1, bits)


def find_roots(f: Poly, prec: int = 256) -> list[mp.mpc]:
    """All complex roots of a squarefree polynomial, simultaneously.

    Aberth-Ehrlich iteration from a deterministic circle of initial points
    (radius 1 + max |c_i/c_n|, angles offset by 0.4 rad); each returned root
    satisfies |f(root)| <= 2^(-prec/2) * max|c_i|.  Raises PrecisionError if
    the iteration cap is hit before convergence.
    """
    if f.degree < 1:
        raise ValueError("degree >= 1 required")
    if poly_gcd(f, f.derivative()).degree != 0:
        raise ValueError("squarefree input required (exact gcd check failed)")
    n = f.degree
    wp = prec + _root_guard_bits(f)
    with mp.workprec(wp):
        cs = _embedded_coeffs(f, wp)
        dcs = [k * cs[k] for k in range(1, n + 1)]
        lead = cs[-1]
        if n == 1:
            return [-cs[0] / cs[1]]
        radius = 1 + max(abs(c / lead) for c in cs[:-1])
        zs = [
            radius * mp.exp(mp.mpc(0, 2 * mp.pi * k / n + mp.mpf(2) / 5))
            for k in range(n)
        ]
        move_tol = mp.mpf(2) ** (-prec)
        for _ in range(_MAX_ITERATIONS):
            worst = mp.mpf(0)
            for i in range(n):
                z = zs[i]
                fz = _horner(cs, z)
                dfz = _horner(dcs, z)
                if dfz == 0:
                    newton = mp.mpc(0)
                else:
                    newton = fz / dfz
                acc = mp.mpc(0)
                for j in range(n):
                    if j != i and zs[i] != zs[j]:
                        acc += 1 / (z - zs[j])
                denom = 1 - newton * acc
                step = newton if denom == 0 else newton / denom
                zs[i] = z - step
                rel = abs(step) / (1 + abs(zs[i]))
                if rel > worst:
                    worst = rel
            if worst < move_tol:
                break
        else:
            raise PrecisionError(f"no convergence within {_MAX_ITERATIONS} iterations")
        norm = max(abs(c) for c in cs)
        residual_cap = mp.mpf(2) ** (-(prec // 2)) * norm
        for z in zs:
            if abs(_horner(cs, z)) > residual_cap:
                raise PrecisionError("converged point fails the residual bound")
        return sorted(zs, key=lambda z: (z.real, z.imag))


def _apply_moebius(A: Mat2, z: mp.mpc, prec: int) -> mp.mpc:
    a, b, c, d = (embed(x, prec) for x in (A.a, A.b, A.c, A.d))
    return (a * z + b) / (c * z + d)


@dataclass(frozen=True)
class RootOrbit:
    """Roots of f1 (xs) and of its conjugate (ys), in Moebius-orbit order."""

    xs: tuple[mp.mpc, ...]
    ys: tuple[mp.mpc, ...]
    residual_bound: mp.mpf
    prec: int


def _orbit_for(f: Poly, A: Mat2, prec: int) -> tuple[list[mp.mpc], mp.mpf]:
    wp = prec + _GUARD_BITS
    with mp.workprec(wp):
        roots = find_roots(f, prec)
        scale = 1 + max(abs(z) for z in roots)
        tol = mp.mpf(2) ** (-(prec // 2)) * scale
        reals = [z for z in roots if abs(z.imag) <= tol]
        if not reals:
            raise RootPairingError("no real root to anchor the orbit")
        start = min(reals, key=lambda z: z.real)
        used = [False] * len(roots)
        orbit = []
        current = start
        for _ in range(len(roots)):
            best, best_dist = None, None
            for idx, z in enumerate(roots):
                if used[idx]:
                    continue
                dist = abs(z - current)
                if best_dist is None or dist < best_dist:
                    best, best_dist = idx, dist
            if best_dist > tol:
                raise RootPairingError(
                    f"orbit point strays {mp.nstr(best_dist, 8)} from every unused root"
                )
            used[best] = True
            orbit.append(roots[best])
            current = _apply_moebius(A, roots[best], wp)
        if abs(current - orbit[0]) > tol:
            raise RootPairingError("orbit does not close up within tolerance")
        return orbit, tol


def orbit_roots(f1: Poly, A: Mat2, prec: int = 256) -> RootOrbit:
    """Number the roots of f1 and f1' along their Moebius orbits.

    x1 is the smallest real root of f1 and x_(j+1) = A(x_j); ys likewise from
    the conjugate data.  Every orbit point is matched back to a computed root
    within tolerance, and the orbit must close.
    """
    xs, tol_x = _orbit_for(f1, A, prec)
    ys, tol_y = _orbit_for(conjugate_poly(f1), A.conj(), prec)
    return RootOrbit(
        xs=tuple(xs), ys=tuple(ys), residual_bound=max(tol_x, tol_y), prec=prec
    )


def resolvent_conjugates(orbit: RootOrbit, power: int = 1) -> list[mp.mpc]:
    """z_k = sum_j x_((j+k) mod n)^power * y_j^power for k = 0..n-1.

    These are the images of the resolvent under the powers of the x-cycle,
    which shifts x-indices and fixes the ys.
    """
    if power not in (1, 2):
        raise ValueError("power must be 1 or 2")
    n = len(orbit.xs)
    with mp.workprec(orbit.prec + _GUARD_BITS):
        out = []
        for k in range(n):
            acc = mp.mpc(0)
            for j in range(n):
                acc += orbit.xs[(j + k) % n] ** power * orbit.ys[j] ** power
            out.append(acc)
        return out


def reconstruct_integer_poly(
    values, tol: float = 1e-6, prec: int = 256
) -> Poly:
    """Expand prod (X - z_k) and round to an integer polynomial.

    The values must be pairwise distinct beyond 2*tol (CollisionError
    otherwise, the cue to switch resolvents); every expanded coefficient must
    sit within tol of an integer (PrecisionError otherwise, the cue to double
    the working precision).
    """
    values = list(values)
    with mp.workprec(prec + _GUARD_BITS):
        tolf = mp.mpf(tol)
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                if abs(values[i] - values[j]) <= 2 * tolf:
                    raise CollisionError(
                        f"conjugates {i} and {j} coincide within 2*tol"
                    )
        coeffs = [mp.mpc(1)]
        for z in values:
            nxt = [mp.mpc(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= c * z
            coeffs = nxt
        ints = []
        for c in coeffs:
            target = mp.nint(c.real)
            if abs(c.real - target) > tolf or abs(c.imag) > tolf:
                raise PrecisionError(
                    f"coefficient {mp.nstr(c, 12)} is not within {tol} of an integer"
                )
            ints.append(int(target))
        return Poly(ints, 1)


@dataclass(frozen=True)
class DihedralResult:
    """Resolvent polynomial g plus its three-way verification."""

    g: Poly
    power: int
    prec_bits: int
    verifications: tuple[tuple[str, bool], ...]
    type_log: tuple
    ok: bool
    reason: str | None = None

    def as_dict(self) -> dict:
        return {
            "g": str(self.g),
            "power": self.power,
            "prec_bits": self.prec_bits,
            "root_anchor": "smallest real root of f1 (and of its conjugate)",
            "verifications": [{"name": name, "ok": ok} for name, ok in self.verifications],
            "type_log": [{"p": p, "type": list(t.degrees)} for p, t in self.type_log],
            "ok": self.ok,
            "reason": self.reason,
        }


def _resolvent_at(f1: Poly, A: Mat2, power: int, bits: int, tol: float) -> Poly:
    orbit = orbit_roots(f1, A, bits)
    zs = resolvent_conjugates(orbit, power)
    return reconstruct_integer_poly(zs, tol, prec=bits)


def dihedral_resolvent(
    report: WreathReport,
    A: Mat2,
    prec: int = 256,
    int_tol: float = 1e-6,
    prime_budget: int = 50,
    start_power: int = 1,
) -> DihedralResult:
    """Degree-n integer polynomial g whose splitting field is dihedral.

    Requires a complete wreath certification with monic integral f, so the
    resolvent values are algebraic integers.  Escalates precision (doubling,
    capped) until reconstruction succeeds twice with identical integers;
    falls back to the squared resolvent when conjugates collide.
    """
    if not report.complete:
        raise ValueError("wreath certification incomplete; no dihedral claim possible")
    f1 = report.f1
    n = f1.degree
    if report.f.lc != QuadRat.rational(1):
        raise DihedralResolventError(
            "f is not monic integral, so the resolvent values need not be "
            "algebraic integers"
        )

    collisions = []
    for power in (1, 2):
        if power < start_power:
            continue
        bits = prec
        while bits <= _PREC_CAP:
            try:
                g = _resolvent_at(f1, A, power, bits, int_tol)
                g_again = _resolvent_at(f1, A, power, bits * 2, int_tol)
            except CollisionError as exc:
                collisions.append(f"power {power}: {exc}")
                break
            except (PrecisionError, RootPairingError):
                bits *= 2
                continue
            if g == g_again:
                return _verify_resolvent(g, n, power, bits, prime_budget)
            bits *= 2
        else:
            raise DihedralResolventError(
                f"precision cap {_PREC_CAP} bits reached without stable integers"
            )
    raise DihedralResolventError(
        "every attempted resolvent has colliding conjugates: " + "; ".join(collisions)
    )


def _verify_resolvent(
    g: Poly, n: int, power: int, bits: int, prime_budget: int
) -> DihedralResult:
    recompute_ok = True  # identical integers at bits and 2*bits, by construction
    cert = certify_irreducible_Q(g, 100)
    scan = scan_primes(g, None, prime_budget)
    admissible = dihedral_admissible_types(n)
    types_ok = all(t in admissible for _p, t in scan.log)
    verifications = (
        ("recompute_doubled_precision", recompute_ok),
        ("g_irreducible_over_Q", cert.passed),
        ("types_admissible_dihedral", types_ok),
    )
    ok = all(flag for _name, flag in verifications)
    reason = None if ok else "; ".join(
        name for name, flag in verifications if not flag
    )
    return DihedralResult(
        g=g,
        power=power,
        prec_bits=bits,
        verifications=verifications,
        type_log=scan.log,
        ok=ok,
        reason=reason,
    )
