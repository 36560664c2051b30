import random
from fractions import Fraction

import pytest

from cycgal import (
    Poly,
    QuadRat,
    RatFunc,
    compose_mod,
    ext_gcd,
    integralize,
    normalize_primitive,
    poly_gcd,
)
from cycgal.poly import as_rational_poly

from refdata import CYCLIC_QUINTIC, CYCLIC_QUINTIC_PS

CASES = 200


def rand_poly(rng, D=1, max_deg=6, nonzero=False):
    while True:
        deg = rng.randint(-1, max_deg)
        coeffs = [
            QuadRat.of(
                Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 4)) if D > 1 else 0,
                D,
            )
            for _ in range(deg + 1)
        ]
        f = Poly(coeffs, D)
        if not (nonzero and f.is_zero):
            return f


class TestRingOps:
    def test_divrem_exact_factor(self):
        f = Poly([-1, 0, 1])  # X^2 - 1
        g = Poly([-1, 1])
        q, r = divmod(f, g)
        assert q == Poly([1, 1]) and r.is_zero

    def test_mul(self):
        assert Poly([-2, 1]) * Poly([-3, 1]) == Poly([6, -5, 1])

    def test_divrem_monomials(self):
        q, r = divmod(Poly([0, 0, 0, 1]), Poly([0, 0, 1]))
        assert q == Poly([0, 1]) and r.is_zero

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(Poly([1, 1]), Poly.zero())

    def test_divrem_round_trip_randomized(self):
        rng = random.Random(17)
        for _ in range(CASES):
            D = rng.choice((1, 5))
            f = rand_poly(rng, D)
            g = rand_poly(rng, D, nonzero=True)
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree


class TestGcd:
    def test_shared_root(self):
        assert poly_gcd(Poly([-1, 0, 1]), Poly([1, -2, 1])) == Poly([-1, 1])

    def test_gcd_with_zero(self):
        f = Poly([2, 4])
        assert poly_gcd(f, Poly.zero()) == f.monic()

    def test_coprime(self):
        # X^2+1 at -3 evaluates to 10, so X+3 divides nothing
        assert poly_gcd(Poly([1, 0, 1]), Poly([3, 1])) == Poly.one()

    def test_ext_gcd_simple(self):
        d, u, v = ext_gcd(Poly([1, 0, 1]), Poly([0, 1]))
        assert d == Poly.one()
        assert u == Poly.one() and v == Poly([0, -1])

    def test_ext_gcd_self(self):
        f = Poly([3, 0, 6])
        d, u, v = ext_gcd(f, f)
        assert d == f.monic()
        assert u * f + v * f == d

    def test_ext_gcd_bezout_randomized(self):
        rng = random.Random(23)
        for _ in range(CASES):
            D = rng.choice((1, 2, 3, 5))
            f = rand_poly(rng, D)
            g = rand_poly(rng, D)
            if f.is_zero and g.is_zero:
                continue
            d, u, v = ext_gcd(f, g)
            assert u * f + v * g == d
            if not d.is_zero:
                assert d.lc == QuadRat.rational(1, D)


class TestComposeMod:
    def test_identity_outer(self):
        f = Poly([1, 1, 1])
        Q = Poly([2, 3, 1])
        assert compose_mod(Poly.x(), Q, f) == Q % f

    def test_identity_inner(self):
        f = Poly([1, 1, 1])
        P = Poly([5, -1, 2, 7])
        assert compose_mod(P, Poly.x(), f) == P % f

    def test_cyclic_quintic_root_expressions(self):
        # inserting each P_j into f leaves residue zero mod f
        for P in CYCLIC_QUINTIC_PS:
            assert compose_mod(CYCLIC_QUINTIC, P, CYCLIC_QUINTIC).is_zero


class TestNormalization:
    def test_clears_content_and_sign(self):
        assert normalize_primitive(Poly([4, 0, -2])) == Poly([-2, 0, 1])

    def test_idempotent_and_scale_invariant_randomized(self):
        rng = random.Random(31)
        for _ in range(CASES):
            D = rng.choice((1, 3, 5))
            f = rand_poly(rng, D, nonzero=True)
            norm = normalize_primitive(f)
            assert normalize_primitive(norm) == norm
            c = Fraction(rng.randint(1, 40), rng.randint(1, 40)) * rng.choice((1, -1))
            assert normalize_primitive(f.scale(c)) == norm

    def test_integralize(self):
        m, g = integralize(Poly([Fraction(1, 3), 0, Fraction(1, 2)]))
        assert m == 6 and g == Poly([2, 0, 3])

    def test_integralize_integer_input_unchanged(self):
        f = Poly([4, -1, 7])
        assert integralize(f) == (1, f)

    def test_integralize_rejects_irrational(self):
        with pytest.raises(ValueError):
            integralize(Poly([QuadRat.of(1, 1, 5)], 5))

    def test_as_rational_poly_retags(self):
        f = Poly([QuadRat.rational(3, 5), QuadRat.rational(-1, 5)], 5)
        assert as_rational_poly(f) == Poly([3, -1], 1)


class TestRatFunc:
    def test_cancels_common_factor(self):
        r = RatFunc(Poly([-1, 0, 1]), Poly([-1, 1]))
        assert r.num == Poly([1, 1]) and r.den == Poly.one()

    def test_constant_over_linear(self):
        # 3/(-3X+3) reduces to -1/(X-1)
        r = RatFunc(Poly([3]), Poly([3, -3]))
        assert r.num == Poly([-1]) and r.den == Poly([-1, 1])

    def test_zero_numerator(self):
        r = RatFunc(Poly.zero(), Poly([0, 1]))
        assert r.num.is_zero and r.den == Poly.one()

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(Poly([1]), Poly.zero())

    def test_add_with_constant(self):
        assert RatFunc.x() + 1 == RatFunc(Poly([1, 1]))

    def test_add_assoc_comm_randomized(self):
        rng = random.Random(47)
        for _ in range(CASES):
            D = rng.choice((1, 5))
            fns = [
                RatFunc(rand_poly(rng, D, max_deg=3), rand_poly(rng, D, max_deg=2, nonzero=True))
                for _ in range(3)
            ]
            a, b, c = fns
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)
