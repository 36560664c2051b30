import random

import pytest

from cycgal import (
    FactorType,
    Poly,
    certify_irreducible_Q,
    cyclic_admissible_types,
    ddf_type,
    dihedral_admissible_types,
    is_squarefree_mod_p,
    reduce_mod_p,
    scan_primes,
    wreath_admissible_types,
    wreath_group_model,
)
from cycgal.modp import BadPrimeError, NotSquarefreeError, PolyP, _compose, full_cycle_type, primes

from refdata import F_WREATH_N5, F_WREATH_N10, S5_QUINTIC

CASES = 200


class TestReduction:
    def test_basic(self):
        fp = reduce_mod_p(Poly([-1, 0, 1]), 2)
        assert fp == PolyP(2, (1, 0, 1))

    def test_wreath_decic_keeps_degree(self):
        fp = reduce_mod_p(F_WREATH_N5, 29)
        assert fp.degree == 10

    def test_leading_coefficient_vanishes(self):
        with pytest.raises(BadPrimeError):
            reduce_mod_p(Poly([1, 0, 3]), 3)

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            PolyP(15, (1, 1))


class TestSquarefree:
    def test_distinct_roots(self):
        assert is_squarefree_mod_p(reduce_mod_p(Poly([-1, 0, 1]), 5))

    def test_double_root_at_zero(self):
        assert not is_squarefree_mod_p(PolyP(5, (0, 0, 1)))

    def test_perfect_square(self):
        assert not is_squarefree_mod_p(reduce_mod_p(Poly([1, -2, 1]), 7))


class TestDdf:
    def test_wreath_decic_at_29(self):
        t = ddf_type(reduce_mod_p(F_WREATH_N5, 29))
        assert t == FactorType([5, 1, 1, 1, 1, 1])

    def test_two_roots_mod_5(self):
        # 2 and 3 are the roots of X^2+1 mod 5 (exhaustive check: 0,1,4,4+1...)
        assert [x for x in range(5) if (x * x + 1) % 5 == 0] == [2, 3]
        assert ddf_type(reduce_mod_p(Poly([1, 0, 1]), 5)) == FactorType([1, 1])

    def test_rootless_quadratic_mod_3(self):
        assert [x for x in range(3) if (x * x + 1) % 3 == 0] == []
        assert ddf_type(reduce_mod_p(Poly([1, 0, 1]), 3)) == FactorType([2])

    def test_rejects_non_squarefree(self):
        with pytest.raises(NotSquarefreeError):
            ddf_type(PolyP(5, (0, 0, 1)))

    def test_degree_sum_randomized(self):
        rng = random.Random(83)
        done = 0
        while done < CASES:
            p = rng.choice((2, 3, 5, 7, 11, 13))
            deg = rng.randint(1, 9)
            coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
            fp = PolyP(p, tuple(coeffs))
            if fp.degree < 1 or not is_squarefree_mod_p(fp):
                continue
            assert ddf_type(fp).total == fp.degree
            done += 1

    def test_known_factor_multisets_randomized(self):
        # build squarefree products of irreducibles found by brute force
        # (degree <= 3, so irreducible iff rootless)
        rng = random.Random(89)

        def irreducibles(p, d):
            out = []
            for code in range(p**d):
                coeffs = [(code // p**i) % p for i in range(d)] + [1]
                if d == 1 or not any(
                    sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0
                    for x in range(p)
                ):
                    out.append(coeffs)
            return out

        pools = {p: {d: irreducibles(p, d) for d in (1, 2, 3)} for p in (2, 3, 5, 7)}
        for _ in range(CASES):
            p = rng.choice((2, 3, 5, 7))
            count = rng.randint(1, 4)
            chosen = []
            degs = []
            for _ in range(count):
                d = rng.randint(1, 3)
                cand = rng.choice(pools[p][d])
                if cand in chosen:
                    continue  # keep the product squarefree
                chosen.append(cand)
                degs.append(d)
            if not chosen:
                continue
            prod = Poly([1])
            for cand in chosen:
                prod = prod * Poly(cand)
            fp = reduce_mod_p(prod, p)
            assert ddf_type(fp) == FactorType(degs)


class TestScan:
    def test_wreath_decic_witness_is_29(self):
        target = FactorType([5, 1, 1, 1, 1, 1])
        result = scan_primes(F_WREATH_N5, lambda t: t == target, 100)
        assert result.found_prime == 29
        assert result.found_type == target

    def test_first_irreducible_prime_of_x2_plus_1(self):
        # p=2 gives a square, so the first usable irreducible reduction is p=3
        result = scan_primes(Poly([1, 0, 1]), lambda t: t == FactorType([2]), 10)
        assert result.found_prime == 3
        assert result.skipped[0] == (2, "not squarefree")

    def test_budget_consumed_by_bad_primes(self):
        # budget 1 examines only p=2, which is skipped: empty but valid log
        result = scan_primes(Poly([1, 0, 1]), None, 1)
        assert result.log == ()
        assert not result.matched
        assert result.skipped == ((2, "not squarefree"),)

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            scan_primes(Poly([1, 0, 1]), None, 0)

    def test_deterministic(self):
        a = scan_primes(S5_QUINTIC, None, 40)
        b = scan_primes(S5_QUINTIC, None, 40)
        assert a == b


class TestIrreducibility:
    def test_x2_minus_2_passes(self):
        # mod 3 it is X^2+1, which has no root mod 3
        cert = certify_irreducible_Q(Poly([-2, 0, 1]), 20)
        assert cert.passed and cert.witness_prime == 3

    def test_x2_minus_1_reducible_with_root(self):
        cert = certify_irreducible_Q(Poly([-1, 0, 1]), 20)
        assert cert.status == "reducible"
        assert cert.rational_root in (1, -1)

    def test_square_detected_exactly(self):
        cert = certify_irreducible_Q(Poly([1, 2, 1]), 20)
        assert cert.status == "reducible"
        assert cert.square_factor is not None

    def test_rootless_reducible_is_inconclusive_or_sieved(self):
        # (X^2+1)(X^2-2) has no rational root and factors 2+2 everywhere
        f = Poly([1, 0, 1]) * Poly([-2, 0, 1])
        cert = certify_irreducible_Q(f, 30)
        assert cert.status == "inconclusive"

    def test_wreath_decic_passes(self):
        cert = certify_irreducible_Q(F_WREATH_N5, 100)
        assert cert.passed

    def test_degree20_passes(self):
        cert = certify_irreducible_Q(F_WREATH_N10, 100)
        assert cert.passed

    def test_sieve_passes_without_a_full_degree_witness(self):
        # X^4+8X+12 has Galois group A4: no 4-cycles, hence never an
        # irreducible reduction, but types (3,1) and (2,2) rule out factor
        # degrees {2} and {1,3} respectively, and the sieve empties out.
        cert = certify_irreducible_Q(Poly([12, 8, 0, 0, 1]), 60)
        assert cert.passed
        assert cert.witness_prime is None
        assert len(cert.sieve_primes) >= 2

    def test_types_unresolvable_by_sieve_stay_inconclusive(self):
        # X^4+1 is irreducible over Q yet reducible mod every prime, and every
        # observed type admits a degree-2 factor, so no certificate arises.
        cert = certify_irreducible_Q(Poly([1, 0, 0, 0, 1]), 50)
        assert cert.status == "inconclusive"


class TestGroupModels:
    @pytest.mark.parametrize("n", range(3, 13))
    def test_wreath_model_order_and_relations(self, n):
        model = wreath_group_model(n)
        assert len(model.elements) == 2 * n * n
        assert len(set(model.elements)) == 2 * n * n
        s, t, r = model.sigma, model.tau, model.rho
        assert _compose(r, s) == _compose(t, r)
        assert _compose(r, t) == _compose(s, r)
        # r * (s t) * r = s t
        st = _compose(s, t)
        assert _compose(r, _compose(st, r)) == st

    @pytest.mark.parametrize("n", range(3, 13))
    def test_dihedral_relation(self, n):
        rot = tuple((i + 1) % n for i in range(n))
        rot_inv = tuple((i - 1) % n for i in range(n))
        for k in range(n):
            ref = tuple((k - i) % n for i in range(n))
            assert _compose(rot, ref) == _compose(ref, rot_inv)

    def test_small_wreath_sizes(self):
        assert len(wreath_group_model(3).elements) == 18
        assert len(wreath_group_model(5).elements) == 50

    def test_dihedral_types_degree10(self):
        expected = {
            FactorType([10]),
            FactorType([5, 5]),
            FactorType([2, 2, 2, 2, 2]),
            FactorType([2, 2, 2, 2, 1, 1]),
            FactorType([1] * 10),
        }
        assert dihedral_admissible_types(10) == expected

    def test_dihedral_types_degree5(self):
        expected = {FactorType([5]), FactorType([2, 2, 1]), FactorType([1] * 5)}
        assert dihedral_admissible_types(5) == expected

    def test_cyclic_types_degree5(self):
        assert cyclic_admissible_types(5) == {FactorType([5]), FactorType([1] * 5)}

    def test_full_cycle_type(self):
        assert full_cycle_type(5) == FactorType([5, 1, 1, 1, 1, 1])

    def test_scan_types_lie_in_wreath_model(self):
        model = wreath_group_model(5)
        admissible = wreath_admissible_types(model)
        result = scan_primes(F_WREATH_N5, None, 60)
        assert result.log
        for _p, t in result.log:
            assert t in admissible

    def test_primes_generator(self):
        gen = primes()
        assert [next(gen) for _ in range(10)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
