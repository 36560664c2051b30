"""End-to-end runs beyond the worked reference examples."""

import pytest

from cycgal import (
    ConstructionParams,
    Mat2,
    Poly,
    QuadRat,
    certify_wreath,
    construct_f1,
    cyclic_admissible_types,
    dihedral_resolvent,
    field_spec,
    verify_cyclic,
)

from refdata import all_params


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 10, 12])
def test_cyclic_certificates_for_all_reference_constructions(n):
    params = all_params()[n]
    f1 = construct_f1(params).f1
    cert = verify_cyclic(f1, params.A, prime_budget=300)
    assert cert.ok, cert.failure
    assert len(cert.zero_exprs) == n - 1


def _searched_n5(C):
    spec = field_spec(5)
    A = Mat2(
        QuadRat.of(0, 0, 5), QuadRat.of(-1, -1, 5),
        QuadRat.of(-1, 1, 5), QuadRat.of(-1, -1, 5),
    )
    return ConstructionParams(spec=spec, A=A, C=C)


def test_fresh_searched_parameters_run_the_whole_pipeline():
    # a height-1 search hit, nowhere in the reference data; its conjugate
    # product is monic, so the dihedral route applies end to end
    params = _searched_n5(QuadRat.rational(-1, 5))
    f1 = construct_f1(params).f1
    assert verify_cyclic(f1, params.A).ok
    report = certify_wreath(f1, params.A, prime_budget=150)
    assert report.complete
    assert report.f.lc == QuadRat.rational(1)
    res = dihedral_resolvent(report, params.A, prec=256)
    assert res.ok and res.power == 1
    assert res.g.degree == 5
    # determinism regression: the pipeline is exact up to the verified rounding
    assert res.g == Poly(list(reversed([1, -1, -184, 129, 4551, 3340])), 1)


def test_degenerate_choice_is_refused_not_rubber_stamped():
    # with C = 0 the same matrix yields an irreducible degree-10 product whose
    # factorization types stay inside the cyclic-group set: the splitting
    # field is too small for the wreath structure, and certification must
    # honestly report that no witness type exists
    params = _searched_n5(QuadRat.rational(0, 5))
    f1 = construct_f1(params).f1
    report = certify_wreath(f1, params.A, prime_budget=150)
    assert not report.complete
    assert "no prime with type" in report.reason
    assert report.irreducibility.passed  # f itself is irreducible over Q
    cyclic10 = cyclic_admissible_types(10)
    observed = list(report.irreducibility.log) + list(report.scan.log)
    assert observed
    for _p, t in observed:
        assert t in cyclic10
