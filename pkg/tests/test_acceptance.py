"""The twelve acceptance criteria, each checked by exact equality.

Run with ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""

import itertools
import random
import time
from math import comb, factorial

import pytest

from charlier_gf.charlier import (
    charlier_C,
    charlier_classical,
    derangement_poly,
    derangement_poly2,
    rising_factorial,
    stirling_cycle,
)
from charlier_gf.configs import (
    Type3,
    classify,
    components,
    count_configs,
    enumerate_configs,
    enumerate_H,
    expand_type3,
    extract_insertions,
    multilinear_ring,
    reduce_type3,
    superpose,
)
from charlier_gf.identities import (
    LHS,
    REGISTRY,
    RHS,
    build_bilinear_side,
    build_carlitz_side,
    build_derangement_side,
    build_multilinear_side,
    build_trilinear_side,
    multilinear_as_multivariate,
    oracle_compare,
    verify,
)
from charlier_gf.polyring import ParamSet

from test_configs import check_taxonomy
from worked_examples import eighteen_point_tuple, random_insertions, random_reduced

AR = ParamSet(("a", "r"))
BIL = ParamSet(("a", "b", "r", "s"))
DER = ParamSet(("alpha", "beta"))


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start


def assert_verified(report):
    assert report.verified, report.to_text(timing=False)


@pytest.mark.criterion(1, "egf identity, symbolic to order 10, under 1 s")
def test_criterion_01_egf():
    report, seconds = timed(verify, "egf", 10)
    assert_verified(report)
    assert seconds < 1


@pytest.mark.criterion(2, "bilinear identity, symbolic order 6 and random 20 points order 8")
def test_criterion_02_bilinear():
    report, seconds = timed(verify, "bilinear", 6)
    assert_verified(report)
    assert seconds < 30
    report, seconds = timed(verify, "bilinear", 8, mode="random", points=20, seed=0)
    assert_verified(report)
    assert report.points == 20
    assert seconds < 30


@pytest.mark.criterion(3, "multilinear identity, k=2 order 6 matching bilinear, k=3 order 4")
def test_criterion_03_multilinear():
    assert_verified(verify("multilinear", 6, k=2))
    renaming = {"a1": BIL.var("a"), "a2": BIL.var("b"), "r1": BIL.var("r"), "r2": BIL.var("s")}
    for side in (LHS, RHS):
        multi = multilinear_as_multivariate(build_multilinear_side(side, 2, 6), 2, ("x",))
        assert multi.subs_params(renaming, BIL) == build_bilinear_side(side, 6)
    report, seconds = timed(verify, "multilinear", 4, k=3)
    assert_verified(report)
    assert len(build_multilinear_side(LHS, 3, 4).ring.names) == 9
    assert seconds < 300


@pytest.mark.criterion(4, "trilinear identity, random 20 points order 5 and symbolic order 4")
def test_criterion_04_trilinear():
    report = verify("trilinear", 5, mode="random", points=20, seed=0)
    assert_verified(report)
    assert report.points == 20
    assert_verified(verify("trilinear", 4))


@pytest.mark.criterion(5, "carlitz and bilinear-general to order 4, carlitz is the x=0 slice")
def test_criterion_05_carlitz_and_general():
    assert_verified(verify("carlitz", 4))
    assert_verified(verify("bilinear-general", 4))
    for side in (LHS, RHS):
        assert build_trilinear_side(side, 4).set_zero("x") == build_carlitz_side(side, 4)


@pytest.mark.criterion(6, "derangement identities and the bilinear substitution")
def test_criterion_06_derangements():
    assert_verified(verify("derangement-bilinear", 6))
    assert_verified(verify("derangement-trilinear", 5))
    assert_verified(verify("derangement-bilinear-general", 4))
    al, be = DER.vars()
    values = {"a": al, "b": be, "r": -al, "s": -be}
    for side in (LHS, RHS):
        assert build_bilinear_side(side, 6, values) == build_derangement_side(side, 6)


@pytest.mark.criterion(7, "configuration oracle for n=0..7, under 1 min")
def test_criterion_07_oracle_config():
    start = time.perf_counter()
    for n in range(8):
        assert_verified(oracle_compare("config", n=n))
        expected = sum(comb(n, m) * factorial(m) for m in range(n + 1))
        assert count_configs(n) == expected
        assert sum(1 for _ in enumerate_configs(range(1, n + 1))) == expected
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(8, "H oracle, k=2 for n=0..6 and k=3 for n=0..4, under 10 min")
def test_criterion_08_oracle_H():
    start = time.perf_counter()
    for n in range(7):
        assert_verified(oracle_compare("H", k=2, n=n))
    for n in range(5):
        assert_verified(oracle_compare("H", k=3, n=n))
    assert time.perf_counter() - start < 600


@pytest.mark.criterion(9, "component taxonomy and weight factorization over H")
def test_criterion_09_taxonomy():
    for k, top in ((2, 5), (3, 3)):
        ring = multilinear_ring(k)
        for n in range(top + 1):
            for t in enumerate_H(k, n):
                check_taxonomy(t, ring)


@pytest.mark.criterion(10, "reduce/expand round trip on 500 cases and the 18-point tuple")
def test_criterion_10_round_trip():
    rng = random.Random(500)
    for _ in range(500):
        k, d = random_reduced(rng)
        ins = random_insertions(rng, k, d)
        assert reduce_type3(expand_type3(d, ins)) == d
    type3 = [c for c in components(superpose(eighteen_point_tuple())) if classify(c) == Type3()]
    assert type3
    for comp in type3:
        assert expand_type3(reduce_type3(comp), extract_insertions(comp)) == comp


def brute_derangements(n):
    return sum(all(p[i] != i for i in range(n)) for p in itertools.permutations(range(n)))


@pytest.mark.criterion(11, "structural identities for Stirling numbers, C_n, D_n and derangements")
def test_criterion_11_structural():
    a, r = AR.vars()
    for n in range(11):
        stirling_sum = sum((stirling_cycle(n, k) * a**k for k in range(n + 1)), AR.zero())
        assert stirling_sum == rising_factorial(a, n) == charlier_C(n, a, 0)
    for n in range(9):
        # C_n(a, r) = D_n(a, a + r), read off from D_n(alpha, u)
        assert derangement_poly2(n).subs({"alpha": a, "u": a + r}, AR) == charlier_C(n, a, r)
        assert charlier_classical(n, -a, r) == charlier_C(n, a, r)
    expected = [1, 0, 1, 2, 9, 44, 265]
    assert [charlier_C(n, 1, -1).constant_term() for n in range(7)] == expected
    assert [derangement_poly(n).eval({"alpha": 1}) for n in range(7)] == expected
    assert [brute_derangements(n) for n in range(7)] == expected


@pytest.mark.criterion(12, "dropping the prefactor from any RHS builder is caught at degree 1")
@pytest.mark.parametrize("ident", sorted(REGISTRY))
def test_criterion_12_mutation(ident):
    report = verify(ident, 3, drop_prefactor=True)
    assert not report.verified
    assert report.first_mismatch["total_degree"] == 1
    assert report.to_dict(timing=False)["mismatches"][0]["degree"]
