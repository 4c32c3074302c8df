import itertools
from collections import Counter

import pytest

from charlier_gf.charlier import (
    EnumerationCapError,
    charlier_C,
    charlier_classical,
    derangement_poly,
    derangement_poly2,
    rising_factorial,
    stirling_cycle,
)
from charlier_gf.polyring import ParamSet

AR = ParamSet(("a", "r"))
a, r = AR.vars()
AU = ParamSet(("alpha", "u"))
alpha, u = AU.vars()


def brute_cycle_counts(n):
    counts = Counter()
    for perm in itertools.permutations(range(n)):
        seen, cycles = set(), 0
        for i in range(n):
            if i not in seen:
                cycles += 1
                while i not in seen:
                    seen.add(i)
                    i = perm[i]
        counts[cycles] += 1
    return counts


def test_rising_factorial_examples():
    assert rising_factorial(a, 0) == AR.one()
    assert rising_factorial(a, 2) == a**2 + a
    assert rising_factorial(3, 2) == 12
    with pytest.raises(ValueError):
        rising_factorial(a, -1)


def test_rising_factorial_recurrence():
    for m in range(8):
        assert rising_factorial(a + r, m + 1) == rising_factorial(a + r, m) * (a + r + m)


def test_stirling_examples():
    assert stirling_cycle(0, 0) == 1
    assert stirling_cycle(3, 2) == 3
    assert stirling_cycle(3, 5) == 0
    assert stirling_cycle(3, -1) == 0


@pytest.mark.parametrize("n", range(8))
def test_stirling_against_permutations(n):
    counts = brute_cycle_counts(n)
    assert [stirling_cycle(n, k) for k in range(n + 1)] == [counts[k] for k in range(n + 1)]


@pytest.mark.parametrize("n", range(11))
def test_cycle_generating_polynomial(n):
    lhs = sum((stirling_cycle(n, k) * a**k for k in range(n + 1)), AR.zero())
    assert lhs == rising_factorial(a, n)


def test_charlier_examples():
    assert charlier_C(0, a, r) == AR.one()
    assert charlier_C(1, a, r) == r + a
    assert charlier_C(2, a, r) == r**2 + 2 * a * r + a**2 + a
    for n in range(9):
        assert charlier_C(n, 0, 1) == 1
    with pytest.raises(ValueError):
        charlier_C(-1, a, r)


def test_charlier_accepts_names():
    assert charlier_C(3) == charlier_C(3, a, r)


def test_classical_examples():
    assert charlier_classical(0, a, r) == AR.one()
    assert charlier_classical(1, a, r) == r - a
    with pytest.raises(ValueError):
        charlier_classical(-2, a, r)


@pytest.mark.parametrize("n", range(9))
def test_renormalization(n):
    assert charlier_classical(n, -a, r) == charlier_C(n, a, r)


def test_derangement_examples():
    assert derangement_poly2(0) == AU.one()
    assert derangement_poly2(2) == u**2 + alpha
    A = ParamSet(("alpha",))
    assert derangement_poly(0) == A.one()
    assert derangement_poly(1) == A.zero()
    assert derangement_poly(3) == 2 * A.var("alpha")
    assert derangement_poly(4).eval({"alpha": 1}) == 9


def test_derangement_cap():
    with pytest.raises(EnumerationCapError):
        derangement_poly2(11)
    assert derangement_poly2(3, cap=3) == derangement_poly2(3)


@pytest.mark.parametrize("n", range(9))
def test_derangement_vs_charlier(n):
    assert derangement_poly2(n) == charlier_C(n, alpha, u - alpha)
    D_shift = derangement_poly2(n).subs({"alpha": a, "u": a + r}, AR)
    assert D_shift == charlier_C(n, a, r)


def derangement_numbers(n_max):
    # D_n = (n - 1)(D_{n-1} + D_{n-2})
    seq = [1, 0]
    for n in range(2, n_max + 1):
        seq.append((n - 1) * (seq[-1] + seq[-2]))
    return seq[: n_max + 1]


def test_derangement_numbers():
    expected = [1, 0, 1, 2, 9, 44, 265]
    assert derangement_numbers(6) == expected
    assert [derangement_poly(n).eval({"alpha": 1}) for n in range(7)] == expected
    assert [charlier_C(n, 1, -1) for n in range(7)] == expected
