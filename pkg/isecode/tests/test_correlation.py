# isecode/tests/test_correlation.py

from itertools import product
import pytest
from isecode.Models.family import Family, closure_P
from isecode.Models.word import SpaceParams, SymbolSet, TVector
from isecode.Utils.correlation import (
    check_correlation, check_submultiplicativity, disjoint_patterns, exhaustive_correlation,
    random_complete_family, run_correlation_campaign, slice_identity_check,
)
from isecode.Utils.errors import ParameterError, PreconditionError

ONE, TWO = SymbolSet.of(1), SymbolSet.of(2)


def test_full_families_are_tight():
    full = Family.full(SpaceParams(s=3, n=2))
    check = check_correlation(full, full, ONE, TWO)
    assert (check.lhs, check.rhs, check.slack) == (81, 81, 0)


def test_base_case_equality():
    params = SpaceParams(s=3, n=1)
    check = check_correlation(Family.from_texts(params, ["1"]), Family.full(params), ONE, TWO)
    assert (check.lhs, check.rhs, check.slack) == (3, 3, 0)


def test_empty_family_is_trivial():
    params = SpaceParams(s=3, n=2)
    check = check_correlation(Family.empty(params), Family.full(params), ONE, TWO)
    assert check.slack == 0 and check.holds


def test_check_requires_completeness():
    params = SpaceParams(s=2, n=2)
    with pytest.raises(PreconditionError) as err:
        check_correlation(Family.from_texts(params, ["21"]), Family.full(params), ONE, TWO)
    assert err.value.extra["family"] == "F"


def test_check_requires_disjoint_sets():
    full = Family.full(SpaceParams(s=3, n=1))
    with pytest.raises(ParameterError):
        check_correlation(full, full, SymbolSet.of(1, 2), TWO)


def test_random_complete_family():
    params = SpaceParams(s=3, n=3)
    assert random_complete_family(params, ONE, 0, seed=1).size == 0
    assert random_complete_family(params, ONE, 1, seed=1) == Family.full(params)
    first = random_complete_family(params, ONE, "1/4", seed=[5, 6])
    assert first == random_complete_family(params, ONE, "1/4", seed=[5, 6])
    assert closure_P(first, ONE) == first


def test_exhaustive_base_case():
    assert all(check.holds for check in exhaustive_correlation(2, ONE, TWO))
    checks = exhaustive_correlation(3, ONE, TWO)
    assert checks and all(check.holds for check in checks)
    for check in checks:
        if check.size_FG == 0:
            assert check.slack == check.lhs


@pytest.mark.parametrize("s", [2, 3])
def test_exhaustive_every_pattern(s):
    for P, Q in disjoint_patterns(s):
        assert all(check.holds for check in exhaustive_correlation(s, P, Q))
        assert all(check.holds for check in exhaustive_correlation(s, Q, P))


def test_exhaustive_limits():
    with pytest.raises(ParameterError):
        exhaustive_correlation(4, ONE, TWO)
    with pytest.raises(ParameterError):
        exhaustive_correlation(3, ONE, TWO, n=2)


def test_disjoint_patterns():
    assert [(str(P), str(Q)) for P, Q in disjoint_patterns(2)] == [("{1}", "{2}")]
    assert [(str(P), str(Q)) for P, Q in disjoint_patterns(3)] == [("{1}", "{2}"), ("{1}", "{2,3}")]
    assert len(disjoint_patterns(4)) == 4


def test_slice_identity_examples():
    params = SpaceParams(s=3, n=2)
    F = closure_P(Family.from_texts(params, ["31"]), ONE)
    G = closure_P(Family.from_texts(params, ["12"]), TWO)
    report = slice_identity_check(F, G, ONE, TWO)
    assert report.ok, report.violations
    assert report.f == [3, 0, 0] and report.g == [0, 3, 0]
    assert report.f[1] == report.f[2] == report.f_common
    full = Family.full(params)
    report = slice_identity_check(full, full, ONE, TWO)
    assert report.ok and report.f == [3, 3, 3]


def test_slice_identity_needs_two_positions():
    full = Family.full(SpaceParams(s=3, n=1))
    with pytest.raises(ParameterError):
        slice_identity_check(full, full, ONE, TWO)


def test_slice_identity_randomized():
    for n in (2, 3, 4):
        params = SpaceParams(s=3, n=n)
        for seed in range(100):
            P, Q = disjoint_patterns(3)[seed % 2]
            F = random_complete_family(params, P, "1/8", seed=[seed, 1])
            G = random_complete_family(params, Q, "1/8", seed=[seed, 2])
            assert slice_identity_check(F, G, P, Q).ok


def test_campaign_is_reproducible():
    first = run_correlation_campaign(3, 2, trials=30, seed=11)
    again = run_correlation_campaign(3, 2, trials=30, seed=11, workers=2)
    assert first == again
    assert first.trials == 60 and first.violations == 0
    assert first.min_slack == min(trial.slack for trial in first.results)


@pytest.mark.slow
@pytest.mark.parametrize("s,n", list(product([2, 3], [2, 3, 4])))
def test_campaign_finds_no_violation(s, n):
    report = run_correlation_campaign(s, n, trials=1000, seed=20240611)
    assert report.trials == 1000 * len(disjoint_patterns(s))
    assert report.violations == 0
    assert report.min_slack >= 0


def test_submultiplicativity_example():
    report = check_submultiplicativity(3, 3, TVector.of(1, 1, 0))
    assert report.holds
    assert [split.r for split in report.splits] == [1, 2]


@pytest.mark.slow
def test_submultiplicativity_for_three_symbols():
    for n in range(1, 5):
        for t in product(range(n + 1), repeat=3):
            if sum(t) <= n:
                report = check_submultiplicativity(n, 3, TVector(t=t))
                assert report.holds, (n, t)
