# isecode/tests/test_measures.py

from fractions import Fraction
import numpy as np
import pytest
from isecode.Models.family import SetFamily
from isecode.Models.word import TVector
from isecode.Utils.constructions import construct_Ftr
from isecode.Utils.errors import CapacityError, ParameterError, PreconditionError
from isecode.Utils.measures import (
    binomial_tail, bound_frankl_furedi, bound_majority, bound_thm4, bound_thm7, eq9_window, mu_p, mu_p_window,
    r_star, w,
)


def test_binomial_tail():
    assert binomial_tail(4, 0, Fraction(1, 3)) == 1
    assert binomial_tail(4, 5, Fraction(1, 3)) == 0
    assert binomial_tail(3, 2, Fraction(1, 2)) == Fraction(1, 2)


def test_mu_p_examples():
    assert mu_p(SetFamily.full(4), Fraction(2, 7)) == 1
    prefix = construct_Ftr(4, 2, 0)
    assert mu_p(prefix, Fraction(1, 3)) == Fraction(1, 9)
    assert mu_p(construct_Ftr(3, 1, 1), Fraction(1, 2)) == Fraction(1, 2)
    assert mu_p(SetFamily.empty(3), Fraction(1, 2)) == 0


def test_mu_p_normalization():
    rng = np.random.default_rng(7)
    for _ in range(20):
        den = int(rng.integers(2, 50))
        p = Fraction(int(rng.integers(0, den + 1)), den)
        assert mu_p(SetFamily.full(int(rng.integers(0, 8))), p) == 1


def test_mu_p_refuses_floats():
    with pytest.raises(ParameterError):
        mu_p(SetFamily.full(2), 0.5)


def test_mu_p_window_examples():
    third = Fraction(1, 3)
    assert mu_p_window(2, 0, third) == Fraction(1, 9)
    assert mu_p_window(2, 1, third) == Fraction(1, 9)
    assert mu_p_window(3, 1, third) == Fraction(11, 243)


def test_window_measure_ignores_outside_coordinates():
    for t in range(5):
        for r in range(4):
            for n in range(t + 2 * r, t + 2 * r + 5):
                if n > 10:
                    continue
                S = construct_Ftr(n, t, r)
                for p in (Fraction(1, 3), Fraction(1, 4), Fraction(2, 5)):
                    assert mu_p(S, p) == mu_p_window(t, r, p)


@pytest.mark.parametrize("t", range(2, 7))
def test_boundary_continuity(t):
    for r in range(5):
        p = Fraction(r + 1, t + 2 * r + 1)
        assert mu_p_window(t, r, p) == mu_p_window(t, r + 1, p)


def test_r_star():
    assert r_star(10, 2) == 4
    assert r_star(3, 3) == 0
    assert r_star(5, 3) == 1
    with pytest.raises(ParameterError):
        r_star(2, 3)


def test_w_examples():
    sel = w(4, 2, Fraction(1, 3))
    assert (sel.r, sel.value) == (0, Fraction(1, 9))
    sel = w(5, 3, Fraction(1, 3))
    assert (sel.r, sel.value) == (1, Fraction(11, 243))
    sel = w(4, 2, Fraction(1, 2))
    assert (sel.r, sel.r_star, sel.value) == (1, 1, Fraction(5, 16))


def test_w_small_t():
    assert w(3, 0, "1/3").value == 1
    assert w(3, 1, "1/3").value == Fraction(1, 3)


def test_w_rejects_large_p():
    with pytest.raises(ParameterError):
        w(4, 2, Fraction(2, 3))
    with pytest.raises(ParameterError):
        w(4, 2, 0)


@pytest.mark.parametrize("s", [3, 4, 5])
def test_w_matches_fixed_coordinates_below_s(s):
    for t in range(s):
        assert w(8, t, Fraction(1, s)).value == Fraction(1, s ** t)


@pytest.mark.parametrize("s", [3, 4])
def test_w_is_independent_of_n_past_the_window(s):
    for t in range(8):
        m = eq9_window(t, s)
        values = {w(n, t, Fraction(1, s)).value for n in range(max(m, t), m + 6)}
        assert len(values) == 1


def test_eq9_window_examples():
    assert eq9_window(3, 3) == 5
    assert eq9_window(1, 3) == 1
    assert eq9_window(2, 3) == 2
    with pytest.raises(ParameterError):
        eq9_window(2, 2)


@pytest.mark.parametrize("s", [3, 4])
def test_eq9_window_hosts_the_selected_window(s):
    for t in range(10):
        m = eq9_window(t, s)
        assert w(m + 10, t, Fraction(1, s)).window <= m


def test_bound_thm4():
    assert bound_thm4(3, 3, TVector.of(1, 1, 0)) == 3
    assert bound_thm4(2, 3, TVector.of(1, 0, 0)) == 3
    assert bound_thm4(4, 3, TVector.zeros(3)) == 81
    with pytest.raises(PreconditionError):
        bound_thm4(5, 3, TVector.of(3, 0, 0))
    with pytest.raises(ParameterError):
        bound_thm4(2, 3, TVector.of(1, 1, 1))


def test_bound_thm7():
    assert bound_thm7(3, 3, TVector.of(1, 1, 0)).words == 3
    five = bound_thm7(5, 3, TVector.of(3, 0, 0))
    assert (five.words, five.density) == (11, Fraction(11, 243))
    assert bound_thm7(5, 3, TVector.of(1, 1, 1)).words == 9


def test_bound_thm7_capacity_refusal():
    with pytest.raises(CapacityError) as err:
        bound_thm7(4, 3, TVector.of(3, 0, 0))
    assert err.value.extra["deficit"] == 1
    with pytest.raises(ParameterError):
        bound_thm7(4, 2, TVector.of(1, 1))


def test_bound_thm7_dominates_thm4():
    for t in [(1, 1, 0), (2, 1, 0), (1, 1, 1), (2, 2, 0)]:
        t = TVector(t=t)
        assert bound_thm7(6, 3, t).words >= bound_thm4(6, 3, t)
    assert bound_thm7(5, 3, TVector.of(3, 0, 0)).density > Fraction(1, 3 ** 3)


def test_classical_bounds():
    assert bound_frankl_furedi(4, 3, 2) == 9
    with pytest.raises(PreconditionError):
        bound_frankl_furedi(4, 2, 2)
    assert bound_majority(5) == 8
