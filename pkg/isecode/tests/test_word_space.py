# isecode/tests/test_word_space.py

from itertools import product
import pytest
from isecode.Models.word import (
    SpaceParams, SymbolSet, TVector, decode, encode, is_word_t_intersecting, leq_P, make_word, meet, profile,
    satisfies, symbol_matrix, word_from_text, word_to_text,
)
from isecode.Utils.errors import CapacityError, ParameterError


def w(s, *symbols):
    return make_word(SpaceParams(s=s, n=len(symbols)), symbols)


def test_space_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        SpaceParams(s=1, n=3)
    with pytest.raises(ParameterError):
        SpaceParams(s=3, n=0)


def test_space_respects_lowered_cap(lowered_cap):
    assert SpaceParams(s=3, n=4).size == 81
    with pytest.raises(CapacityError):
        SpaceParams(s=3, n=5)


def test_word_rejects_out_of_range_symbols():
    params = SpaceParams(s=3, n=2)
    with pytest.raises(ParameterError):
        make_word(params, (1, 4))
    with pytest.raises(ParameterError):
        make_word(params, (1, 2, 3))


def test_meet_examples():
    assert meet(w(3, 1, 2, 3), w(3, 1, 3, 3)).entries == (1, 0, 3)
    y = w(3, 2, 1, 3)
    assert meet(y, y).entries == y.symbols
    assert meet(w(2, 1, 1), w(2, 2, 2)).entries == (0, 0)


def test_meet_dimension_mismatch():
    with pytest.raises(ParameterError):
        meet(w(3, 1, 2), w(3, 1, 2, 3))


def test_profile_examples():
    assert profile(w(3, 1, 2, 3), w(3, 1, 3, 3)).counts == (1, 0, 1)
    assert profile(w(3, 1, 1, 3), w(3, 1, 1, 3)).counts == (2, 0, 1)
    assert profile(w(2, 1, 1, 2), w(2, 1, 2, 1)).counts == (1, 0)


def test_satisfies_examples():
    y, z = w(3, 1, 2, 3), w(3, 1, 3, 3)
    assert satisfies(y, z, TVector.of(1, 0, 1))
    assert not satisfies(y, z, TVector.of(1, 1, 0))
    assert satisfies(y, y, TVector.of(1, 1, 1))
    assert not satisfies(y, y, TVector.of(2, 0, 0))


def test_satisfies_is_symmetric_and_monotone():
    params = SpaceParams(s=3, n=2)
    words = [make_word(params, symbols) for symbols in product(range(1, 4), repeat=2)]
    demands = [TVector(t=t) for t in product(range(3), repeat=3) if sum(t) <= 2]
    for y in words:
        for z in words:
            for t in demands:
                assert satisfies(y, z, t) == satisfies(z, y, t)
                for u in demands:
                    if all(a <= b for a, b in zip(t.t, u.t)) and satisfies(y, z, u):
                        assert satisfies(y, z, t)


def test_vector_demand_implies_classical_demand():
    y, z = w(3, 1, 2, 3, 3), w(3, 1, 2, 1, 3)
    assert satisfies(y, z, TVector.of(1, 1, 1))
    assert is_word_t_intersecting(y, z, 3)
    assert not is_word_t_intersecting(y, z, 4)


def test_leq_P_examples():
    P = SymbolSet.of(1)
    assert leq_P(w(2, 2, 1), w(2, 1, 1), P)
    assert not leq_P(w(2, 1, 1), w(2, 2, 1), P)
    x, y = w(3, 2, 3), w(3, 3, 2)
    assert leq_P(x, y, P) and leq_P(y, x, P)


def test_leq_P_rejects_whole_alphabet():
    with pytest.raises(ParameterError):
        leq_P(w(2, 1, 1), w(2, 1, 1), SymbolSet.of(1, 2))


@pytest.mark.parametrize("s", [2, 3])
def test_leq_P_reflexive_and_transitive(s):
    params = SpaceParams(s=s, n=2)
    words = [make_word(params, symbols) for symbols in product(range(1, s + 1), repeat=2)]
    for P in (SymbolSet.of(1), SymbolSet.of(*range(2, s + 1))):
        for x in words:
            assert leq_P(x, x, P)
            for y in words:
                for z in words:
                    if leq_P(x, y, P) and leq_P(y, z, P):
                        assert leq_P(x, z, P)


def test_leq_for_disjoint_sets_only_moves_outside_both():
    params = SpaceParams(s=3, n=2)
    words = [make_word(params, symbols) for symbols in product(range(1, 4), repeat=2)]
    P, Q = SymbolSet.of(1), SymbolSet.of(2)
    for x in words:
        for y in words:
            if leq_P(x, y, P) and leq_P(y, x, Q):
                changed = [j for j in range(2) if x.symbols[j] != y.symbols[j]]
                assert all(x.symbols[j] not in P and y.symbols[j] not in Q for j in changed)

def test_encode_examples():
    assert encode(w(3, 1, 1, 1)) == 0
    assert encode(w(2, 2, 1)) == 1
    assert encode(w(3, 3, 3, 3)) == 26
    assert decode(5, SpaceParams(s=3, n=2)).symbols == (3, 2)


def test_decode_rejects_out_of_range():
    with pytest.raises(ParameterError):
        decode(9, SpaceParams(s=3, n=2))
    with pytest.raises(ParameterError):
        decode(-1, SpaceParams(s=3, n=2))


@pytest.mark.parametrize("s,n", [(s, n) for s in (2, 3) for n in range(1, 9)])
def test_encode_decode_bijection(s, n):
    params = SpaceParams(s=s, n=n)
    for index in range(params.size):
        assert encode(decode(index, params)) == index


def test_symbol_matrix_matches_decode():
    params = SpaceParams(s=3, n=3)
    M = symbol_matrix(range(params.size), params)
    for index in range(params.size):
        assert tuple(int(a) for a in M[index]) == decode(index, params).symbols


def test_text_form():
    params = SpaceParams(s=3, n=3)
    assert word_to_text(word_from_text("132", params)) == "132"
    assert str(make_word(params, (2, 2, 1))) == "221"
    with pytest.raises(ParameterError):
        word_from_text("1a2", params)


def test_t_vector_validation():
    with pytest.raises(ParameterError):
        TVector.of(1, -1)
    t = TVector.of(1, 2, 3)
    assert t.total == 6
    assert t.head(1).t == (1, 0, 0)
    assert t.tail(1).t == (0, 2, 3)
    with pytest.raises(ParameterError):
        t.check(SpaceParams(s=2, n=3))
