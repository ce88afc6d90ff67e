import random
from itertools import combinations

import pytest

from gtlab.errors import CapExceeded, GammaUndefined
from gtlab.forest import Forest, NotATree, disjoint_union
from gtlab.oracle import (
    SetFamily,
    brute_gamma_t,
    check_lemma1,
    is_total_dominating,
    satisfies_lemma1_conditions,
)
from gtlab.treegen import gen_trees

from conftest import naive_total_dominating_sets, path, random_forest, star


def test_is_total_dominating_examples():
    p4 = path(4)
    assert is_total_dominating(p4, {1, 2})
    assert not is_total_dominating(p4, {0, 1})
    k2 = path(2)
    assert is_total_dominating(k2, {0, 1})
    assert not is_total_dominating(k2, {0})


def test_brute_k2():
    assert brute_gamma_t(path(2)) == (2, 1, SetFamily(((0, 1),), 2))


def test_brute_star_k13():
    size, count, family = brute_gamma_t(star(4, center=1))
    assert (size, count) == (2, 3)
    assert family.sets == ((0, 1), (1, 2), (1, 3))


def test_brute_p6_matches_plain_enumeration():
    size, count, family = brute_gamma_t(path(6))
    k, sets = naive_total_dominating_sets(path(6))
    assert (size, count) == (k, len(sets)) == (4, 4)
    assert family.sets == tuple(sorted(sets))


def test_brute_errors():
    with pytest.raises(GammaUndefined):
        brute_gamma_t(Forest.from_edges(1, []))
    with pytest.raises(GammaUndefined):
        brute_gamma_t(Forest.from_edges(0, []))
    with pytest.raises(CapExceeded):
        brute_gamma_t(path(23))
    assert brute_gamma_t(path(6), cap=6)[1] == 4


def test_family_properties_on_random_forests():
    rng = random.Random(7)
    for _ in range(150):
        f = random_forest(rng, max_n=12)
        size, count, family = brute_gamma_t(f)
        assert count == len(family) == len(set(family.sets))
        assert all(len(s) == size and is_total_dominating(f, s) for s in family.sets)
        assert not any(is_total_dominating(f, c) for c in combinations(range(f.n), size - 1))
        k, naive = naive_total_dominating_sets(f)
        assert (k, sorted(naive)) == (size, list(family.sets))


def test_component_multiplicativity():
    rng = random.Random(11)
    for _ in range(60):
        a, b = random_forest(rng, max_n=7), random_forest(rng, max_n=7)
        ga, ca, _ = brute_gamma_t(a)
        gb, cb, _ = brute_gamma_t(b)
        g, c, _ = brute_gamma_t(disjoint_union(a, b))
        assert (g, c) == (ga + gb, ca * cb)


def test_set_family_validation():
    fam = SetFamily.from_sets([[3, 1], [0, 2], [1, 3]], 2)
    assert fam.sets == ((0, 2), (1, 3))
    assert fam.to_json() == [[0, 2], [1, 3]]
    with pytest.raises(ValueError):
        SetFamily.from_sets([[1, 2, 3]], 2)


def _brute_packing(t):
    best = 0
    for k in range(t.n + 1):
        if any(satisfies_lemma1_conditions(t, b) for b in combinations(range(t.n), k)):
            best = k
    return best


def test_lemma1_examples():
    assert check_lemma1(path(2))[0] == 1
    assert check_lemma1(star(5))[0] == 1
    size, witness = check_lemma1(path(6))
    # members must be pairwise at distance >= 3, so P6 fits only two
    assert size == _brute_packing(path(6)) == 2
    assert satisfies_lemma1_conditions(path(6), witness) and len(witness) == 2


def test_lemma1_agrees_with_plain_enumeration():
    for n in range(2, 9):
        for t in gen_trees(n):
            f = t.to_forest()
            size, witness = check_lemma1(f)
            assert size == _brute_packing(f)
            assert satisfies_lemma1_conditions(f, witness)


def test_lemma1_errors():
    with pytest.raises(NotATree):
        check_lemma1(disjoint_union(path(2), path(2)))
    with pytest.raises(CapExceeded):
        check_lemma1(path(17))
