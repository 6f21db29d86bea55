"""
B-tree enumeration against the Prüfer-code oracle, tree statistics, and the
polynomial identities built on them.
"""

import pytest
from hypothesis import given, settings

from conftest import building_sets
from qhpoly.btrees import (
    BTree, check_involution_palindromicity, descendant_set, enumerate_btrees,
    f_vector, h_combined, h_polynomial, omega_tree, tree_stats, validate_btree,
)
from qhpoly.buildsets import apply_involution, family, validate
from qhpoly.combinat import euler_mahonian
from qhpoly.errata import parse_poly as P
from qhpoly.errors import NotConnected, NotOmegaInvariant, OverlappingSupports
from qhpoly.oracles import brute_force_btrees, catalan
from qhpoly.polyring import evaluate, is_palindromic_in_t, specialize

BROOM_TREE = BTree(1, tuple(sorted([(8, 1), (4, 8), (5, 4), (2, 5), (3, 5), (6, 5), (7, 5)])))


def tree(root, *edges):
    return BTree(root, tuple(sorted(edges)))


def as_pairs(trees):
    return {(T.root, T.edges) for T in trees}


def test_descendant_sets():
    assert descendant_set(BROOM_TREE, 1) == frozenset(range(1, 9))
    assert descendant_set(BROOM_TREE, 6) == {6}
    assert descendant_set(BROOM_TREE, 5) == {5, 2, 3, 6, 7}


def test_validate_btree_examples():
    P3 = family("path", 3)
    assert validate_btree(P3, tree(2, (1, 2), (3, 2)))
    assert validate_btree(P3, tree(1, (3, 1), (2, 3)))
    # {2} and {3} hang from 1, but {2,3} is a member
    assert not validate_btree(P3, tree(1, (2, 1), (3, 1)))
    seg = family("simplex", 2)
    assert validate_btree(seg, tree(1, (2, 1))) and validate_btree(seg, tree(2, (1, 2)))


def test_validate_btree_needs_three_sibling_union():
    # pairwise unions of {1},{2},{3} are not members but the triple is
    B = validate(4, [[1], [2], [3], [4], [1, 2, 3], [1, 2, 3, 4]])
    assert not validate_btree(B, tree(4, (1, 4), (2, 4), (3, 4)))


def test_enumerate_counts():
    assert len(list(enumerate_btrees(family("path", 3)))) == 5
    snk33 = list(enumerate_btrees(family("snk", 3, 3)))
    assert len(snk33) == 3 and all(len(T.children[T.root]) == 2 for T in snk33)
    assert len(list(enumerate_btrees(family("simplex", 2)))) == 2
    with pytest.raises(NotConnected):
        list(enumerate_btrees(validate(2, [[1], [2]])))


def test_enumeration_order_is_deterministic():
    first = [T.to_json() for T in enumerate_btrees(family("path", 4))]
    assert first == [T.to_json() for T in enumerate_btrees(family("path", 4))]
    roots = [T.root for T in enumerate_btrees(family("path", 4))]
    assert roots == sorted(roots)


def test_tree_stats_examples():
    assert tree_stats(BROOM_TREE)[:2] == (4, 8)
    assert tree_stats(tree(1, (2, 1), (3, 2)))[:2] == (2, 3)
    n = 5
    star = tree(n, *[(i, n) for i in range(1, n)])
    assert tree_stats(star) == (0, 0, 1, n - 1)


def test_h_polynomial_examples():
    assert h_polynomial(family("complete", 3)) == P("1 + 2*t*q + 2*t*q^2 + t^2*q^3")
    assert h_polynomial(family("path", 3)) == P("1 + 2*t*q + t*q^2 + t^2*q^3")
    assert h_polynomial(family("star", 2)) == P("1 + t*q + 2*t*q^2 + t^2*q^3")
    with pytest.raises(ValueError):
        h_polynomial(family("path", 3), "qt")


def test_f_vector_examples():
    assert f_vector(family("complete", 3)) == [6, 6, 1]
    assert f_vector(family("path", 3)) == [5, 5, 1]
    assert f_vector(family("simplex", 2)) == [2, 1]
    assert f_vector(family("complete", 4)) == [24, 36, 14, 1]


def test_involution_examples():
    for n in range(1, 6):
        assert check_involution_palindromicity(family("path", n))[0]
        for k in range(2, n + 1):
            assert check_involution_palindromicity(family("snk", n, k))[0]
    with pytest.raises(NotOmegaInvariant):
        check_involution_palindromicity(family("stanley_pitman", 3))


def test_h_combined_examples():
    seg1 = family("simplex", 2)
    seg2 = validate({3, 4}, [[3], [4], [3, 4]])
    direct, formula = h_combined([seg1, seg2])
    assert direct == formula == P("1 + 3*t + 3*t^2 + t^3")
    direct, formula = h_combined([family("path", 3)])
    assert direct == formula == h_polynomial(family("path", 3), "t")
    singles = [validate({i}, [[i]]) for i in (1, 2, 3)]
    direct, formula = h_combined(singles)
    assert direct == formula == P("1 + t + t^2")
    with pytest.raises(OverlappingSupports):
        h_combined([seg1, seg1])


@pytest.mark.parametrize("name,n,k", [
    ("path", 4, None), ("snk", 4, 3), ("star", 3, None), ("complete", 4, None),
    ("stanley_pitman", 4, None), ("simplex", 4, None),
])
def test_enumeration_matches_brute_force(name, n, k):
    B = family(name, n, k)
    got = as_pairs(enumerate_btrees(B))
    assert got == brute_force_btrees(B)
    assert got == brute_force_btrees(B, lambda B_, r, par: validate_btree(B_, BTree.from_parent(r, par)))


@settings(max_examples=25)
@given(building_sets(max_n=5, connected=True))
def test_enumeration_matches_brute_force_random(B):
    trees = list(enumerate_btrees(B))
    assert len(trees) == len(as_pairs(trees))
    assert as_pairs(trees) == brute_force_btrees(B)


@given(building_sets(max_n=6, connected=True))
def test_specialization_chain_and_counts(B):
    h3 = h_polynomial(B, "tqu")
    h2 = h_polynomial(B, "tq")
    h1 = h_polynomial(B, "t")
    assert specialize(h3, "u") == h2 and specialize(h2, "q") == h1
    assert evaluate(h3) == len(list(enumerate_btrees(B))) == f_vector(B)[0]
    assert is_palindromic_in_t(h1, B.n - 1)


@given(building_sets(max_n=6, connected=True))
def test_per_tree_bounds_and_omega_pairing(B):
    invariant = apply_involution(B) == B
    for T in enumerate_btrees(B):
        s = tree_stats(T)
        assert 0 <= s.des <= B.n - 1
        assert s.maj <= s.des * s.depth and s.maj <= s.mu
        if invariant:
            W = omega_tree(T, B.n)
            assert validate_btree(B, W)
            assert s.maj + tree_stats(W).maj == s.mu


@pytest.mark.parametrize("n", range(1, 8))
def test_permutohedron(n):
    assert h_polynomial(family("complete", n)) == euler_mahonian(n)
    assert evaluate(h_polynomial(family("path", n))) == catalan(n)
