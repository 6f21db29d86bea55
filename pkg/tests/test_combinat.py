"""Permutation statistics, tree posets and braid-fan coarsenings."""

from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhpoly.combinat import (
    Poset, antichain, braid_fan_posets, chain, coarsened_braid_fan, dump_posets,
    euler_mahonian, load_posets, merged_cone_poset, minimal_rank, ordinal_sum,
    perm_stats, poset_stats, q_factorial, qh_from_posets, validate_tree_poset,
)
from qhpoly.errata import parse_poly as P
from qhpoly.errors import NotTreePoset
from qhpoly.polyring import specialize

# chain 1 > 8 > 4 > 5 sitting over the antichain 2, 3, 6, 7
BROOM_TREE = Poset.from_covers(8, [(2, 5), (3, 5), (6, 5), (7, 5), (5, 4), (4, 8), (8, 1)])


def test_perm_stats_5481_and_5418():
    # descent set {1,3}, two descents, major index 4 belongs to 5481
    assert perm_stats((5, 4, 8, 1)) == (frozenset({1, 3}), 2, 4)
    assert perm_stats((5, 4, 1, 8)) == (frozenset({1, 2}), 2, 3)


def test_perm_stats_small():
    assert perm_stats((1, 2, 3, 4)) == (frozenset(), 0, 0)
    assert perm_stats((3, 2, 1)) == (frozenset({1, 2}), 2, 3)
    assert perm_stats(()) == (frozenset(), 0, 0)


def test_euler_mahonian_small():
    assert euler_mahonian(1) == P("1")
    assert euler_mahonian(2) == P("1 + t*q")
    assert euler_mahonian(3) == P("1 + 2*t*q + 2*t*q^2 + t^2*q^3")


@pytest.mark.parametrize("n", range(1, 7))
def test_euler_mahonian_marginals(n):
    h = euler_mahonian(n)
    assert specialize(h, "t") == q_factorial(n)
    # Eulerian numbers are symmetric
    assert specialize(h, "q").t_coefficients() == specialize(h, "q").t_coefficients()[::-1]


def test_validate_tree_poset():
    assert validate_tree_poset(chain([1, 2, 3]))
    assert validate_tree_poset(Poset.from_covers(3, [(1, 2), (3, 2)]))
    assert not validate_tree_poset(Poset.from_covers(3, [(1, 2)]))
    # right count, but a cycle and an isolated point
    assert not validate_tree_poset(Poset.from_covers(4, [(1, 2), (2, 3), (1, 3)]))


def test_minimal_rank_examples():
    assert minimal_rank(chain([1, 2, 3])) == {1: 0, 2: 1, 3: 2}
    assert minimal_rank(Poset.from_covers(3, [(1, 2), (3, 2)])) == {1: 0, 2: 1, 3: 0}
    ranks = minimal_rank(BROOM_TREE)
    assert (ranks[1], ranks[8], ranks[4], ranks[5]) == (4, 3, 2, 1)
    assert all(ranks[x] == 0 for x in (2, 3, 6, 7))
    with pytest.raises(NotTreePoset):
        minimal_rank(Poset.from_covers(3, [(1, 2)]))


def test_minimal_rank_zigzag_shifts_to_zero():
    # 1 < 2 > 3 < 4: ranks are forced to alternate
    zigzag = Poset.from_covers(4, [(1, 2), (3, 2), (3, 4)])
    assert minimal_rank(zigzag) == {1: 0, 2: 1, 3: 0, 4: 1}


@given(st.permutations(range(1, 7)), st.data())
def test_minimal_rank_independent_of_start(word, data):
    # random tree poset: attach each element below or above an earlier one
    covers = []
    for i in range(1, len(word)):
        j = data.draw(st.integers(0, i - 1))
        covers.append((word[i], word[j]) if data.draw(st.booleans()) else (word[j], word[i]))
    P_ = Poset.from_covers(6, covers)
    base = minimal_rank(P_)
    assert min(base.values()) == 0
    assert all(base[b] == base[a] + 1 for a, b in P_.covers)
    for start in range(1, 7):
        assert minimal_rank(P_, start=start) == base


def test_poset_stats_examples():
    assert poset_stats(BROOM_TREE) == (4, 8)
    assert poset_stats(Poset.from_covers(3, [(2, 1), (3, 1)])) == (2, 2)
    assert poset_stats(chain([1, 2, 3])) == (0, 0)
    assert poset_stats(chain([2, 3, 1])) == (1, 2)


@pytest.mark.parametrize("word", list(permutations(range(1, 5))))
def test_chain_stats_match_word(word):
    # the i-th cover of a chain has its upper end at rank i
    _, des, maj = perm_stats(word)
    assert poset_stats(chain(word)) == (des, maj)


def test_ordinal_sum():
    v = ordinal_sum(antichain([1, 2]), chain([3]))
    assert v.covers == {(1, 3), (2, 3)}
    assert ordinal_sum(chain([1]), chain([2])) == chain([1, 2])
    shape = ordinal_sum(antichain([1, 2, 3, 4]), chain([5, 6, 7, 8]))
    assert validate_tree_poset(shape) and len(shape.covers) == 7
    with pytest.raises(ValueError):
        ordinal_sum(chain([1]), chain([1]))


def test_qh_from_posets():
    assert qh_from_posets(braid_fan_posets(3)) == euler_mahonian(3)
    assert qh_from_posets([chain([1, 2, 3])]) == P("1")
    with pytest.raises(NotTreePoset) as info:
        qh_from_posets([chain([1, 2]), Poset.from_covers(3, [(1, 2)])])
    assert info.value.index == 1


def test_braid_fan_posets_small():
    assert braid_fan_posets(2) == [chain([1, 2]), chain([2, 1])]
    assert braid_fan_posets(1) == [Poset(1, frozenset())]
    assert len(braid_fan_posets(3)) == 6


def test_coarsening_f2():
    merged = merged_cone_poset([(2, 3, 1), (3, 2, 1)])
    assert merged.covers == {(2, 1), (3, 1)}
    posets = coarsened_braid_fan(3, [[(2, 3, 1), (3, 2, 1)]])
    assert len(posets) == 5
    assert qh_from_posets(posets) == P("1 + 2*t*q + t*q^2 + t^2*q^2")


def test_coarsening_f1_differs_from_printed():
    posets = coarsened_braid_fan(3, [[(1, 3, 2), (3, 1, 2)]])
    assert merged_cone_poset([(1, 3, 2), (3, 1, 2)]).covers == {(1, 2), (3, 2)}
    h = qh_from_posets(posets)
    assert h == P("1 + 2*t*q + t*q^2 + t^2*q^3")
    assert h != P("1 + t*q + 2*t*q^2 + t^2*q^3")
    assert specialize(h, "q") == P("1 + 3*t + t^2")


def test_poset_file_round_trip():
    posets = braid_fan_posets(3) + [ordinal_sum(antichain([1, 2]), chain([3]))]
    assert load_posets(dump_posets(posets)) == posets
    with pytest.raises(ValueError, match="poset #0"):
        load_posets('[{"covers": [[1, 2]]}]')
