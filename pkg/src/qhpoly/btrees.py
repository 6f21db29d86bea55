"""
B-tree enumeration and the h-polynomial engine.

Trees are built root first: choosing a root ``i`` splits the rest of the
ground set into the connected components of the restricted building set, and
every combination of component trees hangs below ``i``. Trees are streamed
one at a time; only sub-component tree lists are cached.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import comb
from typing import NamedTuple

from .buildsets import BuildingSet, apply_involution, combine, maximal_members
from .errors import BuildingSetError, NotConnected, NotOmegaInvariant
from .polyring import Polynomial, geometric_sum, reverse_transform

__all__ = [
    "BTree", "TreeStats", "descendant_set", "validate_btree", "enumerate_btrees",
    "tree_stats", "h_polynomial", "f_vector", "check_involution_palindromicity",
    "h_combined", "omega_tree", "MODES",
]

MODES = ("t", "tq", "tqu")


@dataclass(frozen=True)
class BTree:
    """Rooted tree stored as ``(child, parent)`` edges sorted by child."""

    root: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_parent(cls, root: int, parent: dict[int, int]) -> BTree:
        return cls(root, tuple(sorted(parent.items())))

    @cached_property
    def parent(self) -> dict[int, int]:
        return dict(self.edges)

    @cached_property
    def children(self) -> dict[int, tuple[int, ...]]:
        kids = defaultdict(list)
        for c, p in self.edges:
            kids[p].append(c)
        return {x: tuple(sorted(kids.get(x, ()))) for x in self.nodes}

    @cached_property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted({self.root, *(c for c, _ in self.edges)}))

    @cached_property
    def depths(self) -> dict[int, int]:
        """Vertex depth ``dp``, with ``dp(root) = 0``."""
        dp = {self.root: 0}
        stack = [self.root]
        kids = self.children
        while stack:
            x = stack.pop()
            for c in kids[x]:
                dp[c] = dp[x] + 1
                stack.append(c)
        return dp

    def to_json_obj(self) -> dict:
        return {"root": self.root, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


class TreeStats(NamedTuple):
    des: int
    maj: int
    depth: int
    mu: int


def descendant_set(T: BTree, i: int) -> frozenset[int]:
    """All ``j`` reachable from ``i`` going away from the root, ``i`` included."""
    out = {i}
    stack = [i]
    kids = T.children
    while stack:
        for c in kids[stack.pop()]:
            out.add(c)
            stack.append(c)
    return frozenset(out)


def _descendant_sets(T: BTree) -> dict[int, frozenset[int]]:
    below: dict[int, frozenset[int]] = {}
    order = sorted(T.nodes, key=lambda x: -T.depths[x])
    kids = T.children
    for x in order:
        s = {x}
        for c in kids[x]:
            s |= below[c]
        below[x] = frozenset(s)
    return below


def validate_btree(B: BuildingSet, T: BTree) -> bool:
    """Check both B-tree axioms.

    Incomparable nodes with a union in ``B`` always yield sibling subtrees
    whose union is in ``B`` (by union closure), so the second axiom is tested
    on sibling families only, over every subset of two or more siblings.
    """
    if set(T.nodes) != set(B.ground) or len(T.edges) != B.n - 1:
        return False
    if len(T.depths) != B.n:
        return False
    below = _descendant_sets(T)
    if any(s not in B.members for s in below.values()):
        return False
    for x in T.nodes:
        kids = T.children[x]
        if len(kids) < 2:
            continue
        # frontier of unions of nonempty sibling subfamilies seen so far
        frontier: set[frozenset[int]] = set()
        for c in kids:
            grown = {u | below[c] for u in frontier}
            if any(u in B.members for u in grown):
                return False
            frontier |= grown
            frontier.add(below[c])
    return True


def _enumerate(B: BuildingSet) -> Iterator[tuple[int, tuple[tuple[int, int], ...]]]:
    members = [m for m in B.members if len(m) > 1]
    comp_cache: dict[frozenset[int], list[frozenset[int]]] = {}
    tree_cache: dict[frozenset[int], list] = {}

    def comps(S: frozenset[int]) -> list[frozenset[int]]:
        got = comp_cache.get(S)
        if got is None:
            inside = [m for m in members if m <= S]
            covered = set().union(*inside) if inside else set()
            inside += [frozenset([x]) for x in S if x not in covered]
            got = comp_cache[S] = maximal_members(inside)
        return got

    def trees(S: frozenset[int]) -> list:
        got = tree_cache.get(S)
        if got is None:
            got = tree_cache[S] = list(rooted(S))
        return got

    def rooted(S: frozenset[int]):
        if len(S) == 1:
            (x,) = S
            yield x, ()
            return
        for root in sorted(S):
            parts = comps(S - {root})
            for combo in product(*(trees(p) for p in parts)):
                edges = [(sub_root, root) for sub_root, _ in combo]
                for _, sub_edges in combo:
                    edges.extend(sub_edges)
                yield root, tuple(edges)

    yield from rooted(B.support)


def enumerate_btrees(B: BuildingSet) -> Iterator[BTree]:
    """Stream every B-tree of a connected building set.

    Order: roots ascending, components by minimum element, then the
    lexicographic product of component trees.
    """
    if not B.connected:
        raise NotConnected("B-trees need a connected building set")
    for root, edges in _enumerate(B):
        yield BTree(root, tuple(sorted(edges)))


def tree_stats(T: BTree) -> TreeStats:
    dp = T.depths
    depth = max(dp.values())
    des = maj = mu = 0
    for c, p in T.edges:
        rank = depth - dp[p]
        mu += rank
        if c > p:
            des += 1
            maj += rank
    return TreeStats(des, maj, depth, mu)


def _raw_stats(root: int, edges: tuple[tuple[int, int], ...]) -> tuple[int, int, int]:
    # same as tree_stats, without building a BTree
    kids = defaultdict(list)
    for c, p in edges:
        kids[p].append(c)
    dp = {root: 0}
    stack = [root]
    while stack:
        x = stack.pop()
        for c in kids[x]:
            dp[c] = dp[x] + 1
            stack.append(c)
    depth = max(dp.values())
    des = maj = mu = 0
    for c, p in edges:
        rank = depth - dp[p]
        mu += rank
        if c > p:
            des += 1
            maj += rank
    return des, maj, mu


def h_polynomial(B: BuildingSet, mode: str = "tq") -> Polynomial:
    """Sum over B-trees of ``t^des``, ``t^des q^maj`` or ``t^des q^maj u^mu``."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if not B.connected:
        raise NotConnected("h-polynomial needs a connected building set")
    counts: Counter = Counter()
    for root, edges in _enumerate(B):
        des, maj, mu = _raw_stats(root, edges)
        if mode == "t":
            counts[(des, 0, 0)] += 1
        elif mode == "tq":
            counts[(des, maj, 0)] += 1
        else:
            counts[(des, maj, mu)] += 1
    return Polynomial(counts)


def f_vector(B: BuildingSet) -> list[int]:
    """Face numbers ``(f_0, f_1, ...)`` from ``f(t) = h(t + 1)``."""
    h = h_polynomial(B, "t").t_coefficients()
    return [sum(h[j] * comb(j, i) for j in range(i, len(h))) for i in range(len(h))]


def omega_tree(T: BTree, n: int) -> BTree:
    """Relabel a tree on ``[n]`` through ``i -> n - i + 1``."""
    w = lambda i: n + 1 - i  # noqa: E731
    return BTree(w(T.root), tuple(sorted((w(c), w(p)) for c, p in T.edges)))


def check_involution_palindromicity(B: BuildingSet) -> tuple[bool, Polynomial, Polynomial]:
    """Compare ``h(t, q, u)`` with ``t^(n-1) h(1/t, 1/q, q u)``."""
    try:
        fixed = apply_involution(B) == B
    except BuildingSetError:
        fixed = False
    if not fixed:
        raise NotOmegaInvariant("building set is not invariant under i -> n - i + 1")
    lhs = h_polynomial(B, "tqu")
    rhs = reverse_transform(lhs, B.n - 1)
    return lhs == rhs, lhs, rhs


def h_combined(parts: Iterable[BuildingSet]) -> tuple[Polynomial, Polynomial]:
    """``(direct, formula)`` for the combined connected building set.

    ``formula`` is ``(1 + t + ... + t^(r-1))`` times the product of the parts'
    h-polynomials.
    """
    parts = list(parts)
    direct = h_polynomial(combine(parts), "t")
    formula = geometric_sum(len(parts))
    for part in parts:
        formula = formula * h_polynomial(part, "t")
    return direct, formula
