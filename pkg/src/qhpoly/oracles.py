"""
Brute-force reference computations.

Nothing here shares code with the enumeration engine: trees come from Prüfer
sequences and the B-tree axioms are checked literally, over every family of
pairwise incomparable nodes.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterator, Sequence
from itertools import combinations, product
from math import comb

from .buildsets import BuildingSet

__all__ = [
    "prufer_tree_edges", "all_rooted_trees", "is_btree_literal",
    "brute_force_btrees", "catalan", "narayana",
]


def prufer_tree_edges(seq: Sequence[int], labels: Sequence[int]) -> list[tuple[int, int]]:
    """Undirected edges of the labelled tree with Prüfer code ``seq``."""
    degree = {x: 1 for x in labels}
    for x in seq:
        degree[x] += 1
    leaves = [x for x in labels if degree[x] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def all_rooted_trees(labels: Sequence[int]) -> Iterator[tuple[int, dict[int, int]]]:
    """Every rooted labelled tree as ``(root, parent map)``; ``m^(m-1)`` of them."""
    labels = sorted(labels)
    m = len(labels)
    if m == 1:
        yield labels[0], {}
        return
    for seq in product(labels, repeat=m - 2):
        edges = prufer_tree_edges(seq, labels)
        adj = {x: [] for x in labels}
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        for root in labels:
            parent = {}
            stack = [root]
            seen = {root}
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        parent[y] = x
                        stack.append(y)
            yield root, parent


def _below(parent: dict[int, int], labels: Sequence[int]) -> dict[int, frozenset[int]]:
    out = {x: {x} for x in labels}
    for x in labels:
        y = x
        while y in parent:
            y = parent[y]
            out[y].add(x)
    return {x: frozenset(s) for x, s in out.items()}


def is_btree_literal(B: BuildingSet, root: int, parent: dict[int, int]) -> bool:
    """Both axioms checked as stated, over all incomparable node families."""
    labels = list(B.ground)
    below = _below(parent, labels)
    if any(s not in B.members for s in below.values()):
        return False
    incomparable = {
        (a, b) for a, b in combinations(labels, 2)
        if a not in below[b] and b not in below[a]
    }
    for k in range(2, len(labels) + 1):
        for family in combinations(labels, k):
            if all(pair in incomparable for pair in combinations(family, 2)):
                if frozenset().union(*(below[x] for x in family)) in B.members:
                    return False
    return True


def brute_force_btrees(B: BuildingSet, check=None) -> set[tuple[int, tuple[tuple[int, int], ...]]]:
    """All rooted trees on the ground set passing ``check`` (default: the
    literal axioms), as ``(root, sorted (child, parent) edges)``."""
    check = check or is_btree_literal
    return {
        (root, tuple(sorted(parent.items())))
        for root, parent in all_rooted_trees(B.ground)
        if check(B, root, parent)
    }


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    return comb(n, k) * comb(n, k - 1) // n
