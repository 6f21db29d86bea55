"""
Unlabelled binary trees and the right-edge statistics that give the
associahedron's q-h-polynomial and the alternative q-Narayana numbers.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParams
from .polyring import Polynomial

__all__ = [
    "Node", "BinaryTree", "enumerate_binary_trees", "right_stats",
    "h_associahedron_via_binary", "q_narayana", "h_associahedron_edge_depth",
]


@dataclass(frozen=True)
class Node:
    left: Node | None = None
    right: Node | None = None


@dataclass(frozen=True)
class BinaryTree:
    root: Node | None

    def size(self) -> int:
        def count(node):
            return 0 if node is None else 1 + count(node.left) + count(node.right)
        return count(self.root)


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple[Node | None, ...]:
    if n == 0:
        return (None,)
    out = []
    for left_size in range(n):
        for left in _shapes(left_size):
            for right in _shapes(n - 1 - left_size):
                out.append(Node(left, right))
    return tuple(out)


def enumerate_binary_trees(n: int) -> Iterator[BinaryTree]:
    """All ``C_n`` shapes, split by left-subtree size ascending."""
    if n < 0:
        raise BadParams("n must be >= 0")
    for node in _shapes(n):
        yield BinaryTree(node)


def _edge_data(T: BinaryTree) -> tuple[list[int], int]:
    """Parent depths of right edges, and maximum vertex depth."""
    rights: list[int] = []
    depth = 0
    stack = [(T.root, 0)] if T.root is not None else []
    while stack:
        node, d = stack.pop()
        depth = max(depth, d)
        if node.left is not None:
            stack.append((node.left, d + 1))
        if node.right is not None:
            rights.append(d)
            stack.append((node.right, d + 1))
    return sorted(rights), depth


def right_stats(T: BinaryTree) -> tuple[tuple[int, ...], int, int]:
    """``(right multiset, r, rindex)`` with ``rindex = depth * r - sum(R)``.

    An edge's depth is the depth of its upper endpoint and the tree depth is
    the largest vertex depth.
    """
    rights, depth = _edge_data(T)
    r = len(rights)
    return tuple(rights), r, depth * r - sum(rights)


@lru_cache(maxsize=16)
def _right_distribution(n: int) -> Counter:
    counts: Counter = Counter()
    for T in enumerate_binary_trees(n):
        _, r, rindex = right_stats(T)
        counts[(r, rindex)] += 1
    return counts


def h_associahedron_via_binary(n: int) -> Polynomial:
    if n < 1:
        raise BadParams("n must be >= 1")
    return Polynomial({(r, rindex, 0): c for (r, rindex), c in _right_distribution(n).items()})


def h_associahedron_edge_depth(n: int) -> Polynomial:
    """Same sum, but with tree depth taken as the largest edge depth
    (one less than the vertex depth)."""
    if n < 1:
        raise BadParams("n must be >= 1")
    counts: Counter = Counter()
    for T in enumerate_binary_trees(n):
        rights, depth = _edge_data(T)
        edge_depth = max(depth - 1, 0)
        counts[(len(rights), edge_depth * len(rights) - sum(rights), 0)] += 1
    return Polynomial(counts)


def q_narayana(n: int, k: int) -> Polynomial:
    """Sum of ``q^rindex`` over binary trees on ``n`` nodes with ``k - 1``
    right edges."""
    if not (isinstance(n, int) and isinstance(k, int) and 1 <= k <= n):
        raise BadParams(f"need 1 <= k <= n, got n={n}, k={k}")
    dist = _right_distribution(n)
    return Polynomial({(0, rindex, 0): c for (r, rindex), c in dist.items() if r == k - 1})
