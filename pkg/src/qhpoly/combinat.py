"""
Permutation and poset statistics.

Posets are stored by their cover relations only. Every poset used here has a
Hasse diagram that is a spanning tree, so a rank function is determined up to
a shift and the minimal one is found by propagation.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict, deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import permutations

from .errors import NotTreePoset
from .polyring import Polynomial

__all__ = [
    "Poset", "perm_stats", "euler_mahonian", "validate_tree_poset",
    "minimal_rank", "poset_stats", "ordinal_sum", "qh_from_posets",
    "braid_fan_posets", "chain", "antichain", "q_factorial",
    "merged_cone_poset", "coarsened_braid_fan", "load_posets", "dump_posets",
]


def perm_stats(word: Sequence[int]) -> tuple[frozenset[int], int, int]:
    """Descent set (1-indexed positions), descent number and major index.

    >>> perm_stats([5, 4, 8, 1])
    (frozenset({1, 3}), 2, 4)
    """
    des_set = frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])
    return des_set, len(des_set), sum(des_set)


def euler_mahonian(n: int) -> Polynomial:
    """Sum of ``t^des q^maj`` over all permutations of ``[n]``."""
    if n < 1:
        raise ValueError("n must be positive")
    counts: Counter = Counter()
    for w in permutations(range(1, n + 1)):
        _, des, maj = perm_stats(w)
        counts[(des, maj, 0)] += 1
    return Polynomial(counts)


def q_factorial(n: int) -> Polynomial:
    """``prod_{i=1}^n (1 + q + ... + q^(i-1))``."""
    out = Polynomial.constant(1)
    for i in range(1, n + 1):
        out = out * Polynomial({(0, j, 0): 1 for j in range(i)})
    return out


@dataclass(frozen=True)
class Poset:
    """A poset on ``elements`` given by covers ``(lower, upper)``.

    ``elements`` defaults to ``1..n``; ordinal sums and relabelled posets may
    carry other labels.
    """

    n: int
    covers: frozenset[tuple[int, int]]
    elements: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "covers", frozenset((int(a), int(b)) for a, b in self.covers))
        if not self.elements:
            object.__setattr__(self, "elements", tuple(range(1, self.n + 1)))
        if len(self.elements) != self.n:
            raise ValueError("element count does not match n")
        ground = set(self.elements)
        for a, b in self.covers:
            if a not in ground or b not in ground or a == b:
                raise ValueError(f"bad cover ({a}, {b})")

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> Poset:
        return cls(n, frozenset(covers))

    def maximal(self) -> list[int]:
        lower = {a for a, _ in self.covers}
        return [x for x in self.elements if x not in lower]

    def minimal(self) -> list[int]:
        upper = {b for _, b in self.covers}
        return [x for x in self.elements if x not in upper]

    def to_json_obj(self) -> dict:
        obj = {"n": self.n, "covers": [list(c) for c in sorted(self.covers)]}
        if self.elements != tuple(range(1, self.n + 1)):
            obj["elements"] = list(self.elements)
        return obj


def chain(labels: Sequence[int]) -> Poset:
    """Total order ``labels[0] < labels[1] < ...``."""
    return Poset(len(labels), frozenset(zip(labels, labels[1:])), tuple(sorted(labels)))


def antichain(labels: Sequence[int]) -> Poset:
    return Poset(len(labels), frozenset(), tuple(sorted(labels)))


def validate_tree_poset(P: Poset) -> bool:
    """True iff the Hasse diagram has ``n - 1`` covers and is connected."""
    if len(P.covers) != P.n - 1:
        return False
    if P.n == 0:
        return True
    adj = defaultdict(list)
    for a, b in P.covers:
        adj[a].append(b)
        adj[b].append(a)
    start = P.elements[0]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == P.n


def minimal_rank(P: Poset, start: int | None = None) -> dict[int, int]:
    """The unique rank function with covers +1 and minimum value 0.

    ``start`` picks the element the provisional rank is propagated from; the
    result does not depend on it.
    """
    if not validate_tree_poset(P):
        raise NotTreePoset("Hasse diagram is not a spanning tree")
    if P.n == 0:
        return {}
    up = defaultdict(list)
    down = defaultdict(list)
    for a, b in P.covers:
        up[a].append(b)
        down[b].append(a)
    if start is None:
        start = P.elements[0]
    rank = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in up[x]:
            if y not in rank:
                rank[y] = rank[x] + 1
                queue.append(y)
        for y in down[x]:
            if y not in rank:
                rank[y] = rank[x] - 1
                queue.append(y)
    low = min(rank.values())
    return {x: rank[x] - low for x in sorted(rank)}


def poset_stats(P: Poset) -> tuple[int, int]:
    """``(des, maj)``: descents are covers ``i < j`` with ``i > j`` as integers,
    weighted by the minimal rank of the upper element."""
    rank = minimal_rank(P)
    des = maj = 0
    for a, b in P.covers:
        if a > b:
            des += 1
            maj += rank[b]
    return des, maj


def ordinal_sum(P1: Poset, P2: Poset) -> Poset:
    """Every element of ``P1`` placed below every element of ``P2``.

    Labels must already be disjoint.
    """
    if set(P1.elements) & set(P2.elements):
        raise ValueError("ordinal sum needs disjoint labels")
    bridge = {(m, x) for m in P1.maximal() for x in P2.minimal()}
    return Poset(
        P1.n + P2.n,
        P1.covers | P2.covers | bridge,
        tuple(sorted(P1.elements + P2.elements)),
    )


def qh_from_posets(posets: Sequence[Poset]) -> Polynomial:
    """Sum ``t^des q^maj`` over a list of tree posets."""
    counts: Counter = Counter()
    for idx, P in enumerate(posets):
        if not validate_tree_poset(P):
            raise NotTreePoset(f"poset #{idx} is not a tree poset", index=idx)
        des, maj = poset_stats(P)
        counts[(des, maj, 0)] += 1
    return Polynomial(counts)


def braid_fan_posets(n: int) -> list[Poset]:
    """One chain poset per permutation of ``[n]``, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    return [chain(w) for w in permutations(range(1, n + 1))]


def merged_cone_poset(words: Sequence[Sequence[int]]) -> Poset:
    """Poset of the union of the braid cones of ``words``.

    ``i < j`` holds exactly when ``i`` precedes ``j`` in every word; the
    covers are the transitive reduction of that relation.
    """
    first = words[0]
    elements = tuple(sorted(first))
    pos = [{x: k for k, x in enumerate(w)} for w in words]
    less = {
        (i, j)
        for i in elements
        for j in elements
        if i != j and all(p[i] < p[j] for p in pos)
    }
    covers = {
        (i, j)
        for (i, j) in less
        if not any((i, k) in less and (k, j) in less for k in elements)
    }
    return Poset(len(elements), frozenset(covers), elements)


def coarsened_braid_fan(n: int, merges: Iterable[Sequence[Sequence[int]]]) -> list[Poset]:
    """Posets of the braid fan with each group in ``merges`` fused into one cone.

    Unmerged permutations keep their chain posets; whether the fused regions
    really are convex simplicial cones is not checked.
    """
    merged = [tuple(tuple(w) for w in group) for group in merges]
    used = {w for group in merged for w in group}
    out = [chain(w) for w in permutations(range(1, n + 1)) if w not in used]
    out += [merged_cone_poset(group) for group in merged]
    return out


def load_posets(text: str) -> list[Poset]:
    """Parse ``[{"n": 3, "covers": [[1, 2], [3, 2]]}, ...]``."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("poset file must hold a JSON list")
    out = []
    for i, obj in enumerate(data):
        try:
            covers = frozenset((a, b) for a, b in obj["covers"])
            elements = tuple(obj.get("elements", ()))
            out.append(Poset(int(obj["n"]), covers, elements))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"poset #{i}: {exc}") from exc
    return out


def dump_posets(posets: Iterable[Poset]) -> str:
    return json.dumps([P.to_json_obj() for P in posets])
