"""
Graph associahedra.

Maximal tubings are read off B-trees of the graphical building set (the tubes
are the non-root descendant sets), then checked against the tubing axioms.
Nesting statistics are computed from the tubes alone.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .btrees import BTree, _descendant_sets, enumerate_btrees, h_polynomial
from .buildsets import BuildingSet, validate
from .errors import InvalidTubing, NotMaximal
from .polyring import Polynomial, geometric_sum

__all__ = [
    "Graph", "Tubing", "TubingStats", "graphical_building_set",
    "enumerate_maximal_tubings", "tubings_with_trees", "validate_tubing",
    "tubing_stats", "tubing_mu", "h_graph", "h_disconnected_check",
    "graph_components", "load_graph", "path_graph", "star_graph",
    "complete_graph", "null_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``1..n``; edges stored as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        clean = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge ({a}, {b}) leaves [1, {self.n}]")
            edge = (min(a, b), max(a, b))
            if edge in clean:
                raise ValueError(f"duplicate edge {edge}")
            clean.add(edge)
        object.__setattr__(self, "edges", frozenset(clean))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(s) for v, s in adj.items()}

    def is_connected_on(self, vertices: Iterable[int]) -> bool:
        """Is the induced subgraph on ``vertices`` connected?"""
        vs = set(vertices)
        if not vs:
            return False
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            for y in self.adjacency[stack.pop()]:
                if y in vs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vs)

    def relabel(self, perm: dict[int, int]) -> Graph:
        return Graph(self.n, frozenset((perm[a], perm[b]) for a, b in self.edges))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def star_graph(n: int) -> Graph:
    """``K_{1,n}`` with center ``n + 1``."""
    return Graph(n + 1, frozenset((i, n + 1) for i in range(1, n + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def null_graph(n: int) -> Graph:
    return Graph(n)


def graph_components(G: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, by minimum vertex."""
    parent = list(range(G.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in G.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(1, G.n + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(g) for g in groups.values()), key=min)


def graphical_building_set(G: Graph) -> BuildingSet:
    """Connected induced vertex sets, plus ``[n]`` so the result is connected."""
    if G.n < 1:
        raise ValueError("graph needs at least one vertex")
    sets = [
        s for r in range(1, G.n + 1)
        for s in combinations(range(1, G.n + 1), r)
        if G.is_connected_on(s)
    ]
    sets.append(tuple(range(1, G.n + 1)))
    return validate(G.n, sets)


@dataclass(frozen=True)
class Tubing:
    tubes: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, tubes: Iterable[Iterable[int]]) -> Tubing:
        uniq = {frozenset(t) for t in tubes}
        return cls(tuple(sorted(uniq, key=lambda s: (len(s), sorted(s)))))

    def to_json_obj(self) -> dict:
        return {"tubes": sorted(sorted(t) for t in self.tubes)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


class TubingStats(tuple):
    """``(nest, nestDes, nestMaj)``."""

    def __new__(cls, nest: int, nest_des: int, nest_maj: int):
        return super().__new__(cls, (nest, nest_des, nest_maj))

    nest = property(lambda self: self[0])
    nest_des = property(lambda self: self[1])
    nest_maj = property(lambda self: self[2])


def validate_tubing(G: Graph, chi: Tubing) -> None:
    """Raise :class:`InvalidTubing` unless every tube is a proper connected set
    and incomparable tubes are disjoint with a non-tube union."""
    full = frozenset(range(1, G.n + 1))
    for tube in chi.tubes:
        if not tube or tube == full or not tube <= full:
            raise InvalidTubing(f"{sorted(tube)} is not a proper nonempty subset")
        if not G.is_connected_on(tube):
            raise InvalidTubing(f"{sorted(tube)} does not induce a connected subgraph")
    for a, b in combinations(chi.tubes, 2):
        if a <= b or b <= a:
            continue
        if a & b:
            raise InvalidTubing(f"tubes {sorted(a)} and {sorted(b)} intersect")
        if G.is_connected_on(a | b):
            raise InvalidTubing(f"tubes {sorted(a)} and {sorted(b)} are adjacent")


def tubings_with_trees(G: Graph) -> Iterator[tuple[BTree, Tubing]]:
    """Pairs ``(B-tree, maximal tubing)`` of the graph associahedron."""
    for T in enumerate_btrees(graphical_building_set(G)):
        below = _descendant_sets(T)
        chi = Tubing.of(s for x, s in below.items() if x != T.root)
        validate_tubing(G, chi)
        yield T, chi


def enumerate_maximal_tubings(G: Graph) -> Iterator[Tubing]:
    for _, chi in tubings_with_trees(G):
        yield chi


def _nesting(G: Graph, chi: Tubing):
    """Per-tube data: cover relation, distinguished element, nesting index."""
    if len(chi.tubes) != G.n - 1:
        raise NotMaximal(f"maximal tubings have {G.n - 1} tubes, got {len(chi.tubes)}")
    tubes = list(chi.tubes)
    nu = Counter(v for tube in tubes for v in tube)
    # covering tube: smallest strictly larger tube containing it
    cover: dict[frozenset[int], frozenset[int] | None] = {}
    for a in tubes:
        above = [b for b in tubes if a < b]
        cover[a] = min(above, key=len) if above else None
    alpha = {}
    for a in tubes:
        inner = set().union(*(b for b in tubes if cover[b] == a))
        rest = a - inner
        if len(rest) != 1:
            raise NotMaximal(f"tube {sorted(a)} has no unique distinguished element")
        (alpha[a],) = rest
    outside = set(range(1, G.n + 1)).difference(*tubes) if tubes else set(range(1, G.n + 1))
    if len(outside) != 1:
        raise NotMaximal("a maximal tubing leaves exactly one vertex untubed")
    (untubed,) = outside
    nest = max((nu[v] for v in range(1, G.n + 1)), default=0)
    return tubes, cover, alpha, untubed, nu, nest


def tubing_stats(G: Graph, chi: Tubing) -> TubingStats:
    """Nesting number, nesting descents and nesting major index."""
    tubes, cover, alpha, untubed, nu, nest = _nesting(G, chi)
    nest_des = nest_maj = 0
    for a in tubes:
        upper = alpha[cover[a]] if cover[a] is not None else untubed
        if alpha[a] > upper:
            nest_des += 1
            nest_maj += nest - nu[upper]
    return TubingStats(nest, nest_des, nest_maj)


def tubing_mu(G: Graph, chi: Tubing, printed: bool = False) -> int:
    """Label-free rank sum over all covering pairs.

    By default pairs of an outermost tube with the untubed vertex count too,
    matching the B-tree statistic. ``printed=True`` sums only tube-inside-tube
    pairs.
    """
    tubes, cover, alpha, untubed, nu, nest = _nesting(G, chi)
    total = 0
    for a in tubes:
        if cover[a] is not None:
            total += nest - nu[alpha[cover[a]]]
        elif not printed:
            total += nest
    return total


def h_graph(G: Graph, mode: str = "tq") -> Polynomial:
    """Sum over maximal tubings of ``t^nestDes q^nestMaj`` (``u^mu`` for ``tqu``)."""
    counts: Counter = Counter()
    for chi in enumerate_maximal_tubings(G):
        _, des, maj = tubing_stats(G, chi)
        if mode == "t":
            counts[(des, 0, 0)] += 1
        elif mode == "tq":
            counts[(des, maj, 0)] += 1
        elif mode == "tqu":
            counts[(des, maj, tubing_mu(G, chi))] += 1
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return Polynomial(counts)


def _induced(G: Graph, vertices: tuple[int, ...]) -> BuildingSet:
    vs = set(vertices)
    sets = [
        s for r in range(1, len(vertices) + 1)
        for s in combinations(vertices, r)
        if G.is_connected_on(s)
    ]
    return validate(vs, sets)


def h_disconnected_check(G: Graph) -> tuple[Polynomial, Polynomial]:
    """``(direct, formula)`` for ``h_G(t)`` against the component product."""
    direct = h_polynomial(graphical_building_set(G), "t")
    comps = graph_components(G)
    formula = geometric_sum(len(comps))
    for vertices in comps:
        formula = formula * h_polynomial(_induced(G, vertices), "t")
    return direct, formula


def load_graph(text: str) -> Graph:
    """Parse ``n <N>`` followed by one ``i j`` edge per line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <N>'")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'i j'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: vertices must be integers") from None
        if (edges[-1] in edges[:-1]) or (edges[-1][::-1] in edges[:-1]):
            raise ValueError(f"line {lineno}: duplicate edge")
    if n is None:
        raise ValueError("missing header 'n <N>'")
    try:
        return Graph(n, frozenset(edges))
    except ValueError as exc:
        raise ValueError(f"bad graph: {exc}") from exc
