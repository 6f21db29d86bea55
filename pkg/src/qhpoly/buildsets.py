"""
Building sets: validation, restriction, connected components and the named
families used throughout the package.

A building set lives on a finite ground set of positive integers (``[n]`` for
everything built by :func:`family`; restrictions keep their original labels).
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import (
    BadParams,
    BuildingSetError,
    MissingSingleton,
    NotConnected,
    OverlappingSupports,
    UnionClosureViolation,
)

__all__ = [
    "BuildingSet", "validate", "restrict", "components", "combine", "family",
    "apply_involution", "relabel", "FAMILIES", "load_building_set",
]

FAMILIES = ("complete", "simplex", "snk", "path", "star", "stanley_pitman")


def _set_key(s: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    t = tuple(sorted(s))
    return (len(t), t)


@dataclass(frozen=True, eq=False)
class BuildingSet:
    """A validated building set.

    ``sets`` is sorted by (size, elements); use :func:`validate` to build one
    from raw data.
    """

    ground: tuple[int, ...]
    sets: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.ground)

    @cached_property
    def members(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(s) for s in self.sets)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.ground)

    @property
    def connected(self) -> bool:
        return self.support in self.members

    def __contains__(self, item: Iterable[int]) -> bool:
        return frozenset(item) in self.members

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BuildingSet):
            return NotImplemented
        return self.ground == other.ground and self.sets == other.sets

    def __hash__(self) -> int:
        return hash((self.ground, self.sets))

    def __repr__(self) -> str:
        return f"BuildingSet(ground={list(self.ground)}, sets={[list(s) for s in self.sets]})"

    def to_json_obj(self) -> dict:
        if self.ground != tuple(range(1, self.n + 1)):
            return {"ground": list(self.ground), "sets": [list(s) for s in self.sets]}
        return {"n": self.n, "sets": [list(s) for s in self.sets]}


def _make(ground: Iterable[int], sets: Iterable[Iterable[int]]) -> BuildingSet:
    uniq = {frozenset(s) for s in sets}
    return BuildingSet(
        tuple(sorted(ground)),
        tuple(tuple(sorted(s)) for s in sorted(uniq, key=_set_key)),
    )


def validate(n: int | Iterable[int], sets: Iterable[Iterable[int]]) -> BuildingSet:
    """Check the singleton and union-closure axioms.

    ``n`` is either the size of the ground set ``[n]`` or an explicit ground
    set. Raises :class:`MissingSingleton` or :class:`UnionClosureViolation`
    (with the first witness pair in sorted member order).
    """
    ground = frozenset(range(1, n + 1)) if isinstance(n, int) else frozenset(n)
    family_ = [frozenset(s) for s in sets]
    for s in family_:
        if not s:
            raise BuildingSetError("building sets contain only nonempty sets")
        if not s <= ground:
            raise BuildingSetError(f"{sorted(s)} is not a subset of the ground set")
    members = set(family_)
    for i in sorted(ground):
        if frozenset([i]) not in members:
            raise MissingSingleton(i)
    ordered = sorted(members, key=_set_key)
    for a, b in combinations(ordered, 2):
        if a & b and (a | b) not in members:
            raise UnionClosureViolation(tuple(sorted(a)), tuple(sorted(b)))
    return _make(ground, members)


def restrict(B: BuildingSet, S: Iterable[int]) -> BuildingSet:
    """``{I in B : I subset of S}``, keeping the original labels."""
    S = frozenset(S)
    if not S or not S <= B.support:
        raise BuildingSetError("restriction needs a nonempty subset of the ground set")
    return BuildingSet(
        tuple(sorted(S)),
        tuple(s for s in B.sets if S.issuperset(s)),
    )


def maximal_members(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-maximal members, ordered by minimum element."""
    sets = sorted(set(sets), key=len, reverse=True)
    out: list[frozenset[int]] = []
    for s in sets:
        if not any(s <= m for m in out):
            out.append(s)
    return sorted(out, key=min)


def components(B: BuildingSet) -> list[tuple[frozenset[int], BuildingSet]]:
    """Connected components as ``(support, component)`` pairs, ordered by
    minimum support element."""
    return [(s, restrict(B, s)) for s in maximal_members(B.members)]


def combine(parts: Sequence[BuildingSet]) -> BuildingSet:
    """Union of connected building sets on disjoint supports, plus the union
    of the supports."""
    seen: set[int] = set()
    sets: list[tuple[int, ...]] = []
    for part in parts:
        if not part.connected:
            raise NotConnected("combine needs connected parts")
        if seen & part.support:
            raise OverlappingSupports(
                f"support {sorted(part.support)} overlaps earlier parts"
            )
        seen |= part.support
        sets.extend(part.sets)
    if not parts:
        raise BadParams("combine needs at least one part")
    sets.append(tuple(sorted(seen)))
    return _make(seen, sets)


def relabel(B: BuildingSet, mapping: dict[int, int]) -> BuildingSet:
    return _make((mapping[i] for i in B.ground), ([mapping[i] for i in s] for s in B.sets))


def apply_involution(B: BuildingSet) -> BuildingSet:
    """Relabel through ``i -> n - i + 1`` (ground set must be ``[n]``)."""
    n = B.n
    if B.ground != tuple(range(1, n + 1)):
        raise BuildingSetError("the involution is defined on ground sets [n]")
    return relabel(B, {i: n + 1 - i for i in B.ground})


def _singletons(ground: Iterable[int]) -> list[tuple[int, ...]]:
    return [(i,) for i in ground]


def family(name: str, n: int, k: int | None = None) -> BuildingSet:
    """Named connected building sets.

    ============== ==================================================
    complete       every nonempty subset of ``[n]``
    simplex        singletons and ``[n]``
    snk            singletons and every subset of size ``>= k``
    path           intervals of ``[n]``
    star           graphical building set of ``K_{1,n}``, center ``n+1``
    stanley_pitman singletons and the tails ``[i, n]``
    ============== ==================================================
    """
    if name not in FAMILIES:
        raise BadParams(f"unknown family {name!r}")
    if not isinstance(n, int) or n < 1:
        raise BadParams(f"{name} needs n >= 1")
    ground = range(1, n + 1)
    if name == "complete":
        sets = [c for r in ground for c in combinations(ground, r)]
    elif name == "simplex":
        sets = _singletons(ground) + [tuple(ground)]
    elif name == "snk":
        if k is None or not 2 <= k <= n:
            raise BadParams("snk needs 2 <= k <= n")
        sets = _singletons(ground) + [c for r in range(k, n + 1) for c in combinations(ground, r)]
    elif name == "path":
        sets = [tuple(range(i, j + 1)) for i in ground for j in range(i, n + 1)]
    elif name == "star":
        center = n + 1
        ground = range(1, n + 2)
        sets = _singletons(ground) + [
            c + (center,) for r in range(1, n + 1) for c in combinations(range(1, n + 1), r)
        ]
    else:
        sets = _singletons(ground) + [tuple(range(i, n + 1)) for i in ground]
    if name != "snk" and k is not None:
        raise BadParams(f"{name} takes no k parameter")
    return validate(len(ground), sets)


def load_building_set(text: str) -> BuildingSet:
    """Parse ``{"n": 4, "sets": [[1], [2], ...]}`` and validate it."""
    obj = json.loads(text)
    if not isinstance(obj, dict) or "sets" not in obj:
        raise BuildingSetError('expected an object with "n" and "sets"')
    ground = obj["ground"] if "ground" in obj else int(obj["n"])
    return validate(ground, obj["sets"])
