"""
Closed-form q-h-polynomials for S_n-invariant nestohedra, the stellohedron
and the Stanley-Pitman polytope.

The published formulas are implemented as printed. Where a printed formula
disagrees with B-tree enumeration, a separately named ``*_rank_exact``
variant recomputes the ranks; it is only trusted after :func:`compare_with_oracle`
agrees with it.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb

from .btrees import h_polynomial
from .buildsets import family
from .combinat import perm_stats
from .errors import BadParams
from .polyring import Monomial, Polynomial, specialize

__all__ = [
    "FormulaReport", "snk_closed_form", "snk_palindromicity_check",
    "snk_palindromicity_exponent", "partial_permutations",
    "stellohedron_closed_form", "stellohedron_rank_exact",
    "stanley_pitman_closed_form", "stanley_pitman_rank_exact",
    "compare_with_oracle", "first_difference", "FORMULAS",
]


def _check_snk(n: int, k: int) -> None:
    if not (isinstance(n, int) and isinstance(k, int) and 2 <= k <= n):
        raise BadParams(f"need 2 <= k <= n, got n={n}, k={k}")


def snk_closed_form(n: int, k: int) -> Polynomial:
    """Double sum over chain supports ``A`` of size ``n-k+1`` and orderings
    ``pi`` of ``A``; ``c`` counts elements outside ``A`` above ``pi_1``."""
    _check_snk(n, k)
    ground = range(1, n + 1)
    subsets = sorted(combinations(ground, n - k + 1), key=lambda s: s[::-1])
    counts: Counter = Counter()
    for A in subsets:
        outside = [j for j in ground if j not in A]
        for pi in permutations(A):
            _, des, maj = perm_stats(pi)
            c = sum(1 for j in outside if j > pi[0])
            counts[(des + c, maj + des + c, 0)] += 1
    return Polynomial(counts)


def snk_palindromicity_exponent(n: int, k: int) -> int:
    _check_snk(n, k)
    twice = k * k - 2 * k * n - k + n * n + 3 * n - 2
    if twice % 2:
        raise ArithmeticError("palindromicity exponent is not an integer")
    return twice // 2


def snk_palindromicity_check(n: int, k: int) -> bool:
    """Does ``h = t^(n-1) q^E h(1/t, 1/q)`` hold for the closed form?"""
    E = snk_palindromicity_exponent(n, k)
    h = snk_closed_form(n, k)
    mirrored = {}
    for (a, b, _), coeff in h.items():
        if a > n - 1 or b > E:
            return False
        mirrored[(n - 1 - a, E - b, 0)] = coeff
    return Polynomial(mirrored) == h


def partial_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """Injective words over ``[n]``, shortest first, then lexicographic.

    The empty word comes first.
    """
    if n < 0:
        raise BadParams("n must be >= 0")
    for length in range(n + 1):
        yield from permutations(range(1, n + 1), length)


def _check_n(n: int, low: int) -> None:
    if not isinstance(n, int) or n < low:
        raise BadParams(f"need n >= {low}, got {n}")


def stellohedron_closed_form(n: int) -> Polynomial:
    """The printed stellohedron formula: ``1 + sum t^(des+1) q^(maj+2des+2)``."""
    _check_n(n, 1)
    counts: Counter = Counter({(0, 0, 0): 1})
    for w in partial_permutations(n):
        if not w:
            continue
        _, des, maj = perm_stats(w)
        counts[(des + 1, maj + 2 * des + 2, 0)] += 1
    return Polynomial(counts)


def stellohedron_rank_exact(n: int) -> Polynomial:
    """Stellohedron formula with full-length words ranked one lower.

    A word using all of ``[n]`` leaves nothing below the center ``n+1``, so
    the center has rank 0 instead of 1.
    """
    _check_n(n, 1)
    counts: Counter = Counter({(0, 0, 0): 1})
    for w in partial_permutations(n):
        if not w:
            continue
        _, des, maj = perm_stats(w)
        if len(w) < n:
            counts[(des + 1, maj + 2 * des + 2, 0)] += 1
        else:
            counts[(des + 1, maj + des + 1, 0)] += 1
    return Polynomial(counts)


def stanley_pitman_closed_form(n: int) -> Polynomial:
    """``sum_l C(n-2, l) t^l q^((l^2+3l+2)/2) (t + q^l)``, as printed."""
    _check_n(n, 2)
    out: Counter = Counter()
    for l in range(n - 1):
        c = comb(n - 2, l)
        e = (l * l + 3 * l + 2) // 2
        out[(l + 1, e, 0)] += c
        out[(l, e + l, 0)] += c
    return Polynomial(out)


def stanley_pitman_rank_exact(n: int) -> Polynomial:
    """Candidate correction ``(1 + t q) sum_l C(n-2, l) t^l q^(l(l+3)/2)``."""
    _check_n(n, 2)
    base = Polynomial({(l, l * (l + 3) // 2, 0): comb(n - 2, l) for l in range(n - 1)})
    return (Polynomial.constant(1) + Polynomial.monomial(1, 1)) * base


@dataclass(frozen=True)
class FormulaReport:
    family: str
    params: dict
    formula_poly: Polynomial
    oracle_poly: Polynomial
    agree: bool
    first_difference: Monomial | None
    q1_agree: bool
    notes: list[str] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        diff = self.first_difference
        return {
            "family": self.family,
            "params": dict(self.params),
            "agree": self.agree,
            "q1_agree": self.q1_agree,
            "first_difference": None if diff is None else {"t": diff[0], "q": diff[1], "u": diff[2]},
            "formula": self.formula_poly.to_json_obj(),
            "oracle": self.oracle_poly.to_json_obj(),
        }


def first_difference(p1: Polynomial, p2: Polynomial) -> Monomial | None:
    """Smallest monomial (canonical order) whose coefficients differ."""
    t1, t2 = p1.terms, p2.terms
    for m in sorted(set(t1) | set(t2)):
        if t1.get(m, 0) != t2.get(m, 0):
            return m
    return None


# family id -> (formula, building-set constructor)
FORMULAS = {
    "snk": (snk_closed_form, lambda n, k: family("snk", n, k)),
    "stellohedron_printed": (stellohedron_closed_form, lambda n: family("star", n)),
    "stellohedron_rank_exact": (stellohedron_rank_exact, lambda n: family("star", n)),
    "stanley_pitman_printed": (stanley_pitman_closed_form, lambda n: family("stanley_pitman", n)),
    "stanley_pitman_rank_exact": (stanley_pitman_rank_exact, lambda n: family("stanley_pitman", n)),
}


def compare_with_oracle(family_id: str, **params: int) -> FormulaReport:
    """Evaluate a closed form and the B-tree sum for the matching building set."""
    if family_id not in FORMULAS:
        raise BadParams(f"unknown formula family {family_id!r}")
    formula, building = FORMULAS[family_id]
    try:
        poly = formula(**params)
        oracle = h_polynomial(building(**params), "tq")
    except TypeError as exc:
        raise BadParams(str(exc)) from exc
    diff = first_difference(poly, oracle)
    return FormulaReport(
        family=family_id,
        params=dict(params),
        formula_poly=poly,
        oracle_poly=oracle,
        agree=diff is None,
        first_difference=diff,
        q1_agree=specialize(poly, "q") == specialize(oracle, "q"),
    )
