"""
Sparse integer polynomials in the three variables t, q, u.

A monomial is a triple of exponents ``(a, b, c)`` standing for ``t^a q^b u^c``.
Polynomials are immutable and always stored without zero coefficients, so
structural equality is mathematical equality.

>>> p = Polynomial.from_terms({(0, 0, 0): 1, (1, 1, 0): 1})
>>> str(p * p)
'1 + 2*t*q + t^2*q^2'
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Mapping
from typing import NamedTuple

from .errors import ExponentUnderflow, NotUnivariate

__all__ = [
    "Monomial", "Polynomial", "ZERO", "ONE", "T", "Q", "U",
    "add", "mul", "specialize", "reverse_transform", "is_palindromic_in_t",
    "evaluate", "format_poly", "geometric_sum",
]

VARIABLES = ("t", "q", "u")


class Monomial(NamedTuple):
    t_exp: int = 0
    q_exp: int = 0
    u_exp: int = 0


class Polynomial:
    """Immutable map from :class:`Monomial` to a nonzero ``int``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        clean: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise ExponentUnderflow(f"negative exponent in {tuple(mono)}")
            clean[mono] = clean.get(mono, 0) + int(coeff)
        self._terms = {m: clean[m] for m in sorted(clean) if clean[m] != 0}
        self._hash = None

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int, int], int]) -> Polynomial:
        return cls(terms)

    @classmethod
    def from_exponents(cls, exponents: Iterable[tuple[int, int, int]]) -> Polynomial:
        """Sum ``t^a q^b u^c`` over an iterable of exponent triples."""
        return cls(Counter(exponents))

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 0, coeff: int = 1) -> Polynomial:
        return cls({(a, b, c): coeff})

    @classmethod
    def constant(cls, value: int) -> Polynomial:
        return cls({(0, 0, 0): value})

    @classmethod
    def from_t_coefficients(cls, coeffs: Iterable[int]) -> Polynomial:
        return cls({(i, 0, 0): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, a: int = 0, b: int = 0, c: int = 0) -> int:
        return self._terms.get(Monomial(a, b, c), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, var: str = "t") -> int:
        """Largest exponent of ``var``; -1 for the zero polynomial."""
        idx = VARIABLES.index(var)
        return max((m[idx] for m in self._terms), default=-1)

    def t_coefficients(self) -> list[int]:
        """Coefficient list ``[h_0, h_1, ...]`` of a univariate polynomial in t."""
        if any(m.q_exp or m.u_exp for m in self._terms):
            raise NotUnivariate("polynomial involves q or u")
        out = [0] * (self.degree("t") + 1)
        for m, c in self._terms.items():
            out[m.t_exp] = c
        return out

    def __add__(self, other: Polynomial) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, 0) + c
        return Polynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self._terms.items()})
        out: dict[tuple[int, int, int], int] = {}
        for (a1, b1, c1), k1 in self._terms.items():
            for (a2, b2, c2), k2 in other._terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0) + k1 * k2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"t": m.t_exp, "q": m.q_exp, "u": m.u_exp, "coeff": c}
                for m, c in self._terms.items()
            ]
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> Polynomial:
        return cls({(d.get("t", 0), d.get("q", 0), d.get("u", 0)): d["coeff"] for d in obj["terms"]})


ZERO = Polynomial()
ONE = Polynomial.constant(1)
T = Polynomial.monomial(1, 0, 0)
Q = Polynomial.monomial(0, 1, 0)
U = Polynomial.monomial(0, 0, 1)


def add(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 + p2


def mul(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 * p2


def geometric_sum(r: int) -> Polynomial:
    """``1 + t + ... + t^(r-1)``."""
    return Polynomial.from_t_coefficients([1] * r)


def specialize(p: Polynomial, var: str) -> Polynomial:
    """Substitute 1 for ``var`` (one of ``"t"``, ``"q"``, ``"u"``)."""
    idx = VARIABLES.index(var)
    out: dict[tuple[int, int, int], int] = {}
    for m, c in p.items():
        key = tuple(0 if i == idx else e for i, e in enumerate(m))
        out[key] = out.get(key, 0) + c
    return Polynomial(out)


def reverse_transform(p: Polynomial, d: int) -> Polynomial:
    """Return ``t^d * p(1/t, 1/q, q*u)``.

    Monomial ``(a, b, c)`` goes to ``(d - a, c - b, c)``; raises
    :class:`ExponentUnderflow` if that leaves the polynomial ring.
    """
    out = {}
    for (a, b, c), coeff in p.items():
        if a > d or b > c:
            raise ExponentUnderflow(
                f"monomial t^{a} q^{b} u^{c} cannot be reversed with d={d}"
            )
        out[(d - a, c - b, c)] = coeff
    return Polynomial(out)


def is_palindromic_in_t(p: Polynomial, d: int) -> bool:
    coeffs = p.t_coefficients()
    if len(coeffs) > d + 1:
        return False
    coeffs += [0] * (d + 1 - len(coeffs))
    return coeffs == coeffs[::-1]


def evaluate(p: Polynomial, t0: int = 1, q0: int = 1, u0: int = 1) -> int:
    return sum(c * t0**a * q0**b * u0**e for (a, b, e), c in p.items())


def _plain_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _latex_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{{{e}}}")
    return "".join(parts)


def _join_terms(p: Polynomial, render, sep: str) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.items()):
        mono = render(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{sep}{mono}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


def format_poly(p: Polynomial, style: str = "plain") -> str:
    """Render ``p`` in ascending (t, q, u) lexicographic term order.

    ``style`` is one of ``plain``, ``latex``, ``json`` or ``csv``.
    """
    if style == "plain":
        return _join_terms(p, _plain_monomial, "*")
    if style == "latex":
        return _join_terms(p, _latex_monomial, "")
    if style == "json":
        return json.dumps(p.to_json_obj())
    if style == "csv":
        rows = ["t,q,u,coeff"]
        rows += [f"{m.t_exp},{m.q_exp},{m.u_exp},{c}" for m, c in p.items()]
        return "\n".join(rows)
    raise ValueError(f"unknown format style {style!r}")
