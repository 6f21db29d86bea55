"""Command-line front end: ``qhpoly {poly,posets,verify,table}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import buildsets, combinat, errata, families, graphs
from .bintrees import q_narayana
from .btrees import MODES, h_polynomial
from .errors import QHPolyError
from .polyring import Polynomial, format_poly

FORMATS = ("plain", "latex", "json", "csv")
TABLES = ("narayana", "euler_mahonian", "snk")


class UsageError(Exception):
    """Bad flags or unreadable input; exits with status 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    source: str | None = None  # "family", "building-set", "graph" or "posets"
    family: str | None = None
    n: int | None = None
    k: int | None = None
    path: Path | None = None
    vars: str = "tq"
    format: str = "plain"
    suites: tuple[str, ...] = ("all",)
    max_n: int | None = None
    report: Path | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        cmd = ns.command
        if cmd in ("verify", "table"):
            return cls(
                command=cmd,
                family=getattr(ns, "family", None),
                suites=tuple(getattr(ns, "suite", None) or ("all",)),
                max_n=ns.max_n,
                report=getattr(ns, "report", None),
            )
        given = [
            (name, value)
            for name, value in (
                ("family", ns.family),
                ("building-set", ns.building_set),
                ("graph", ns.graph),
                ("posets", ns.posets),
            )
            if value is not None
        ]
        if cmd == "posets" and ns.posets is None:
            raise UsageError("posets needs --posets <path>")
        if len(given) != 1:
            raise UsageError(
                "give exactly one of --family, --building-set, --graph, --posets"
            )
        source, value = given[0]
        if source == "posets" and ns.vars == "tqu":
            raise UsageError("--vars tqu needs a building set or graph; posets carry no mu")
        if source != "family" and (ns.n is not None or ns.k is not None):
            raise UsageError("--n and --k only apply to --family")
        return cls(
            command=cmd,
            source=source,
            family=value if source == "family" else None,
            n=ns.n,
            k=ns.k,
            path=None if source == "family" else Path(value),
            vars=ns.vars,
            format=ns.format,
        )


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def compute(cfg: RunConfig):
    """The polynomial a ``poly``/``posets`` config asks for."""
    if cfg.source == "family":
        if cfg.n is None:
            raise UsageError("--family needs --n")
        if cfg.k is not None and cfg.family != "snk":
            raise UsageError("--k only applies to the snk family")
        return h_polynomial(buildsets.family(cfg.family, cfg.n, cfg.k), cfg.vars)
    text = _read(cfg.path)
    try:
        if cfg.source == "building-set":
            return h_polynomial(buildsets.load_building_set(text), cfg.vars)
        if cfg.source == "graph":
            return graphs.h_graph(graphs.load_graph(text), cfg.vars)
        poly = combinat.qh_from_posets(combinat.load_posets(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{cfg.path}: line {exc.lineno}: {exc.msg}") from exc
    except (QHPolyError, ValueError) as exc:
        raise UsageError(f"{cfg.path}: {exc}") from exc
    if cfg.vars == "t":
        return Polynomial({(a, 0, 0): c for (a, _, _), c in poly.items()})
    return poly


def run_poly(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    out.write(format_poly(compute(cfg), cfg.format) + "\n")
    return 0


def run_verify(cfg: RunConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    max_n = 6 if cfg.max_n is None else cfg.max_n
    if max_n < 2:
        raise UsageError("--max-n must be at least 2 for verify")
    try:
        report = errata.run_suites(list(cfg.suites), max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = json.dumps(report.to_json_obj(), indent=2) + "\n"
    summary = "\n".join(report.summary_lines()) + "\n"
    if cfg.report is None:
        out.write(text)
        err.write(summary)
    else:
        try:
            cfg.report.write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {cfg.report}: {exc.strerror}") from exc
        out.write(summary)
    return 0 if report.ok else 1


def table_rows(name: str, max_n: int):
    if name == "narayana":
        yield ("n", "k", "polynomial")
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                yield (n, k, str(q_narayana(n, k)))
    elif name == "euler_mahonian":
        yield ("n", "polynomial")
        for n in range(1, max_n + 1):
            yield (n, str(combinat.euler_mahonian(n)))
    elif name == "snk":
        yield ("n", "k", "polynomial")
        for n in range(2, max_n + 1):
            for k in range(2, n + 1):
                yield (n, k, str(families.snk_closed_form(n, k)))
    else:
        raise UsageError(f"unknown table {name!r}; choose from {', '.join(TABLES)}")


def run_table(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.family is None:
        raise UsageError("table needs --family")
    max_n = 5 if cfg.max_n is None else cfg.max_n
    rows = list(table_rows(cfg.family, max_n))
    csv.writer(out, lineterminator="\n").writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhpoly",
        description="q-analogues of h-polynomials of nestohedra and graph associahedra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p, posets_only=False):
        if not posets_only:
            p.add_argument("--family", choices=buildsets.FAMILIES)
            p.add_argument("--n", type=int)
            p.add_argument("--k", type=int)
            p.add_argument("--building-set", metavar="PATH")
            p.add_argument("--graph", metavar="PATH")
        else:
            p.set_defaults(family=None, n=None, k=None, building_set=None, graph=None)
        p.add_argument("--posets", metavar="PATH")
        p.add_argument("--vars", choices=MODES, default="tq")
        p.add_argument("--format", choices=FORMATS, default="plain")

    add_source(sub.add_parser("poly", help="q-h-polynomial of a family, building set, graph or poset list"))
    add_source(sub.add_parser("posets", help="q-h-polynomial of a JSON poset list"), posets_only=True)

    verify = sub.add_parser("verify", help="run the verification suites and errata report")
    verify.add_argument(
        "--suite", action="append",
        choices=("all",) + errata.SUITES + tuple(errata.ALIASES),
        help="repeatable; default all",
    )
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--report", type=Path, metavar="PATH",
                        help="write the JSON report here (default: standard output)")

    table = sub.add_parser("table", help="CSV tables of polynomials")
    table.add_argument("--family", required=True, help=", ".join(TABLES))
    table.add_argument("--max-n", type=int)
    return parser


RUNNERS = {"poly": run_poly, "posets": run_poly, "verify": run_verify, "table": run_table}


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        return RUNNERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"qhpoly: error: {exc}", file=sys.stderr)
        return 2
    except QHPolyError as exc:
        print(f"qhpoly: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
