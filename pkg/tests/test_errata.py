import dataclasses
import json

import pytest

from qhpoly import errata, families
from qhpoly.errata import DOCUMENTED, parse_poly, resolve_suites, run_suites
from qhpoly.polyring import Polynomial


def test_parse_poly():
    assert parse_poly("1 + 2*t*q + t^2*q^3") == Polynomial({(0, 0, 0): 1, (1, 1, 0): 2, (2, 3, 0): 1})
    assert parse_poly("0").is_zero()
    assert parse_poly("-3*u + q") == Polynomial({(0, 0, 1): -3, (0, 1, 0): 1})


def test_resolve_suites():
    assert resolve_suites(["all"]) == list(errata.SUITES)
    assert resolve_suites(["palindromicity", "palindromic"]) == ["palindromic"]
    with pytest.raises(ValueError):
        resolve_suites(["nope"])


def test_max_n_precondition():
    with pytest.raises(ValueError):
        run_suites(["all"], 1)


@pytest.mark.parametrize("suite", [s for s in errata.SUITES if s != "tubing-bijection"])
def test_each_suite_clean(suite):
    report = run_suites([suite], 5)
    assert report.ok, report.summary_lines()
    assert report.checks


def test_tubing_suite_small():
    report = run_suites(["tubing-bijection"], 4)
    assert report.ok, report.summary_lines()


def test_report_lists_printed_formula_errata():
    report = run_suites(["oracle-vs-formula"], 3)
    by_id = {e["id"]: e for e in report.to_json_obj()["errata"]}
    assert by_id["stellohedron-printed"]["first_difference"] == {"t": 1, "q": 1, "u": 0}
    assert by_id["stanley-pitman-printed"]["first_difference"] == {"t": 0, "q": 0, "u": 0}
    assert all(e["reproduced"] for e in by_id.values())
    json.dumps(report.to_json_obj())


def test_engine_regression_is_unexpected(monkeypatch):
    monkeypatch.setitem(families.FORMULAS, "stellohedron_rank_exact",
                        families.FORMULAS["stellohedron_printed"])
    report = run_suites(["oracle-vs-formula"], 3)
    assert not report.ok
    assert report.consistent_failures


def test_changed_erratum_is_unexpected(monkeypatch):
    stale = dataclasses.replace(DOCUMENTED["coarsening-F1"], computed="1 + t*q")
    monkeypatch.setitem(DOCUMENTED, "coarsening-F1", stale)
    report = run_suites(["braid-fan"], 3)
    assert not report.ok
    assert [c.erratum for c in report.errata_not_reproduced] == ["coarsening-F1"]
    assert "UNEXPECTED" in report.summary_lines()[-1]


def test_product_parts_cover_all_compositions():
    parts = list(errata.product_parts(4))
    # blocks of size >= 3 come as simplex or path: m=1..4 give 1, 2, 5, 11
    assert len(parts) == 1 + 2 + 5 + 11
    for split in parts:
        ground = [x for p in split for x in p.ground]
        assert ground == list(range(1, len(ground) + 1))
