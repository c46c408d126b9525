import json

import pytest

from resultants import scan
from resultants.core import AlgebraError, GF
from resultants.scan import (
    BudgetExceededError,
    ScanReport,
    count_pn,
    enumerate_p1,
    enumerate_pn,
    is_split,
    root_count,
    scan_disc_quotient,
    scan_quotient,
    scan_resultant_equiv,
)
from resultants.symprod import ProjPoint

JSON_KEYS = {"q", "n", "m", "points_scanned", "violations", "split_covered", "split_missed",
             "fiber_count", "orbit_histogram", "elapsed_ms"}


def test_enumerate_p1():
    assert len(enumerate_p1(5)) == 6
    assert len(enumerate_p1(7)) == 8
    assert enumerate_p1(5)[0] == ProjPoint((1, 0), GF(5))
    assert enumerate_p1(5)[-1] == ProjPoint((0, 1), GF(5))
    with pytest.raises(AlgebraError):
        enumerate_p1(6)


@pytest.mark.parametrize("q, n", [(5, 1), (5, 2), (7, 3)])
def test_enumerate_pn_counts(q, n):
    pts = enumerate_pn(q, n)
    assert len(pts) == len(set(pts)) == count_pn(q, n)


def test_root_count():
    F = GF(5)
    assert root_count((1, -3, 2), F) == 2
    assert root_count((1, 0, 1), F) == 2  # Z^2 + 1 = (Z - 2)(Z - 3) mod 5
    assert root_count((1, 0, 2), F) == 0
    assert root_count((0, 1, 0), F) == 2  # X*Y
    assert is_split((1, -2, 1), F) and not is_split((1, 0, 2), F)


@pytest.mark.parametrize("q, n, m, pairs", [(5, 1, 1, 36), (5, 2, 2, 961), (7, 2, 1, 456), (7, 2, 2, 3249)])
def test_resultant_equivalence(q, n, m, pairs):
    rep = scan_resultant_equiv(q, n, m)
    assert rep.points_scanned == pairs
    assert rep.violations == 0 and rep.passed


def test_quotient_1_1():
    rep = scan_quotient(5, 1, 1)
    assert rep.passed
    assert rep.fiber_count == 6
    assert rep.orbit_histogram == {1: 6}
    assert rep.split_covered == 6 and rep.split_missed == 0


def test_quotient_2_1():
    rep = scan_quotient(5, 2, 1)
    assert rep.violations == 0 and rep.split_missed == 0


def test_quotient_2_2():
    rep = scan_quotient(5, 2, 2)
    assert rep.passed
    assert set(rep.orbit_histogram) <= {1, 2, 4}
    assert rep.points_scanned == 6**4


def test_disc_quotient():
    rep = scan_disc_quotient(5, 2)
    assert rep.passed
    assert rep.fiber_count == 6 and rep.orbit_histogram == {1: 6}
    rep = scan_disc_quotient(7, 3)
    assert rep.points_scanned == 512 and rep.violations == 0
    rep = scan_disc_quotient(5, 3)
    assert rep.passed and all(6 % k == 0 for k in rep.orbit_histogram)


def test_preconditions():
    with pytest.raises(AlgebraError):
        scan_quotient(3, 3, 1)
    with pytest.raises(AlgebraError):
        scan_disc_quotient(5, 1)
    with pytest.raises(AlgebraError):
        scan_resultant_equiv(9, 1, 1)


def test_budget_guard_before_work(monkeypatch):
    calls = []
    monkeypatch.setattr(scan, "enumerate_pn", lambda *a: calls.append(a) or [])
    monkeypatch.setattr(scan, "enumerate_p1", lambda *a: calls.append(a) or [])
    with pytest.raises(BudgetExceededError):
        scan_resultant_equiv(101, 4, 4)
    with pytest.raises(BudgetExceededError):
        scan_quotient(11, 4, 4)
    with pytest.raises(BudgetExceededError):
        scan_disc_quotient(101, 5)
    assert calls == []


def _strip(rep):
    d = rep.to_dict()
    d.pop("elapsed_ms")
    return d


def test_deterministic_across_workers():
    a = scan_quotient(5, 2, 1, workers=1)
    b = scan_quotient(5, 2, 1, workers=2)
    c = scan_quotient(5, 2, 1, workers=1)
    assert _strip(a) == _strip(b) == _strip(c)
    assert _strip(scan_resultant_equiv(5, 2, 1, workers=2)) == _strip(scan_resultant_equiv(5, 2, 1))
    assert _strip(scan_disc_quotient(5, 3, workers=3)) == _strip(scan_disc_quotient(5, 3))


def test_json_round_trip():
    rep = scan_quotient(5, 2, 2)
    doc = json.loads(rep.to_json())
    assert JSON_KEYS <= set(doc)
    assert ScanReport.from_dict(doc) == rep


def test_merge_is_commutative():
    a = ScanReport(5, 2, 2, 10, 0, 3, 0, 2, {1: 1, 2: 1})
    b = ScanReport(5, 2, 2, 4, 1, 1, 1, 1, {2: 1})
    assert a.merge(b) == b.merge(a)
    assert a.merge(b).orbit_histogram == {1: 1, 2: 2}
    with pytest.raises(AlgebraError):
        a.merge(ScanReport(7, 2, 2))
