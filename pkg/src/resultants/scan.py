"""Exhaustive finite-field scans of the quotient statements.

Every scan walks its point space in a fixed order, cut into contiguous
chunks that may run in worker processes.  Merging the partial reports is
associative and commutative, so the result does not depend on the schedule.

Finite fields are not algebraically closed, so surjectivity is only checked
on the split locus: points whose forms factor into F_q-rational linear
factors.  Locus points with a non-split form are counted in
``nonsplit_locus`` and otherwise ignored.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .core import AlgebraError, GF, PrimeField
from .resultant import BinaryForm, gcd_binary_forms, resultant
from .symprod import (
    ProjPoint,
    all_permutations,
    member_dn,
    member_rnm,
    member_xn,
    member_xnm,
    sn_act,
    viete,
)

BUDGET = 10**7


class BudgetExceededError(AlgebraError):
    pass


@dataclass
class ScanReport:
    q: int
    n: int
    m: int | None
    points_scanned: int = 0
    violations: int = 0
    split_covered: int = 0
    split_missed: int = 0
    fiber_count: int = 0
    orbit_histogram: dict[int, int] = field(default_factory=dict)
    nonsplit_locus: int = 0
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.split_missed == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["orbit_histogram"] = {str(k): v for k, v in sorted(self.orbit_histogram.items())}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> "ScanReport":
        d = dict(d)
        d["orbit_histogram"] = {int(k): v for k, v in d.get("orbit_histogram", {}).items()}
        return cls(**d)

    def merge(self, other: "ScanReport") -> "ScanReport":
        """Combine counters of two partial scans over disjoint chunks."""
        if (self.q, self.n, self.m) != (other.q, other.n, other.m):
            raise AlgebraError("cannot merge reports of different scans")
        hist = Counter(self.orbit_histogram)
        hist.update(other.orbit_histogram)
        return ScanReport(
            self.q,
            self.n,
            self.m,
            self.points_scanned + other.points_scanned,
            self.violations + other.violations,
            self.split_covered + other.split_covered,
            self.split_missed + other.split_missed,
            self.fiber_count + other.fiber_count,
            dict(hist),
            self.nonsplit_locus + other.nonsplit_locus,
            self.elapsed_ms + other.elapsed_ms,
        )


def _field(q: int) -> PrimeField:
    try:
        return GF(q)
    except AlgebraError:
        raise AlgebraError(f"q must be an odd prime below 2^31, got {q}") from None


def enumerate_p1(q: int) -> list[ProjPoint]:
    """(1:a) for a = 0..q-1, then (0:1)."""
    return enumerate_pn(q, 1)


def enumerate_pn(q: int, n: int) -> list[ProjPoint]:
    """Points of P^n(F_q), first nonzero coordinate 1, leading position first."""
    F = _field(q)
    out = []
    for lead in range(n + 1):
        for tail in itertools.product(range(q), repeat=n - lead):
            out.append(ProjPoint((0,) * lead + (1,) + tail, F))
    return out


def count_pn(q: int, n: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def _check_budget(count: int) -> None:
    if count > BUDGET:
        raise BudgetExceededError(f"scan would visit {count} points, budget is {BUDGET}")


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, math.ceil(len(items) / max(parts, 1)))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _run(fn, chunks, workers: int):
    if workers <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))


def root_count(coeffs, F: PrimeField) -> int:
    """Number of roots in P^1(F_q), with multiplicity, of a nonzero form."""
    total = 0
    c = list(coeffs)
    while c and c[0] == 0:  # Y divides the form: root at (1:0)
        c.pop(0)
        total += 1
    for a in range(F.p):
        while len(c) > 1:
            # synthetic division by (Z - a) when a is a root
            q = [c[0]]
            for x in c[1:]:
                q.append(F.reduce(x + a * q[-1]))
            if q[-1] != 0:
                break
            c = q[:-1]
            total += 1
    return total


def is_split(coeffs, F: PrimeField) -> bool:
    return root_count(coeffs, F) == len(coeffs) - 1


# ---------------------------------------------------------------------------
# Resultant vanishing versus common factor
# ---------------------------------------------------------------------------


def _equiv_chunk(args):
    q, n, m, fs = args
    F = GF(q)
    gs = enumerate_pn(q, m)
    rep = ScanReport(q, n, m)
    for pf in fs:
        f = BinaryForm(pf.coords, F)
        for pg in gs:
            g = BinaryForm(pg.coords, F)
            vanishes = resultant(f, g) == 0
            common = gcd_binary_forms(f, g).degree >= 1
            rep.points_scanned += 1
            if vanishes != common:
                rep.violations += 1
    return rep


def scan_resultant_equiv(q: int, n: int, m: int, workers: int = 1) -> ScanReport:
    """Res(f, g) = 0 iff gcd(f, g) is nonconstant, for all (f, g) in P^n x P^m."""
    _field(q)
    if n < 1 or m < 1 or q <= max(n, m):
        raise AlgebraError("need n, m >= 1 and q > max(n, m)")
    _check_budget(count_pn(q, n) * count_pn(q, m))
    start = time.perf_counter()
    fs = enumerate_pn(q, n)
    parts = _run(_equiv_chunk, [(q, n, m, c) for c in _chunks(fs, max(workers, 1) * 4)], workers)
    rep = ScanReport(q, n, m)
    for p in parts:
        rep = rep.merge(p)
    rep.elapsed_ms = (time.perf_counter() - start) * 1000
    return rep


# ---------------------------------------------------------------------------
# Quotient maps X_{n,m} -> R_{n,m} and X_n -> D_n
# ---------------------------------------------------------------------------


def _quotient_chunk(args):
    q, n, m, heads = args
    F = GF(q)
    P1 = enumerate_p1(q)
    fibers: dict = {}
    scanned = violations = 0
    for xs in heads:
        for ys in itertools.product(P1, repeat=m):
            scanned += 1
            if not member_xnm(xs, ys):
                continue
            image = (viete(xs, F), viete(ys, F))
            if not member_rnm(*image):
                violations += 1
            fibers.setdefault(image, set()).add((xs, ys))
    return scanned, violations, fibers


def _disc_chunk(args):
    q, n, heads = args
    F = GF(q)
    fibers: dict = {}
    scanned = violations = 0
    for xs in heads:
        scanned += 1
        if not member_xn(xs):
            continue
        image = viete(xs, F)
        if not member_dn(image):
            violations += 1
        fibers.setdefault(image, set()).add(xs)
    return scanned, violations, fibers


def _merge_fibers(parts):
    scanned = violations = 0
    fibers: dict = {}
    for s, v, fb in parts:
        scanned += s
        violations += v
        for k, pts in fb.items():
            fibers.setdefault(k, set()).update(pts)
    return scanned, violations, fibers


def _orbit_report(rep: ScanReport, fibers: dict, act, order: int) -> None:
    hist: Counter = Counter()
    for image in sorted(fibers, key=_sort_key):
        fiber = fibers[image]
        orbit = act(min(fiber, key=_sort_key))
        hist[len(orbit)] += 1
        if orbit != fiber or order % len(orbit):
            rep.violations += 1
    rep.fiber_count = len(fibers)
    rep.orbit_histogram = dict(sorted(hist.items()))


def _sort_key(obj):
    if isinstance(obj, ProjPoint):
        return obj.coords
    return tuple(_sort_key(o) for o in obj)


def scan_quotient(q: int, n: int, m: int, workers: int = 1) -> ScanReport:
    """Verify the quotient map X_{n,m} -> R_{n,m} over F_q.

    The image must cover the split part of R_{n,m}, and each fiber must be
    a single S_n x S_m orbit.
    """
    F = _field(q)
    if n < 1 or m < 1 or q <= max(n, m):
        raise AlgebraError("need n, m >= 1 and q > max(n, m)")
    _check_budget((q + 1) ** (n + m))
    start = time.perf_counter()
    P1 = enumerate_p1(q)
    heads = list(itertools.product(P1, repeat=n))
    parts = _run(_quotient_chunk, [(q, n, m, c) for c in _chunks(heads, max(workers, 1) * 4)], workers)
    scanned, violations, fibers = _merge_fibers(parts)
    rep = ScanReport(q, n, m, points_scanned=scanned, violations=violations)

    split_n = {p: is_split(p.coords, F) for p in enumerate_pn(q, n)}
    split_m = {p: is_split(p.coords, F) for p in enumerate_pn(q, m)}
    locus = set()
    for pv, sv in split_n.items():
        for pw, sw in split_m.items():
            if member_rnm(pv, pw):
                if sv and sw:
                    locus.add((pv, pw))
                else:
                    rep.nonsplit_locus += 1
    rep.split_covered = len(locus & fibers.keys())
    rep.split_missed = len(locus - fibers.keys())
    rep.violations += sum(1 for k in fibers if k not in locus)

    perms_n, perms_m = all_permutations(n), all_permutations(m)

    def act(pair):
        xs, ys = pair
        return {(sn_act(s, xs), sn_act(t, ys)) for s in perms_n for t in perms_m}

    _orbit_report(rep, fibers, act, math.factorial(n) * math.factorial(m))
    rep.elapsed_ms = (time.perf_counter() - start) * 1000
    return rep


def scan_disc_quotient(q: int, n: int, workers: int = 1) -> ScanReport:
    """Verify the quotient map X_n -> D_n over F_q.

    The image must cover the split part of D_n, and each fiber must be a
    single S_n orbit.
    """
    F = _field(q)
    if n < 2 or q <= n:
        raise AlgebraError("need n >= 2 and q > n")
    _check_budget((q + 1) ** n)
    start = time.perf_counter()
    P1 = enumerate_p1(q)
    tuples = list(itertools.product(P1, repeat=n))
    parts = _run(_disc_chunk, [(q, n, c) for c in _chunks(tuples, max(workers, 1) * 4)], workers)
    scanned, violations, fibers = _merge_fibers(parts)
    rep = ScanReport(q, n, None, points_scanned=scanned, violations=violations)

    locus = set()
    for p in enumerate_pn(q, n):
        if member_dn(p):
            if is_split(p.coords, F):
                locus.add(p)
            else:
                rep.nonsplit_locus += 1
    rep.split_covered = len(locus & fibers.keys())
    rep.split_missed = len(locus - fibers.keys())
    rep.violations += sum(1 for k in fibers if k not in locus)

    perms = all_permutations(n)
    _orbit_report(rep, fibers, lambda xs: {sn_act(s, xs) for s in perms}, math.factorial(n))
    rep.elapsed_ms = (time.perf_counter() - start) * 1000
    return rep
