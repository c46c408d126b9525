"""Exit criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its runtime and bound.
Run ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from resultants.core import GF, QQ, Poly, VarTable
from resultants.linalg import Matrix, bareiss_det, cofactor_det
from resultants.parser import format_poly, parse_poly
from resultants.resultant import (
    BinaryForm,
    discriminant_symbolic,
    gcd_binary_forms,
    p_table,
    res_product_form_symbolic,
    resultant,
    resultant_symbolic,
)
from resultants.scan import enumerate_pn, scan_disc_quotient, scan_quotient
from resultants.symprod import ehsp, is_symmetric
from resultants.verify import RESTH_CASES, check_ind, check_inv, check_resdisc, check_resth

pytestmark = pytest.mark.acceptance

DELTA2 = "4*p0*p2 - p1^2"
DELTA3 = "27*p0^2*p3^2 + 4*p0*p2^3 + 4*p1^3*p3 - p1^2*p2^2 - 18*p0*p1*p2*p3"

ARTIFACTS: list[Poly] = []  # symbolic outputs of criteria 1-3, re-parsed by criterion 10


_CAPSYS = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _emit(line):
    if _CAPSYS is None:
        print(line)
        return
    with _CAPSYS.disabled():
        print("\n" + line, flush=True)


@contextmanager
def criterion(number, title, bound=None):
    """Run a block, then print one PASS/FAIL line and re-raise any failure."""
    start = time.perf_counter()
    ok, err = True, None
    try:
        yield
    except AssertionError as exc:
        ok, err = False, exc
    elapsed = time.perf_counter() - start
    if bound is not None and elapsed >= bound:
        ok = False
        err = err or AssertionError(f"took {elapsed:.2f} s, bound {bound} s")
    limit = f" (bound {bound} s)" if bound is not None else ""
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} [{elapsed:.2f} s{limit}]"
    _emit(line)
    if err is not None:
        raise err


def _cold():
    """Drop memoized symbolic results so timings measure real work."""
    for fn in (discriminant_symbolic, resultant_symbolic, ehsp):
        fn.cache_clear()


def test_c01_delta2_delta3():
    with criterion(1, "discriminants of quadratic and cubic forms", bound=1):
        _cold()
        d2, d3 = discriminant_symbolic(2), discriminant_symbolic(3)
        assert d2 == parse_poly(DELTA2, p_table(2))
        assert d3 == parse_poly(DELTA3, p_table(3))
        assert len(d2) == 2 and len(d3) == 5
    ARTIFACTS.extend([d2, d3])


def test_c02_resth_identity():
    with criterion(2, "Res equals the root product for all listed (n, m)", bound=60):
        _cold()
        for n, m in RESTH_CASES:
            check = check_resth(n, m)
            assert check, f"({n},{m}): {check.detail}"
            ARTIFACTS.extend(check.artifacts)
            ARTIFACTS.append(res_product_form_symbolic(n, m))


def test_c03_resdisc():
    with criterion(3, "Res(f, f') against v0 * Delta_n for 2 <= n <= 5", bound=60):
        _cold()
        for n in range(2, 6):
            check = check_resdisc(n)
            assert check, f"n={n}: {check.detail}"
            ARTIFACTS.extend(check.artifacts)


def test_c04_bihomogeneity():
    rng = random.Random(2024)

    def rnd_form(deg):
        return BinaryForm([Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(deg + 1)])

    def rnd_scalar():
        return Fraction(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 5))

    with criterion(4, "Res(lam f, mu g) = lam^m mu^n Res(f, g) on 500 instances"):
        for _ in range(500):
            n, m = rng.randint(1, 4), rng.randint(1, 4)
            f, g, lam, mu = rnd_form(n), rnd_form(m), rnd_scalar(), rnd_scalar()
            assert resultant(f.scale(lam), g.scale(mu)) == lam**m * mu**n * resultant(f, g)


def test_c05_vanishing_oracle():
    with criterion(5, "Res = 0 iff gcd nonconstant, exhaustive over F5 and F7, n, m <= 2", bound=10):
        for q in (5, 7):
            F = GF(q)
            forms = {d: [BinaryForm(p.coords, F) for p in enumerate_pn(q, d)] for d in (1, 2)}
            for n in (1, 2):
                for m in (1, 2):
                    for f in forms[n]:
                        for g in forms[m]:
                            assert (resultant(f, g) == 0) == (gcd_binary_forms(f, g).degree >= 1)


def test_c06_quotient_scans():
    with criterion(6, "scan_quotient(5,2,2) and scan_disc_quotient(5,3)", bound=120):
        for rep, order, bound in ((scan_quotient(5, 2, 2), 4, 60), (scan_disc_quotient(5, 3), 6, 60)):
            assert rep.elapsed_ms < bound * 1000
            assert rep.violations == 0
            assert rep.split_missed == 0
            assert all(order % k == 0 for k in rep.orbit_histogram)


def test_c07_independence():
    with criterion(7, "Jacobian rank certificate for 1 <= n <= 5", bound=5):
        for n in range(1, 6):
            assert check_ind(n, trials=3, seed=n)


def test_c08_invariant_round_trip():
    with criterion(8, "100 EHSP round trips and symmetry of every p_k"):
        for n in (1, 2, 3):
            samples = 34 if n < 3 else 32
            check = check_inv(n, samples=samples, seed=n, max_degree=3)
            assert check, check.detail
        for n in range(1, 6):
            assert all(is_symmetric(p, n) for p in ehsp(n))


def _random_poly(rng, table, max_degree, max_terms=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = [0] * len(table)
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(len(table))] += 1
        terms[tuple(e)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(table, QQ, terms)


def test_c09_determinants():
    rng = random.Random(9)
    table = VarTable(("a", "b", "c"))
    with criterion(9, "Bareiss equals cofactor on 200 random polynomial matrices"):
        for k in range(200):
            n = 1 + k % 6
            M = Matrix([[_random_poly(rng, table, 2) for _ in range(n)] for _ in range(n)])
            assert bareiss_det(M) == cofactor_det(M)


def test_c10_parser_round_trip():
    if not ARTIFACTS:  # criteria 1-3 not run in this session
        test_c01_delta2_delta3()
        test_c02_resth_identity()
        test_c03_resdisc()
    rng = random.Random(10)
    table = VarTable(("x01", "x11", "v0", "w1", "p2", "Z"))
    with criterion(10, f"parser round trip on {len(ARTIFACTS)} artifacts and 1000 random polynomials"):
        for p in ARTIFACTS:
            assert parse_poly(format_poly(p), p.table) == p
        for _ in range(1000):
            p = _random_poly(rng, table, 5, max_terms=6)
            assert parse_poly(format_poly(p), table) == p


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
