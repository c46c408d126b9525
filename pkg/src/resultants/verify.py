"""Symbolic identity checks shared by the CLI ``verify`` command and the tests.

Each ``check_*`` function returns a :class:`Check` carrying a pass flag and a
one-line detail; none of them raise on a failed identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .core import QQ, Poly, VarTable, exact_divide
from .resultant import (
    BinaryForm,
    disc_from_roots_symbolic,
    discriminant_symbolic,
    p_table,
    res_product_form_symbolic,
    resultant,
    resultant_symbolic,
    vt_table,
    xy_table,
)
from .symprod import (
    check_independence,
    ehsp,
    ehsp_table,
    elementary_symmetric,
    expand_in_ehsp,
    express_in_ehsp,
    is_symmetric,
)

RESTH_CASES = ((1, 1), (2, 1), (2, 2), (3, 2), (3, 3))


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    artifacts: list = field(default_factory=list, repr=False)

    def __bool__(self) -> bool:
        return self.ok


def ehsp_substitution(n: int, m: int) -> dict[str, Poly]:
    """v_k -> (-1)^k p_k(x), w_l -> (-1)^l p_l(y) over the x/y alphabet."""
    table = xy_table(n, m)
    sub = {}
    for k, p in enumerate(ehsp(n, "x")):
        sub[f"v{k}"] = p.change_table(table) * (-1) ** k
    for k, p in enumerate(ehsp(m, "y")):
        sub[f"w{k}"] = p.change_table(table) * (-1) ** k
    return sub


def root_substitution(n: int, m: int) -> tuple[VarTable, dict[str, Poly]]:
    """v_k -> (-1)^k v0 s_k(t), w_l -> (-1)^l w0 s_l(u) over v0, t, w0, u."""
    ts = [f"t{i}" for i in range(1, n + 1)]
    us = [f"u{j}" for j in range(1, m + 1)]
    table = VarTable(("v0", *ts, "w0", *us))
    v0, w0 = Poly.var("v0", table), Poly.var("w0", table)
    sub = {}
    for k, s in enumerate(elementary_symmetric(ts, table)):
        sub[f"v{k}"] = v0 * s * (-1) ** k
    for k, s in enumerate(elementary_symmetric(us, table)):
        sub[f"w{k}"] = w0 * s * (-1) ** k
    return table, sub


def check_resth(n: int, m: int) -> Check:
    """Res(f_v, g_w) against both product formulas."""
    res = resultant_symbolic(n, m)
    lhs = res.substitute(ehsp_substitution(n, m), xy_table(n, m))
    rhs = res_product_form_symbolic(n, m)
    if lhs != rhs:
        return Check(f"resth({n},{m})", False, "x/y product form differs", [res])

    table, sub = root_substitution(n, m)
    lhs = res.substitute(sub, table)
    v0, w0 = Poly.var("v0", table), Poly.var("w0", table)
    rhs = v0**m * w0**n
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            rhs = rhs * (Poly.var(f"t{i}", table) - Poly.var(f"u{j}", table))
    if lhs != rhs:
        return Check(f"resth({n},{m})", False, "root product form differs", [res])
    return Check(f"resth({n},{m})", True, f"{len(res)} terms", [res])


def check_resdisc(n: int) -> Check:
    """Res(f, f') = v0 * Delta_n and Res(f, f') = (-1)^(n(n-1)/2) * v0 * D(f).

    ``Delta_n`` is Res(f, f')/v0 as a polynomial in the coefficients; D(f) is
    v0^(2n-2) * prod_{i<j}(t_i - t_j)^2, reached through the roots.
    """
    name = f"resdisc({n})"
    table = p_table(n, "v")
    f = BinaryForm.generic(n, "v", table)
    res = resultant(f, f.derivative())
    delta = discriminant_symbolic(n).change_table(p_table(n, "p"))
    delta_v = delta.substitute({f"p{k}": Poly.var(f"v{k}", table) for k in range(n + 1)}, table)
    v0 = Poly.var("v0", table)
    if res != v0 * delta_v or exact_divide(res, v0) != delta_v:
        return Check(name, False, "Res(f, f') != v0 * Delta_n", [res, delta])

    rt = vt_table(n)
    ts = [f"t{i}" for i in range(1, n + 1)]
    v0r = Poly.var("v0", rt)
    sub = {f"v{k}": v0r * s * (-1) ** k for k, s in enumerate(elementary_symmetric(ts, rt))}
    sign = (-1) ** (n * (n - 1) // 2)
    D = disc_from_roots_symbolic(n)
    res_roots = res.substitute(sub, rt)
    if res_roots != v0r * D * sign:
        return Check(name, False, "Res(f, f') != (-1)^(n(n-1)/2) v0 D(f)", [res, delta])
    if delta_v.substitute(sub, rt) != D * sign:
        return Check(name, False, "Delta_n != (-1)^(n(n-1)/2) D(f)", [res, delta])
    return Check(name, True, f"sign {'+' if sign > 0 else '-'}, {len(delta)} terms", [res, delta])


def check_ind(n: int, trials: int = 3, seed: int | None = 0) -> Check:
    ok = check_independence(n, trials, seed)
    return Check(f"ind({n})", ok, f"Jacobian rank {'=' if ok else '<'} {n + 1}")


def random_ehsp_poly(n: int, max_degree: int, rng: random.Random, max_terms: int = 4) -> Poly:
    """Random polynomial in P0..Pn of total degree <= max_degree."""
    table = ehsp_table(n)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        e = [0] * (n + 1)
        for _ in range(d):
            e[rng.randrange(n + 1)] += 1
        terms[tuple(e)] = Fraction(rng.choice([-5, -3, -2, -1, 1, 2, 3, 7]), rng.choice([1, 1, 2, 3]))
    return Poly(table, QQ, terms)


def check_inv(n: int, samples: int = 20, seed: int | None = 0, max_degree: int = 3) -> Check:
    """Every p_k is symmetric, and random P-polynomials round-trip through express_in_ehsp."""
    name = f"inv({n})"
    for k, p in enumerate(ehsp(n)):
        if not is_symmetric(p, n):
            return Check(name, False, f"p{k} is not symmetric")
    rng = random.Random(seed)
    for _ in range(samples):
        q = random_ehsp_poly(n, max_degree, rng)
        back = express_in_ehsp(expand_in_ehsp(q, n), n)
        if back != q:
            return Check(name, False, f"round trip failed for {q.items()}")
    return Check(name, True, f"{samples} round trips")
