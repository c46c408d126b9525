"""Shared hypothesis strategies and small builders."""

from fractions import Fraction

from hypothesis import strategies as st

from resultants.core import QQ, Poly, VarTable

XYZW = VarTable(("x", "y", "z", "w"))

small_rationals = st.builds(
    Fraction, st.integers(-9, 9), st.integers(1, 4)
)


def polys(table=XYZW, ring=QQ, max_degree=4, max_terms=5, coeffs=small_rationals):
    """Random polynomials over ``table`` with total degree <= max_degree."""
    nv = len(table)

    def build(terms):
        return Poly(table, ring, terms)

    exps = st.lists(st.integers(0, max_degree), min_size=nv, max_size=nv).filter(
        lambda e: sum(e) <= max_degree
    )
    return st.lists(st.tuples(exps, coeffs), max_size=max_terms).map(build)


def assignments(table=XYZW, values=small_rationals):
    return st.fixed_dictionaries({n: values for n in table.names})
