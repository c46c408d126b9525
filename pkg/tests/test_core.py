from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from resultants.core import (
    GF,
    MINUS_INFINITY,
    QQ,
    ZZ,
    AlgebraError,
    InexactDivisionError,
    Poly,
    RingMismatchError,
    TableMismatchError,
    UnknownVariableError,
    VarTable,
    derivative,
    exact_divide,
    make_table,
    multidegree,
    poly_arith,
    poly_eval,
    poly_substitute,
)
from resultants.parser import parse_poly

from conftest import XYZW, assignments, polys


def P(text, table=XYZW, ring=QQ):
    return parse_poly(text, table, ring)


class TestRings:
    def test_rationals_lowest_terms(self):
        assert QQ(Fraction(4, 6)) == Fraction(2, 3)
        assert QQ(Fraction(4, 2)) == 2 and type(QQ(Fraction(4, 2))) is int

    def test_prime_field_canonical(self):
        F = GF(7)
        assert F(-1) == 6
        assert F(Fraction(1, 2)) == 4
        with pytest.raises(ZeroDivisionError):
            F(Fraction(1, 7))

    @pytest.mark.parametrize("p", [2, 4, 9, 2**31 + 11])
    def test_prime_field_guard(self, p):
        with pytest.raises(AlgebraError):
            GF(p)

    def test_integers_reject_fractions(self):
        with pytest.raises(AlgebraError):
            ZZ(Fraction(1, 2))
        with pytest.raises(InexactDivisionError):
            ZZ.exact_quo(3, 2)


class TestVarTable:
    def test_unique_names(self):
        with pytest.raises(AlgebraError):
            VarTable(("x", "x"))

    def test_blocks_must_name_known_variables(self):
        with pytest.raises(UnknownVariableError):
            make_table("x y", blocks={"b": ["z"]})

    def test_unknown_block(self):
        with pytest.raises(AlgebraError):
            multidegree(P("x"), "nope")


class TestExamples:
    def test_cancellation(self):
        assert poly_arith(P("x + y"), P("x - y"), "add") == P("2*x")

    def test_difference_of_squares(self):
        assert poly_arith(P("x - y"), P("x + y"), "mul") == P("x^2 - y^2")

    def test_linear_product(self):
        t = VarTable(("x01", "x11", "x02", "x12", "X", "Y"))
        f = P("x01*X - x11*Y", t) * P("x02*X - x12*Y", t)
        expected = P("x01*x02*X^2 - (x01*x12 + x11*x02)*X*Y + x11*x12*Y^2", t)
        assert f == expected
        assert len(f) == 4  # the middle coefficient has two terms

    def test_mismatch_errors(self):
        other = VarTable(("a",))
        with pytest.raises(TableMismatchError):
            P("x") + Poly.var("a", other)
        with pytest.raises(RingMismatchError):
            P("x") + P("x", ring=GF(5))

    def test_eval(self):
        assert poly_eval(P("x^2 + y"), {"x": 2, "y": 3}) == 7
        p = P("3*x*y + 5*z - 2")
        assert poly_eval(p, dict.fromkeys(XYZW.names, 0)) == -2
        t = VarTable(("p0", "p1", "p2"))
        assert poly_eval(P("4*p0*p2 - p1^2", t), {"p0": 1, "p1": -3, "p2": 2}) == -1

    def test_eval_missing_variable(self):
        with pytest.raises(UnknownVariableError):
            poly_eval(P("x + y"), {"x": 1})

    def test_substitute_specialization(self):
        t = VarTable(("x01", "x11", "x02", "x12", "X", "Y"))
        F2 = P("(x01*X - x11*Y)*(x02*X - x12*Y)", t)
        one = Poly.const(1, t)
        got = poly_substitute(F2, {"Y": one, "x01": one, "x02": one})
        assert got == P("(X - x11)*(X - x12)", t)

    def test_substitute_identity_and_binomial(self):
        p = P("x^3*y - 2*z + 1")
        assert poly_substitute(p, {n: Poly.var(n, XYZW) for n in XYZW.names}) == p
        t = VarTable(("x", "a", "b"))
        got = poly_substitute(P("x^2", t), {"x": P("a + b", t)})
        assert got == P("a^2 + 2*a*b + b^2", t)

    def test_exact_divide(self):
        assert exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y")
        t = VarTable(("v0", "v1", "v2"))
        a = P("v0*(4*v0*v2 - v1^2)", t)
        assert exact_divide(a, P("v0", t)) == P("4*v0*v2 - v1^2", t)
        with pytest.raises(InexactDivisionError):
            exact_divide(P("x^2 + 1"), P("x + 1"))
        with pytest.raises(ZeroDivisionError):
            exact_divide(P("x"), P("0"))

    def test_derivative(self):
        t = VarTable(("v0", "v1", "v2", "v3", "Z"))
        assert derivative(P("v0*Z^2 + v1*Z + v2", t), "Z") == P("2*v0*Z + v1", t)
        assert derivative(P("7", t), "Z").is_zero()
        assert derivative(P("v0*Z^3 + v1*Z^2 + v2*Z + v3", t), "Z") == P("3*v0*Z^2 + 2*v1*Z + v2", t)
        with pytest.raises(UnknownVariableError):
            derivative(P("x"), "q")

    def test_multidegree(self):
        t = make_table("v0 v1 w0 w1", blocks={"v": ["v0", "v1"], "w": ["w0", "w1"]})
        r = P("v0*w1 - v1*w0", t)
        assert multidegree(r, "v") == 1 and multidegree(r, "w") == 1
        t = make_table("p0 p1 p2", blocks={"p": ["p0", "p1", "p2"]})
        assert multidegree(P("4*p0*p2 - p1^2", t), "p") == 2
        t = make_table("x y", blocks={"b": ["x", "y"]})
        assert multidegree(P("x + y^2", t), "b") is None

    def test_zero_degree_is_minus_infinity(self):
        z = Poly.zero(XYZW)
        assert z.degree() == MINUS_INFINITY
        assert z.degree() != -1
        assert P("x*y^2").degree() == 3


# -- properties ---------------------------------------------------------------

PROPS = settings(max_examples=1000, deadline=None)


@PROPS
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero(XYZW)


@settings(max_examples=300, deadline=None)
@given(polys(ring=GF(7), coeffs=st.integers(0, 6)), polys(ring=GF(7), coeffs=st.integers(0, 6)),
       polys(ring=GF(7), coeffs=st.integers(0, 6)))
def test_ring_axioms_mod_p(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=300, deadline=None)
@given(polys(), polys(), assignments())
def test_eval_is_homomorphism(a, b, asg):
    assert poly_eval(a * b, asg) == poly_eval(a, asg) * poly_eval(b, asg)
    assert poly_eval(a + b, asg) == poly_eval(a, asg) + poly_eval(b, asg)


@settings(max_examples=300, deadline=None)
@given(polys(max_degree=3), polys(max_degree=3))
def test_exact_divide_recovers_factor(a, b):
    if b.is_zero():
        return
    assert exact_divide(a * b, b) == a


@settings(max_examples=300, deadline=None)
@given(polys(), st.randoms(use_true_random=False))
def test_canonical_form_ignores_insertion_order(p, rnd):
    items = list(p.terms.items())
    rnd.shuffle(items)
    q = Poly(XYZW, QQ, items)
    assert q == p
    assert q.items() == p.items()
    assert hash(q) == hash(p)


@settings(max_examples=300, deadline=None)
@given(polys(), polys(), st.sampled_from(XYZW.names))
def test_derivative_linear_and_leibniz(a, b, v):
    assert derivative(a + b, v) == derivative(a, v) + derivative(b, v)
    assert derivative(a * b, v) == derivative(a, v) * b + a * derivative(b, v)


@settings(max_examples=200, deadline=None)
@given(polys(max_degree=3), polys(max_degree=2), polys(max_degree=2))
def test_substitution_is_composition(p, s1, s2):
    """Substituting then evaluating equals evaluating the substituted values."""
    asg = {"x": 2, "y": Fraction(-1, 3), "z": 5, "w": 1}
    q = poly_substitute(p, {"x": s1, "y": s2})
    inner = dict(asg, x=poly_eval(s1, asg), y=poly_eval(s2, asg))
    assert poly_eval(q, asg) == poly_eval(p, inner)
