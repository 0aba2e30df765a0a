from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sklylab.errors import (
    GroebnerUnavailable,
    NotZeroDimensional,
    ParseError,
    ShapeMismatch,
    UnknownVariable,
)
from sklylab.mpoly import (
    MPoly,
    PolyIdeal,
    VarTable,
    jacobian_minor,
    parse_poly,
    radical_member,
    solve_zero_dim,
    variety_equal,
)
from sklylab.scalars import ComplexField, PrimeField, RationalField

Q = RationalField()
XY = VarTable.make(["x", "y"])
X4 = VarTable.make(["x0", "x1", "x2", "x3"])


def P(text, vt=XY, field=Q):
    return parse_poly(text, vt, field)


# ---------------------------------------------------------------- parsing

def test_parse_g1_shape():
    g1 = P("-x0^2+x1^2+x2^2+x3^2", X4)
    assert g1.coefficient((2, 0, 0, 0)) == Fraction(-1)
    assert g1.coefficient((0, 2, 0, 0)) == Fraction(1)
    assert len(g1.terms) == 4


def test_parse_zero():
    assert P("0").is_zero()


def test_parse_weighted_inhomogeneous():
    vt = VarTable.make(["z0", "z1", "g1"], [3, 3, 2])
    f = parse_poly("3/2*z0*g1 - z1", vt, Q)
    assert not f.is_homogeneous()
    assert f.weighted_degree() == 5


def test_parse_roundtrip():
    for text in ["x^2-y", "1/2*x*y+3", "-x+y^3-2"]:
        f = P(text)
        assert P(f.to_str()) == f


def test_parse_errors():
    with pytest.raises(UnknownVariable):
        P("x+q")
    with pytest.raises(ParseError):
        P("x+")
    with pytest.raises(ParseError):
        P("")
    with pytest.raises(ParseError) as e:
        P("x ^ y")
    assert e.value.position >= 0


# ---------------------------------------------------------------- arithmetic

@settings(max_examples=30)
@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_ring_identities(a, b, c):
    x, y = MPoly.var(XY, Q, "x"), MPoly.var(XY, Q, "y")
    f = a * x + b * y + c
    g = b * x * y - a
    h = x ** 2 - c * y
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()
    assert f * g == g * f


def test_diff():
    f = P("x^3*y+2*x")
    assert f.diff("x") == P("3*x^2*y+2")
    assert f.diff("y") == P("x^3")


def test_specialize_and_evaluate():
    f = P("x^2+y")
    assert f.evaluate([Fraction(2), Fraction(3)]) == Fraction(7)
    g = f.specialize({"y": Fraction(1)})
    assert g.vartab.names == ("x",)
    assert g == parse_poly("x^2+1", g.vartab, Q)


# ---------------------------------------------------------------- jacobian

def test_jacobian_minor_product():
    vt = VarTable.make(["z0", "z1", "z2", "z3"])
    F = [parse_poly("z0*z1", vt, Q), parse_poly("z2*z3", vt, Q)]
    m = jacobian_minor(F, [0, 1], ["z1", "z3"])
    assert m == parse_poly("z0*z2", vt, Q)


def test_jacobian_minor_repeated_rows():
    vt = VarTable.make(["z0", "z1"])
    F = [parse_poly("z0", vt, Q), parse_poly("z0", vt, Q)]
    assert jacobian_minor(F, [0, 1], ["z0", "z1"]).is_zero()


def test_jacobian_minor_alternating():
    vt = VarTable.make(["z0", "z1", "z2"])
    F = [parse_poly("z0^2+z1*z2", vt, Q), parse_poly("z1^2-z0*z2", vt, Q)]
    m = jacobian_minor(F, [0, 1], ["z0", "z1"])
    m_swapped_rows = jacobian_minor(F, [1, 0], ["z0", "z1"])
    m_swapped_cols = jacobian_minor(F, [0, 1], ["z1", "z0"])
    assert m_swapped_rows == -m
    assert m_swapped_cols == -m


def test_jacobian_shape_mismatch():
    vt = VarTable.make(["z0", "z1"])
    F = [parse_poly("z0", vt, Q)]
    with pytest.raises(ShapeMismatch):
        jacobian_minor(F, [0], ["z0", "z1"])


# ---------------------------------------------------------------- groebner

def test_groebner_already_basis():
    I = PolyIdeal([P("x^2"), P("x*y")])
    gb = I.groebner("grevlex")
    assert sorted(g.to_str() for g in gb) == ["x*y", "x^2"]


def test_groebner_linear():
    I = PolyIdeal([P("x-y"), P("y")])
    gb = I.groebner()
    assert sorted(g.to_str() for g in gb) == ["x", "y"]


def test_groebner_unit():
    I = PolyIdeal([P("2")])
    assert I.is_unit()
    assert [g.to_str() for g in I.groebner()] == ["1"]


def test_groebner_reduced_property():
    # no leading term may divide any term of another basis element
    I = PolyIdeal([P("x^2+y^2-1"), P("x*y-1")])
    gb = I.groebner("lex")
    from sklylab.mpoly import _leading, _divides, monomial_key

    key = monomial_key("lex", XY)
    for i, g in enumerate(gb):
        le = _leading(g, key)[0]
        for j, h in enumerate(gb):
            if i == j:
                continue
            assert not any(_divides(le, e) for e in h.terms)


def test_groebner_complex_disabled():
    C = ComplexField(1e-9)
    f = MPoly.var(XY, C, "x")
    with pytest.raises(GroebnerUnavailable):
        PolyIdeal([f]).groebner()


def test_normal_form():
    I = PolyIdeal([P("x^2"), P("x*y")])
    assert I.normal_form(P("x^2*y")).is_zero()
    assert I.normal_form(P("y^2")) == P("y^2")
    assert I.contains(P("x^2"))


@settings(max_examples=20, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2))
def test_normal_form_additive(a, b, e1, e2):
    I = PolyIdeal([P("x^2-y"), P("y^2-1")])
    f = a * P("x") ** e1 * P("y") ** e2 + b
    g = P("x*y") * (a - b)
    lhs = I.normal_form(f + g)
    rhs = I.normal_form(I.normal_form(f) + I.normal_form(g))
    assert lhs == rhs


# ---------------------------------------------------------------- radical / variety

def test_radical_member_nilpotent():
    I = PolyIdeal([P("x^2")])
    assert radical_member(P("x"), I)
    assert not radical_member(P("x+1"), I)


def test_radical_member_coordinate():
    vt = VarTable.make(["z0", "z1", "z2", "z3"])
    I = PolyIdeal([parse_poly("z0*z3", vt, Q), parse_poly("z0*z1", vt, Q)])
    assert not radical_member(parse_poly("z0", vt, Q), I)


def test_radical_member_in_ideal():
    I = PolyIdeal([P("x^2-y"), P("y^2")])
    f = P("x^2-y") * P("x") + P("y^2") * P("y+1")
    assert radical_member(f, I)


def test_radical_member_agrees_with_point_sampling():
    # brute-force check over a small prime field
    F31 = PrimeField(31)
    vt = VarTable.make(["x", "y"])
    I = PolyIdeal(
        [parse_poly("x^2*y", vt, F31), parse_poly("x*y^2", vt, F31)]
    )
    for f in [parse_poly(t, vt, F31) for t in ["x*y", "x+y", "x^3*y^2", "x"]]:
        vanishes = all(
            F31.is_zero(f.evaluate([a, b]))
            for a in range(31)
            for b in range(31)
            if all(F31.is_zero(g.evaluate([a, b])) for g in I.generators)
        )
        assert radical_member(f, I) == vanishes


def test_variety_equal():
    assert variety_equal(PolyIdeal([P("x^2")]), PolyIdeal([P("x")]))
    assert not variety_equal(PolyIdeal([P("x")]), PolyIdeal([P("y")]))
    assert not variety_equal(PolyIdeal([P("x*y")]), PolyIdeal([P("x")]))


# ---------------------------------------------------------------- solving

def test_solve_two_points():
    sols = solve_zero_dim(PolyIdeal([P("x^2-1"), P("y")]))
    assert sols == [((Fraction(-1), Fraction(0)), 1), ((Fraction(1), Fraction(0)), 1)]


def test_solve_multiplicity():
    sols = solve_zero_dim(PolyIdeal([P("x^2"), P("y")]))
    assert sols == [((Fraction(0), Fraction(0)), 2)]


def test_solve_not_zero_dim():
    with pytest.raises(NotZeroDimensional):
        solve_zero_dim(PolyIdeal([P("x*y")]))


def test_solve_over_fp():
    F13 = PrimeField(13)
    vt = VarTable.make(["x", "y"])
    I = PolyIdeal([parse_poly("x^2-4", vt, F13), parse_poly("y-x", vt, F13)])
    sols = solve_zero_dim(I)
    assert {pt for pt, _ in sols} == {(2, 2), (11, 11)}


def test_solve_empty():
    sols = solve_zero_dim(PolyIdeal([P("x"), P("x+1"), P("y")]))
    assert sols == []


def test_solve_rational_fractions():
    sols = solve_zero_dim(PolyIdeal([P("2*x-1"), P("3*y+2")]))
    assert sols == [((Fraction(1, 2), Fraction(-2, 3)), 1)]
