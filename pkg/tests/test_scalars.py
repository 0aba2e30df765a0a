from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sklylab.errors import DivisionByZero, MixedFields, NonResidue, SklylabError
from sklylab.scalars import (
    ComplexField,
    PrimeField,
    RationalField,
    approx_eq,
    arith,
    is_prime,
    parse_field_spec,
    sqrt_mod_p,
)

Q = RationalField()
F13 = PrimeField(13)


def test_rational_add():
    assert arith(Q, Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)


def test_fp_mul():
    assert arith(F13, 6, 8, "mul") == 9


def test_complex_div_identity():
    C = ComplexField(1e-9)
    x = 3 + 4j
    assert C.eq(C.div(x, x), 1)


def test_div_by_zero():
    with pytest.raises(DivisionByZero):
        Q.div(Fraction(1), Fraction(0))
    with pytest.raises(DivisionByZero):
        F13.div(5, 13)
    with pytest.raises(DivisionByZero):
        ComplexField(1e-9).div(1, 1e-12)


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        Q.require_same(F13)


def test_char_2_3_rejected():
    for p in (2, 3, 4, 9):
        with pytest.raises(SklylabError):
            PrimeField(p)


def test_complex_tol_range():
    with pytest.raises(SklylabError):
        ComplexField(1e-2)
    with pytest.raises(SklylabError):
        ComplexField(0)


def test_parse_field_spec():
    assert parse_field_spec("rational").kind == "rational"
    assert parse_field_spec("fp:10007").p == 10007
    assert parse_field_spec("complex:1e-9").tol == 1e-9
    with pytest.raises(SklylabError):
        parse_field_spec("gf:8")


def test_sqrt_mod_p_examples():
    assert sqrt_mod_p(4, 13) == 2
    assert sqrt_mod_p(0, 13) == 0
    with pytest.raises(NonResidue):
        sqrt_mod_p(2, 13)
    # residues mod 13 are exactly {1,3,4,9,10,12}
    residues = sorted({r * r % 13 for r in range(1, 13)})
    assert residues == [1, 3, 4, 9, 10, 12]


@given(st.integers(min_value=1, max_value=10006))
def test_sqrt_mod_p_roundtrip(r):
    p = 10007
    assert sqrt_mod_p(r * r % p, p) == min(r, p - r)


def test_sqrt_mod_p_tonelli_branch():
    # p = 1 mod 4 exercises the full Tonelli-Shanks loop
    p = 10009
    for r in (2, 77, 5000):
        assert sqrt_mod_p(r * r % p, p) == min(r, p - r)


def test_approx_eq_hybrid():
    assert approx_eq(1.0, 1.0 + 1e-12, 1e-9)
    assert not approx_eq(1.0, 1.1, 1e-9)
    assert approx_eq(0, 1e-10, 1e-9)


@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
)
def test_rational_field_axioms(a, b, c):
    assert Q.mul(a, Q.add(b, c)) == Q.add(Q.mul(a, b), Q.mul(a, c))
    assert Q.add(Q.add(a, b), c) == Q.add(a, Q.add(b, c))


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_fp_field_axioms(a, b, c):
    assert F13.mul(a, F13.add(b, c)) == F13.add(F13.mul(a, b), F13.mul(a, c))
    if b % 13:
        assert F13.mul(F13.div(a, b), b) == a % 13


def test_is_prime():
    assert is_prime(10007)
    assert not is_prime(10006)
    assert is_prime(2)
    assert not is_prime(1)
