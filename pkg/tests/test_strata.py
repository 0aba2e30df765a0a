from fractions import Fraction

import pytest

from sklylab.errors import BadPIDegree, RangeError, SklylabError
from sklylab.strata import (
    HilbertSeries,
    consistency_check,
    curve_label_normalize,
    discriminant_profile,
    hs_quotient_multiplicity,
    irr_table,
    q,
    validate_pi_degree,
)


# ---------------------------------------------------------------- series

def test_series_canonical_form():
    # (1 - t^3)/(1-t)^2 -> (1 + t + t^2)/(1-t)
    s = HilbertSeries.make([1, 0, 0, -1], 2)
    assert s.numer == (1, 1, 1) and s.denom_power == 1


def test_series_coefficients():
    s, _ = hs_quotient_multiplicity(2)
    # 1/(1-t) * (1+t+t^2): coefficients 1,2,3,3,3,...
    assert [s.coefficient(d) for d in range(6)] == [1, 2, 3, 3, 3, 3]


def test_multiplicity_examples():
    assert hs_quotient_multiplicity(0)[1] == 1
    assert hs_quotient_multiplicity(2)[1] == 3


def test_multiplicity_range_0_to_50():
    for k in range(51):
        series, mult = hs_quotient_multiplicity(k)
        assert mult == k + 1
        assert series.denom_power == 1
        assert series.numer == (Fraction(1),) * (k + 1)


def test_multiplicity_negative_rejected():
    with pytest.raises(RangeError):
        hs_quotient_multiplicity(-1)


# ---------------------------------------------------------------- q and degrees

def test_q_examples():
    assert q(2, 5) == 13
    assert q(1, 6) == 10
    for n in (3, 5, 7, 9):
        assert q(n, n) == n * n  # odd endpoint k = s


def test_bad_pi_degrees():
    for n in (1, 2, 4, 0, -3):
        with pytest.raises(BadPIDegree):
            validate_pi_degree(n)
    for n in (3, 5, 6, 7, 8, 9, 10):
        validate_pi_degree(n)


# ---------------------------------------------------------------- tables

def test_irr_table_n5():
    t = irr_table(5)
    by_label = {s.label: s for s in t.strata}
    assert by_label["smooth"].dims == (5,)
    assert by_label["curve(1)"].irrep_count == 2
    assert by_label["curve(1)"].dims == (2, 3)
    assert by_label["origin"].dims == (1,)
    assert len([s for s in t.strata if s.label.startswith("curve")]) == 4


def test_irr_table_n6():
    t = irr_table(6)
    by_label = {s.label: s for s in t.strata}
    assert by_label["off-curve"].dims == (3, 3)
    assert by_label["curve(0)"].irrep_count == 4
    assert by_label["curve(0)"].dims == (1, 1, 2, 2)
    assert len([s for s in t.strata if s.label.startswith("curve")]) == 2


def test_irr_table_parity_mismatch():
    with pytest.raises(SklylabError):
        irr_table(5, "even")


def test_braun_bound():
    for n in (3, 5, 6, 7, 9, 10):
        for s in irr_table(n).strata:
            assert s.dim_sum <= n


# ---------------------------------------------------------------- profile

def test_profile_n5():
    p = discriminant_profile(5)
    assert p["ranges"] == [
        (1, 1, "empty"),
        (2, 13, "origin"),
        (14, 17, "curve-union"),
        (18, 25, "singular-locus"),
    ]


def test_profile_n6():
    p = discriminant_profile(6)
    assert p["ranges"] == [
        (1, 1, "empty"),
        (2, 10, "origin"),
        (11, 18, "curve-union"),
        (19, 36, "singular-locus"),
    ]


def test_profile_partitions():
    for n in (3, 5, 6, 7, 9, 10, 11, 13):
        covered = []
        for lo, hi, _ in discriminant_profile(n)["ranges"]:
            covered.extend(range(lo, hi + 1))
        assert covered == list(range(1, n * n + 1))


# ---------------------------------------------------------------- consistency

def test_consistency_all_valid_degrees():
    for n in (3, 5, 6, 7, 9, 10, 11, 13):
        rep = consistency_check(n)
        assert rep["passed"], (n, rep["verdicts"])


def test_consistency_hand_values():
    t5 = {s.label: s for s in irr_table(5).strata}
    assert t5["curve(1)"].dim_sum == 5 and t5["curve(1)"].d_value == q(2, 5) == 13
    t6 = {s.label: s for s in irr_table(6).strata}
    assert t6["curve(0)"].d_value == q(1, 6) == 10
    assert t6["off-curve"].d_value == 18 == 2 * 3 * 3


def test_odd_q_symmetry():
    # q-values over curve strata symmetric under k -> n-2-k
    for n in (5, 7, 9):
        vals = [q(k + 1, n) for k in range(n - 1)]
        assert vals == vals[::-1]


# ---------------------------------------------------------------- labels

def test_curve_label_odd():
    # pairing k <-> n-2-k: for n=5, k=3 pairs with k=0
    assert curve_label_normalize(2, 3, 5) == (2, 0)
    assert curve_label_normalize(2, 1, 5) == (2, 1)  # pairs with k=2, keeps 1
    assert curve_label_normalize(2, 2, 5) == (2, 1)
    assert curve_label_normalize(0, 0, 5) == (0, 0)


def test_curve_label_even_pairing():
    # n=6, s=3: (omega, 0) pairs with (omega ^ rho, 1)
    assert curve_label_normalize(0, 0, 6) == (0, 0)
    assert curve_label_normalize(1, 1, 6) == (0, 0)  # partner of (1,1) is (0,1)? no:
    # (1,1) ^ rho=1 -> (0, s-2-1=0): canonical min((1,1),(0,0)) = (0,0)


def test_curve_label_even_involution():
    for omega in range(4):
        for k in range(2):  # s-2 = 1 for n=6
            canon = curve_label_normalize(omega, k, 6)
            # normalizing the partner gives the same canonical label
            partner = (omega ^ 1, 3 - 2 - k)
            assert curve_label_normalize(*partner, 6) == canon


def test_curve_label_range_errors():
    with pytest.raises(RangeError):
        curve_label_normalize(0, 4, 5)
    with pytest.raises(RangeError):
        curve_label_normalize(0, 2, 6)
    with pytest.raises(RangeError):
        curve_label_normalize(5, 0, 5)
    with pytest.raises(RangeError):
        curve_label_normalize(0, 0, 6, rho_elem=0)
