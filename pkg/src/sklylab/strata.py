"""Closed-form stratification bookkeeping for a PI degree n.

Everything here is exact integer/rational arithmetic over symbolic stratum
labels: Hilbert-series quotients for fat-point multiplicities, the tables of
irreducible-representation counts and dimensions over each stratum of the
center's maximal spectrum, the discriminant-ideal profile driven by the
quadratic q(k), and the identification of paired curve labels.  No
polynomial geometry happens here; the geometric cross-checks live in the
singularity module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadPIDegree, RangeError, SklylabError

__all__ = [
    "HilbertSeries",
    "Stratum",
    "StratumTable",
    "hs_quotient_multiplicity",
    "validate_pi_degree",
    "q",
    "irr_table",
    "discriminant_profile",
    "consistency_check",
    "curve_label_normalize",
]


@dataclass(frozen=True)
class HilbertSeries:
    """numer(t) / (1 - t)^denom_power with numer not divisible by (1 - t)."""

    numer: tuple  # Fraction coefficients, low degree first
    denom_power: int

    @staticmethod
    def make(numer, denom_power: int) -> "HilbertSeries":
        coeffs = [Fraction(c) for c in numer]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            return HilbertSeries((), 0)
        # cancel factors of (1 - t): numer divisible iff numer(1) == 0
        while sum(coeffs) == 0:
            # divide by (1 - t): synthetic division from the top
            out = [Fraction(0)] * (len(coeffs) - 1)
            carry = Fraction(0)
            for i in range(len(coeffs) - 2, -1, -1):
                carry = carry + coeffs[i + 1]
                out[i] = -carry
            # verify: out * (1 - t) == coeffs
            coeffs = out
            denom_power -= 1
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            if not coeffs:
                return HilbertSeries((), 0)
        return HilbertSeries(tuple(coeffs), denom_power)

    def numer_at_one(self) -> Fraction:
        return sum(self.numer, Fraction(0))

    def coefficient(self, d: int) -> Fraction:
        """Taylor coefficient of t^d of numer(t) / (1-t)^k."""
        if self.denom_power < 0:
            raise SklylabError("negative denominator power has no expansion")
        total = Fraction(0)
        k = self.denom_power
        for i, c in enumerate(self.numer):
            if i > d:
                break
            j = d - i
            if k == 0:
                binom = 1 if j == 0 else 0
            else:
                binom = 1
                for m in range(k - 1):
                    binom = binom * (j + 1 + m)
                num = binom
                den = 1
                for m in range(1, k):
                    den *= m
                binom = Fraction(num, den)
            total += c * binom
        return total


def hs_quotient_multiplicity(k: int):
    """Series (1 + t + ... + t^k)/(1 - t) and the multiplicity k + 1.

    Difference of two shifted plane series 1/(1-t)^2 - t^{k+1}/(1-t)^2; the
    multiplicity is the value of (1 - t) times the series at t = 1.
    """
    if k < 0:
        raise RangeError("shift k must be >= 0")
    numer = [Fraction(1)] + [Fraction(0)] * k + [Fraction(-1)]
    series = HilbertSeries.make(numer, 2)
    mult = int(series.numer_at_one())
    return series, mult


def validate_pi_degree(n: int) -> None:
    if not isinstance(n, int) or n < 3 or 4 % n == 0:
        raise BadPIDegree(f"unsupported PI degree {n!r} (need n >= 3, n not dividing 4)")


def _s_of(n: int) -> int:
    return n // gcd(n, 2)


def q(k: int, n: int) -> int:
    """q(k) = (k^2 + (s-k)^2) * n / s with s = n / gcd(n, 2)."""
    validate_pi_degree(n)
    s = _s_of(n)
    return (k * k + (s - k) * (s - k)) * n // s


@dataclass(frozen=True)
class Stratum:
    label: str
    irrep_count: int
    dims: tuple

    @property
    def d_value(self) -> int:
        return sum(d * d for d in self.dims)

    @property
    def dim_sum(self) -> int:
        return sum(self.dims)


@dataclass(frozen=True)
class StratumTable:
    n: int
    parity: str
    strata: tuple


def _parity_of(n: int) -> str:
    return "even" if n % 2 == 0 else "odd"


def irr_table(n: int, parity: str | None = None) -> StratumTable:
    """Counts and dimensions of irreducibles over each stratum."""
    validate_pi_degree(n)
    par = _parity_of(n)
    if parity is not None and parity != par:
        raise SklylabError(f"PI degree {n} has parity {par!r}, not {parity!r}")
    strata = [Stratum("smooth", 1, (n,))]
    if par == "odd":
        for k in range(n - 1):
            strata.append(Stratum(f"curve({k})", 2, (k + 1, n - 1 - k)))
    else:
        s = n // 2
        strata.append(Stratum("off-curve", 2, (s, s)))
        for k in range(s - 1):
            strata.append(Stratum(f"curve({k})", 4, (k + 1, k + 1, s - 1 - k, s - 1 - k)))
    strata.append(Stratum("origin", 1, (1,)))
    return StratumTable(n, par, tuple(strata))


def discriminant_profile(n: int, parity: str | None = None) -> dict:
    """Ranges of the discriminant-ideal levels and their zero sets.

    Returns {"n": n, "parity": ..., "ranges": [(lo, hi, description), ...]}
    covering exactly [1, n^2].
    """
    validate_pi_degree(n)
    par = _parity_of(n)
    if parity is not None and parity != par:
        raise SklylabError(f"PI degree {n} has parity {par!r}, not {parity!r}")
    s = _s_of(n)
    if par == "odd":
        zero_hi = q(n // 2, n)
        curve_hi = q(n - 1, n)
    else:
        zero_hi = q(s // 2, n)
        curve_hi = 2 * s * s
    ranges = [
        (1, 1, "empty"),
        (2, zero_hi, "origin"),
        (zero_hi + 1, curve_hi, "curve-union"),
        (curve_hi + 1, n * n, "singular-locus"),
    ]
    return {"n": n, "parity": par, "s": s, "ranges": ranges}


def consistency_check(n: int, parity: str | None = None) -> dict:
    """Cross-checks between the stratum table and the level profile.

    Verdicts: (i) non-origin strata have dimension sums equal to n
    (saturation of the degree bound); (ii) stratum d-values match the q-values
    driving the profile; (iii) the profile ranges partition [1, n^2];
    (iv) level sets grow monotonically with the level.
    """
    table = irr_table(n, parity)
    profile = discriminant_profile(n, parity)
    s = profile["s"]

    dims_ok = all(
        st.dim_sum == n for st in table.strata if st.label != "origin"
    )

    dvals_ok = True
    for st in table.strata:
        if st.label == "smooth":
            dvals_ok &= st.d_value == n * n
        elif st.label == "origin":
            dvals_ok &= st.d_value == 1
        elif st.label == "off-curve":
            dvals_ok &= st.d_value == 2 * s * s == q(0, n)
        else:
            k = int(st.label[6:-1])
            dvals_ok &= st.d_value == q(k + 1, n)

    ranges = profile["ranges"]
    cover = []
    partition_ok = True
    for lo, hi, _ in ranges:
        if lo > hi:
            continue  # empty range is fine (never happens for valid n)
        cover.extend(range(lo, hi + 1))
    partition_ok = cover == list(range(1, n * n + 1))

    # monotone: each range's zero set contains the previous ones; structurally
    # the descriptions are ordered empty < origin < curve-union < singular
    order = {"empty": 0, "origin": 1, "curve-union": 2, "singular-locus": 3}
    labels = [desc for _, _, desc in ranges]
    monotone_ok = labels == sorted(labels, key=order.__getitem__) and len(
        set(labels)
    ) == len(labels)

    verdicts = {
        "dim_sums_saturate": dims_ok,
        "d_values_match_q": dvals_ok,
        "ranges_partition": partition_ok,
        "levels_monotone": monotone_ok,
    }
    return {
        "n": n,
        "parity": table.parity,
        "verdicts": verdicts,
        "passed": all(verdicts.values()),
    }


def curve_label_normalize(
    omega: int, k: int, n: int, parity: str | None = None, rho_elem: int = 1
) -> tuple:
    """Canonical representative of a nodal-curve label.

    Odd n: (omega, k) pairs with (omega, n-2-k); canonical keeps the smaller
    k.  Even n = 2s: (omega, k) pairs with (omega XOR rho_elem, s-2-k),
    where the four 2-torsion labels form the Klein group {0..3} under XOR
    and rho_elem is the (abstract, nonzero) label of the half-period shift.
    Canonical is the lexicographically smaller of the pair.
    """
    validate_pi_degree(n)
    par = _parity_of(n)
    if parity is not None and parity != par:
        raise SklylabError(f"PI degree {n} has parity {par!r}, not {parity!r}")
    if omega not in (0, 1, 2, 3):
        raise RangeError("omega label must lie in {0, 1, 2, 3}")
    if par == "odd":
        if not 0 <= k <= n - 2:
            raise RangeError(f"odd curve index k must lie in [0, {n - 2}]")
        return (omega, min(k, n - 2 - k))
    s = n // 2
    if not 0 <= k <= s - 2:
        raise RangeError(f"even curve index k must lie in [0, {s - 2}]")
    if rho_elem not in (1, 2, 3):
        raise RangeError("rho_elem must be a nonzero Klein-group label")
    partner = (omega ^ rho_elem, s - 2 - k)
    return min((omega, k), partner)
