"""Center presentations and their singular loci.

A center presentation is a pair of weighted-homogeneous potentials F1, F2 in
z0..z3 (weight n) and g1, g2 (weight 2).  The odd-parity shape is
F_i = (quadric in z) + (form in g); the even-parity shape is
F_i = (a_i - h_i)^2 - z_pair with a_i linear in z, h_i a binary form in g,
and the variable pairing dictated by one of three types.

Structure checks are set-theoretic: variety equalities go through radical
membership, never ideal equality.  The even/odd instances shipped as presets
are rational surrogates with exactly the structural shape above; they are not
derived from specific algebra parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    CommonFactorH,
    DegenerateAForm,
    DegreeMismatch,
    NotZeroDimensional,
    SklylabError,
)
from .mpoly import (
    MPoly,
    PolyIdeal,
    VarTable,
    _univ_gcd,
    _univ_trim,
    jacobian_minor,
    parse_poly,
    radical_member,
    solve_zero_dim,
)
from .scalars import Field, RationalField

__all__ = [
    "CenterPresentation",
    "NodalCurveSpec",
    "RHO_PAIRS",
    "presentation_vartab",
    "build_even_presentation",
    "build_odd_presentation",
    "singular_locus_ideal",
    "verify_even_decomposition",
    "nodal_curve_check",
    "curve_compatibility",
    "slice_singular_points",
    "jacobian_rank_at",
    "odd_synthetic_n3",
    "even_rho1_surrogate",
]

Z_NAMES = ("z0", "z1", "z2", "z3")
ALL_NAMES = Z_NAMES + ("g1", "g2")

# variable pairing per even type: (pair for F1, pair for F2)
RHO_PAIRS = {
    1: (("z0", "z3"), ("z1", "z2")),
    2: (("z0", "z2"), ("z1", "z3")),
    3: (("z0", "z1"), ("z2", "z3")),
}


def presentation_vartab(n: int) -> VarTable:
    """z0..z3 of weight n, g1, g2 of weight 2."""
    if n < 1:
        raise SklylabError("weight n must be positive")
    return VarTable.make(list(ALL_NAMES), [n, n, n, n, 2, 2])


@dataclass(frozen=True)
class CenterPresentation:
    vartab: VarTable
    F1: MPoly
    F2: MPoly
    parity: str  # "odd" | "even"
    n: int
    parts: dict  # structured parts; see builders
    surrogate: bool = True


@dataclass(frozen=True)
class NodalCurveSpec:
    """Curve t -> t^n * apex + t^2 * direction in (z, g) coordinates."""

    omega: int  # apex coordinate index 0..3
    k: int      # abstract torsion-translate label
    direction: tuple  # (p1, p2) in the (g1, g2)-plane

    def point_at(self, P: CenterPresentation, t):
        f = P.F1.field
        tv = f.convert(t)
        tn = f.pow(tv, P.n)
        t2 = f.mul(tv, tv)
        coords = [f.zero()] * 6
        coords[self.omega] = tn
        coords[4] = f.mul(t2, f.convert(self.direction[0]))
        coords[5] = f.mul(t2, f.convert(self.direction[1]))
        return tuple(coords)


def _g_only(f: MPoly) -> bool:
    return all(all(e == 0 for e in exp[:4]) for exp in f.terms)


def _z_linear(f: MPoly) -> bool:
    return all(
        sum(exp[:4]) == 1 and exp[4] == exp[5] == 0 for exp in f.terms
    )


def _g_degree(f: MPoly) -> int:
    degs = {exp[4] + exp[5] for exp in f.terms}
    if len(degs) != 1:
        raise DegreeMismatch("binary form in g1, g2 must be homogeneous")
    return degs.pop()


def _binary_coeffs(f: MPoly, deg: int) -> list:
    """Coefficients [g1^deg, ..., g2^deg] of a binary form in (g1, g2)."""
    fld = f.field
    out = [fld.zero()] * (deg + 1)
    for exp, c in f.terms.items():
        out[exp[5]] = c
    return out


def _coprime_binary_forms(h1: MPoly, h2: MPoly) -> bool:
    fld = h1.field
    d1, d2 = _g_degree(h1), _g_degree(h2)
    c1, c2 = _binary_coeffs(h1, d1), _binary_coeffs(h2, d2)
    # common factor g1 <=> both pure-g2 top coefficients vanish
    if fld.is_zero(c1[d1]) and fld.is_zero(c2[d2]):
        return False
    g = _univ_gcd(fld, _univ_trim(fld, c1), _univ_trim(fld, c2))
    return len(g) <= 1


def build_even_presentation(
    rho_type: int,
    a1: MPoly,
    a2: MPoly,
    h1: MPoly,
    h2: MPoly,
    s: int,
    *,
    _skip_coprime_check: bool = False,
) -> CenterPresentation:
    """F_i = (a_i - h_i)^2 - z_pair_i with the pairing of the given type."""
    if rho_type not in RHO_PAIRS:
        raise SklylabError("rho_type must be 1, 2, or 3")
    if s < 1:
        raise SklylabError("s must be a positive integer")
    n = 2 * s
    vt = a1.vartab
    fld = a1.field
    for a in (a1, a2):
        if not _z_linear(a):
            raise DegenerateAForm("a-forms must be linear forms in z0..z3")
    for h in (h1, h2):
        if not _g_only(h):
            raise DegreeMismatch("h-forms must involve only g1, g2")
        if _g_degree(h) != s:
            raise DegreeMismatch(f"h-forms must be binary forms of degree {s}")
    pair1, pair2 = RHO_PAIRS[rho_type]
    # the second variable of the first pair must appear in both a-forms,
    # else V(F_i) degenerates to a union of planes
    v = pair1[1]
    for i, a in enumerate((a1, a2), start=1):
        if a.diff(v).is_zero():
            raise DegenerateAForm(f"a{i} must involve {v} for type {rho_type}")
    if not _skip_coprime_check and not _coprime_binary_forms(h1, h2):
        raise CommonFactorH("h1 and h2 share a binary-form factor")
    zp1 = MPoly.var(vt, fld, pair1[0]) * MPoly.var(vt, fld, pair1[1])
    zp2 = MPoly.var(vt, fld, pair2[0]) * MPoly.var(vt, fld, pair2[1])
    F1 = (a1 - h1) ** 2 - zp1
    F2 = (a2 - h2) ** 2 - zp2
    for F in (F1, F2):
        if not (F.is_homogeneous() and F.weighted_degree() == 2 * n):
            raise DegreeMismatch("potentials must be weighted-homogeneous of degree 2n")
    parts = {
        "rho_type": rho_type,
        "a1": a1,
        "a2": a2,
        "h1": h1,
        "h2": h2,
        "s": s,
        "pairs": (pair1, pair2),
    }
    return CenterPresentation(vt, F1, F2, "even", n, parts)


def build_odd_presentation(f_p: MPoly, h_p: MPoly, f_q: MPoly, h_q: MPoly, n: int) -> CenterPresentation:
    """F1 = f_p + h_p, F2 = f_q + h_q for odd weight n."""
    if n < 3 or n % 2 == 0:
        raise SklylabError("odd presentations need odd n >= 3")
    vt = f_p.vartab
    for f in (f_p, f_q):
        if not all(sum(exp[:4]) == 2 and exp[4] == exp[5] == 0 for exp in f.terms):
            raise DegreeMismatch("f-parts must be quadratic forms in z0..z3")
    for h in (h_p, h_q):
        if not _g_only(h):
            raise DegreeMismatch("h-parts must involve only g1, g2")
    F1, F2 = f_p + h_p, f_q + h_q
    for F in (F1, F2):
        if not (F.is_homogeneous() and F.weighted_degree() == 2 * n):
            raise DegreeMismatch("potentials must be weighted-homogeneous of degree 2n")
    parts = {"f_p": f_p, "h_p": h_p, "f_q": f_q, "h_q": h_q}
    return CenterPresentation(vt, F1, F2, "odd", n, parts)


def singular_locus_ideal(P: CenterPresentation) -> PolyIdeal:
    """F1, F2 plus all fifteen 2x2 minors of the 2x6 Jacobian."""
    gens = [P.F1, P.F2]
    for cols in combinations(ALL_NAMES, 2):
        m = jacobian_minor([P.F1, P.F2], [0, 1], list(cols))
        if not m.is_zero():
            gens.append(m)
    return PolyIdeal(gens)


def _component_ideals(P: CenterPresentation):
    vt, fld = P.vartab, P.F1.field
    parts = P.parts
    pair1, pair2 = parts["pairs"]
    a1h = parts["a1"] - parts["h1"]
    a2h = parts["a2"] - parts["h2"]
    I1 = PolyIdeal([a1h] + [MPoly.var(vt, fld, nm) for nm in pair1] + [P.F2])
    I2 = PolyIdeal([a2h] + [MPoly.var(vt, fld, nm) for nm in pair2] + [P.F1])
    return I1, I2


def verify_even_decomposition(P: CenterPresentation) -> dict:
    """Check V(singular locus) = V(I1) u V(I2) and that V(I1) n V(I2) = {0}."""
    if P.parity != "even":
        raise SklylabError("even decomposition needs an even presentation")
    S = singular_locus_ideal(P)
    I1, I2 = _component_ideals(P)
    # V(I1) u V(I2) subseteq V(S): each generator of S vanishes on both components
    cover = all(
        radical_member(g, I) for g in S.generators for I in (I1, I2)
    )
    # V(S) subseteq V(I1) u V(I2) = V(I1 * I2)
    contain = all(
        radical_member(g1 * g2, S)
        for g1 in I1.generators
        for g2 in I2.generators
    )
    both = PolyIdeal(list(I1.generators) + list(I2.generators))
    fld = P.F1.field
    origin_only = all(
        radical_member(MPoly.var(P.vartab, fld, nm), both) for nm in ALL_NAMES
    )
    return {
        "union_ok": cover and contain,
        "components_cover": cover,
        "singular_contained_in_union": contain,
        "origin_only_intersection": origin_only,
        "component_ideals": (I1, I2),
        "surrogate": P.surrogate,
    }


def curve_compatibility(P: CenterPresentation, C: NodalCurveSpec) -> bool:
    """Apex/direction matching: f_q(apex) = -h_q(direction)."""
    if P.parity != "odd":
        raise SklylabError("nodal curves are attached to odd presentations")
    fld = P.F1.field
    apex = [fld.zero()] * 6
    apex[C.omega] = fld.one()
    fq_val = P.parts["f_q"].evaluate(apex)
    dirpt = [fld.zero()] * 4 + [fld.convert(C.direction[0]), fld.convert(C.direction[1])]
    hq_val = P.parts["h_q"].evaluate(dirpt)
    return fld.eq(fq_val, fld.neg(hq_val))


def nodal_curve_check(P: CenterPresentation, C: NodalCurveSpec, t_samples) -> bool:
    """Every sampled curve point lies on Y and kills all fifteen minors."""
    if P.parity != "odd":
        raise SklylabError("nodal curves are attached to odd presentations")
    fld = P.F1.field
    gens = singular_locus_ideal(P).generators
    for t in t_samples:
        pt = C.point_at(P, t)
        if not all(fld.is_zero(g.evaluate(list(pt))) for g in gens):
            return False
    return True


def slice_singular_points(P: CenterPresentation, gamma1, gamma2):
    """Singular points of the slice g1=gamma1, g2=gamma2, with multiplicity.

    The system is the two sliced potentials together with the six 2x2 minors
    of their Jacobian in z0..z3 alone (the slice's own singular locus).
    """
    fld = P.F1.field
    assignment = {"g1": fld.convert(gamma1), "g2": fld.convert(gamma2)}
    s1 = P.F1.specialize(assignment)
    s2 = P.F2.specialize(assignment)
    gens = [f for f in (s1, s2) if not f.is_zero()]
    for cols in combinations(Z_NAMES, 2):
        m = jacobian_minor([s1, s2], [0, 1], list(cols))
        if not m.is_zero():
            gens.append(m)
    if not gens:
        raise NotZeroDimensional("sliced system is identically zero")
    return solve_zero_dim(PolyIdeal(gens))


def jacobian_rank_at(P: CenterPresentation, point) -> int:
    """Rank of the 2x6 Jacobian of (F1, F2) at a point of the ambient space."""
    fld = P.F1.field
    vals = [fld.convert(v) for v in point]
    rows = [
        [F.diff(nm).evaluate(vals) for nm in ALL_NAMES] for F in (P.F1, P.F2)
    ]
    nz = [r for r in rows if not all(fld.is_zero(v) for v in r)]
    if not nz:
        return 0
    if len(nz) == 1:
        return 1
    # 2 x 6: rank 2 iff some 2x2 minor is nonzero
    for i, j in combinations(range(6), 2):
        det = fld.sub(
            fld.mul(nz[0][i], nz[1][j]), fld.mul(nz[0][j], nz[1][i])
        )
        if not fld.is_zero(det):
            return 2
    return 1


# ---------------------------------------------------------------- presets

def odd_synthetic_n3(field: Field | None = None) -> CenterPresentation:
    """Synthetic odd instance, n = 3, with a rank-3 quadric apex at e0."""
    fld = field or RationalField()
    vt = presentation_vartab(3)
    f_p = parse_poly("z1^2+z2^2+z3^2", vt, fld)
    h_p = parse_poly("g1^2*g2", vt, fld)
    f_q = parse_poly("z0^2+z1^2+2*z2^2+3*z3^2", vt, fld)
    h_q = parse_poly("g1^3+g2^3", vt, fld)
    return build_odd_presentation(f_p, h_p, f_q, h_q, 3)


def even_rho1_surrogate(field: Field | None = None) -> CenterPresentation:
    """Rational even surrogate of type 1, s = 2 (weight n = 4)."""
    fld = field or RationalField()
    vt = presentation_vartab(4)
    a1 = parse_poly("z0+z1+3*z2+2*z3", vt, fld)
    a2 = parse_poly("z0+z1+z2+z3", vt, fld)
    h1 = parse_poly("g1^2", vt, fld)
    h2 = parse_poly("g2^2", vt, fld)
    return build_even_presentation(1, a1, a2, h1, h2, 2)
