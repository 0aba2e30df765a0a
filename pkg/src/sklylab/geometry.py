"""The space elliptic curve E = V(phi1, phi2) and its cubic automorphism.

The automorphism acts as a translation on E, so its iteration order is the
same at every point; that order (when finite) is the PI degree of the
algebra.  No group law is implemented: orders are detected by iteration
over a prime field, and 2-torsion is handled as abstract labels downstream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    DisagreementAcrossPoints,
    Indeterminacy,
    NoPointFound,
    SklylabError,
)
from .mpoly import MPoly, VarTable, parse_poly
from .scalars import Field, NonResidue, PrimeField
from .skly import SklyaninParams, require_valid

__all__ = [
    "ProjPoint",
    "CurveE",
    "vertex_points",
    "on_curve",
    "sigma_apply",
    "sigma_fixes_vertices",
    "find_point_fp",
    "sigma_order",
    "sigma_preserves_E",
]

V_TABLE = VarTable.make(["v0", "v1", "v2", "v3"])

DEFAULT_ITERATION_CAP = 5000


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^3 with coordinates normalized at the first nonzero slot."""

    coords: tuple
    field: Field

    @staticmethod
    def make(coords, field: Field) -> "ProjPoint":
        vals = [field.convert(c) if not isinstance(c, complex) else c for c in coords]
        if len(vals) != 4:
            raise SklylabError("projective points here live in P^3")
        pivot = next((v for v in vals if not field.is_zero(v)), None)
        if pivot is None:
            raise SklylabError("all coordinates zero")
        return ProjPoint(tuple(field.div(v, pivot) for v in vals), field)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return all(self.field.eq(a, b) for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        # hash on the support pattern; fine for dict-free usage
        return hash(tuple(self.field.is_zero(c) for c in self.coords))


def vertex_points(field: Field) -> list[ProjPoint]:
    """The four coordinate points e0..e3."""
    pts = []
    for i in range(4):
        coords = [0, 0, 0, 0]
        coords[i] = 1
        pts.append(ProjPoint.make(coords, field))
    return pts


@dataclass(frozen=True)
class CurveE:
    """The quadric pair cutting out the curve, as polynomials in v0..v3."""

    params: SklyaninParams
    phi1: MPoly
    phi2: MPoly

    @staticmethod
    def build(p: SklyaninParams) -> "CurveE":
        require_valid(p)
        f = p.field
        one = f.one()
        if f.is_zero(f.add(one, p.alpha)):
            raise SklylabError("1 + alpha = 0: second quadric undefined")
        phi1 = parse_poly("v0^2+v1^2+v2^2+v3^2", V_TABLE, f)
        c1 = f.div(f.sub(one, p.gamma), f.add(one, p.alpha))
        c2 = f.div(f.add(one, p.gamma), f.sub(one, p.beta))
        v1 = MPoly.var(V_TABLE, f, "v1")
        v2 = MPoly.var(V_TABLE, f, "v2")
        v3 = MPoly.var(V_TABLE, f, "v3")
        phi2 = (v1 * v1).scale(c1) + (v2 * v2).scale(c2) + v3 * v3
        return CurveE(p, phi1, phi2)

    def quadric_coeffs(self):
        f = self.params.field
        one = f.one()
        return (
            f.div(f.sub(one, self.params.gamma), f.add(one, self.params.alpha)),
            f.div(f.add(one, self.params.gamma), f.sub(one, self.params.beta)),
        )


def on_curve(E: CurveE, pt: ProjPoint) -> bool:
    f = E.params.field
    return f.is_zero(E.phi1.evaluate(pt.coords)) and f.is_zero(E.phi2.evaluate(pt.coords))


def sigma_apply(p: SklyaninParams, pt: ProjPoint) -> ProjPoint:
    """One application of the cubic translation map, then normalization."""
    f = p.field
    a, b, c = p.alpha, p.beta, p.gamma
    v0, v1, v2, v3 = pt.coords
    sq0 = f.mul(v0, v0)
    bg1 = f.mul(f.mul(b, c), f.mul(v1, v1))
    ag2 = f.mul(f.mul(a, c), f.mul(v2, v2))
    ab3 = f.mul(f.mul(a, b), f.mul(v3, v3))
    v123 = f.mul(v1, f.mul(v2, v3))
    v023 = f.mul(v0, f.mul(v2, v3))
    v013 = f.mul(v0, f.mul(v1, v3))
    v012 = f.mul(v0, f.mul(v1, v2))
    abc2 = f.mul(f.convert(2), f.mul(a, f.mul(b, c)))

    def lin(s0, s1, s2, s3):
        return f.add(f.add(s0, s1), f.add(s2, s3))

    w0 = f.sub(
        f.neg(f.mul(abc2, v123)),
        f.mul(v0, lin(f.neg(sq0), bg1, ag2, ab3)),
    )
    w1 = f.add(
        f.mul(f.mul(f.convert(2), a), v023),
        f.mul(v1, lin(sq0, f.neg(bg1), ag2, ab3)),
    )
    w2 = f.add(
        f.mul(f.mul(f.convert(2), b), v013),
        f.mul(v2, lin(sq0, bg1, f.neg(ag2), ab3)),
    )
    w3 = f.add(
        f.mul(f.mul(f.convert(2), c), v012),
        f.mul(v3, lin(sq0, bg1, ag2, f.neg(ab3))),
    )
    if all(f.is_zero(w) for w in (w0, w1, w2, w3)):
        raise Indeterminacy(f"all coordinate cubics vanish at {pt.coords}")
    return ProjPoint.make((w0, w1, w2, w3), f)


def sigma_fixes_vertices(p: SklyaninParams) -> bool:
    """Exact check that all four coordinate points are fixed."""
    return all(sigma_apply(p, e) == e for e in vertex_points(p.field))


def find_point_fp(p: SklyaninParams, seed: int, attempts: int = 500) -> ProjPoint:
    """Deterministic curve-point search over F_p.

    Fixes v3 = 1 and a seeded random v0, solves the two quadrics as a linear
    system in (v1^2, v2^2) and extracts modular square roots, retrying on
    non-residues.  Falls back to fixing v1 when the linear system is
    degenerate (equal quadric coefficients).
    """
    f = p.field
    if not isinstance(f, PrimeField):
        raise SklylabError("point search needs a prime field")
    E = CurveE.build(p)
    A, B = E.quadric_coeffs()
    rng = random.Random(seed)
    mone = f.neg(f.one())
    det = f.sub(B, A)
    for _ in range(attempts):
        if not f.is_zero(det):
            v0 = f.convert(rng.randrange(f.p))
            # u + w = -1 - v0^2 ; A u + B w = -1
            s = f.sub(mone, f.mul(v0, v0))
            w = f.div(f.sub(mone, f.mul(A, s)), det)
            u = f.sub(s, w)
        else:
            v1_raw = f.convert(rng.randrange(f.p))
            u = f.mul(v1_raw, v1_raw)
            if f.is_zero(B):
                raise NoPointFound("degenerate quadric pair")
            w = f.div(f.sub(mone, f.mul(A, u)), B)
            v0sq = f.sub(f.sub(mone, u), w)
            try:
                v0 = f.sqrt(v0sq)
            except NonResidue:
                continue
        try:
            v1 = f.sqrt(u)
            v2 = f.sqrt(w)
        except NonResidue:
            continue
        pt = ProjPoint.make((v0, v1, v2, f.one()), f)
        if on_curve(E, pt):
            return pt
    raise NoPointFound(f"no curve point after {attempts} attempts (seed {seed})")


def sigma_order(
    p: SklyaninParams,
    samples: int = 5,
    cap: int = DEFAULT_ITERATION_CAP,
    seed: int = 0,
) -> int | None:
    """Smallest k <= cap with sigma^k = id at each sample point; None if cap hit.

    Orders must agree across sample points (translation property); a
    disagreement is surfaced, not hidden.
    """
    require_valid(p)
    orders = []
    for s in range(samples):
        pt = find_point_fp(p, seed=seed * 1000 + s)
        cur = pt
        order = None
        for k in range(1, cap + 1):
            cur = sigma_apply(p, cur)
            if cur == pt:
                order = k
                break
        orders.append(order)
    if any(o is None for o in orders):
        if all(o is None for o in orders):
            return None
        raise DisagreementAcrossPoints(f"orders {orders} (cap {cap})")
    if len(set(orders)) != 1:
        raise DisagreementAcrossPoints(f"orders {orders}")
    return orders[0]


def sigma_preserves_E(p: SklyaninParams, trials: int, seed: int = 0):
    """Check phi_i(sigma(pt)) = 0 on sampled curve points.

    Returns (True, None) or (False, witness_point).
    """
    require_valid(p)
    E = CurveE.build(p)
    for t in range(trials):
        pt = find_point_fp(p, seed=seed * 7919 + t)
        img = sigma_apply(p, pt)
        if not on_curve(E, img):
            return False, pt
    return True, None
