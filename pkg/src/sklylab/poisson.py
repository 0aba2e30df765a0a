"""Jacobian Poisson structure on the center presentation.

The bracket of two coordinates is a signed 2x2 minor of the Jacobian of the
two potentials; the bracket of general polynomials extends by Leibniz.  The
two Casimir variables g1, g2 enter only through the potentials and bracket
to zero by definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SklylabError
from .mpoly import MPoly, PolyIdeal, VarTable, jacobian_minor, solve_zero_dim

__all__ = [
    "JacobianPoissonStructure",
    "bracket_table",
    "bracket",
    "jacobi_defect",
    "nambu_bracket",
    "symplectic_point_ideal",
    "slice_symplectic_points",
]

Z_NAMES = ("z0", "z1", "z2", "z3")
G_NAMES = ("g1", "g2")


def _complement(k: int, l: int):
    rest = [i for i in range(4) if i not in (k, l)]
    return rest[0], rest[1]


@dataclass
class JacobianPoissonStructure:
    """Two potentials on z0..z3 with Casimir variables g1, g2 and a scale."""

    F1: MPoly
    F2: MPoly
    eta: object
    _table: dict | None = field(default=None, repr=False)
    _nambu_sign: int | None = field(default=None, repr=False)

    @staticmethod
    def make(F1: MPoly, F2: MPoly, eta=1) -> "JacobianPoissonStructure":
        vt = F1.vartab
        if F2.vartab is not vt and F2.vartab.names != vt.names:
            raise SklylabError("both potentials must live in the same variable table")
        if tuple(vt.names[:4]) != Z_NAMES or tuple(vt.names[4:6]) != G_NAMES:
            raise SklylabError(
                "variable table must start with z0..z3 followed by g1, g2"
            )
        f = F1.field
        eta_val = f.convert(eta)
        if f.is_zero(eta_val):
            raise SklylabError("the bracket scale must be nonzero")
        return JacobianPoissonStructure(F1, F2, eta_val)

    @property
    def vartab(self) -> VarTable:
        return self.F1.vartab

    @property
    def field_(self):
        return self.F1.field

    def table(self) -> dict:
        if self._table is None:
            t = {}
            f = self.field_
            for k in range(4):
                for l in range(k + 1, 4):
                    i, j = _complement(k, l)
                    minor = jacobian_minor(
                        [self.F1, self.F2], [0, 1], [Z_NAMES[i], Z_NAMES[j]]
                    )
                    entry = minor.scale(self.eta)
                    if (k + l) % 2:
                        entry = -entry
                    t[(k, l)] = entry
            self._table = t
        return self._table

    def nambu_global_sign(self) -> int:
        """Sign s with bracket(f,g) = s * eta * det d(F1,F2,f,g)/d(z0..z3).

        Computed once from the first coordinate pair with a nonzero bracket;
        the full-pair agreement is a tested invariant, not assumed.  When
        every table entry vanishes the Laplace-expansion sign -1 is recorded.
        """
        if self._nambu_sign is None:
            zs = [MPoly.var(self.vartab, self.field_, nm) for nm in Z_NAMES]
            sign = None
            for (k, l), lhs in sorted(self.table().items()):
                rhs = nambu_bracket(self, zs[k], zs[l])
                if lhs.is_zero() and rhs.is_zero():
                    continue
                if lhs == rhs:
                    sign = 1
                elif lhs == -rhs:
                    sign = -1
                else:
                    raise SklylabError(
                        "bracket and 4x4-determinant formulations are not "
                        f"proportional at (z{k}, z{l})"
                    )
                break
            self._nambu_sign = -1 if sign is None else sign
        return self._nambu_sign


def bracket_table(P: JacobianPoissonStructure) -> dict:
    """The six entries {z_k, z_l}, k < l, as polynomials."""
    return dict(P.table())


def bracket(P: JacobianPoissonStructure, f: MPoly, g: MPoly) -> MPoly:
    """Leibniz extension of the coordinate bracket; g1, g2 are constants."""
    t = P.table()
    df = [f.diff(nm) for nm in Z_NAMES]
    dg = [g.diff(nm) for nm in Z_NAMES]
    out = MPoly.zero(P.vartab, P.field_)
    for (k, l), entry in t.items():
        term = df[k] * dg[l] - df[l] * dg[k]
        if not term.is_zero():
            out = out + entry * term
    return out


def nambu_bracket(P: JacobianPoissonStructure, f: MPoly, g: MPoly) -> MPoly:
    """eta times the 4x4 Jacobian determinant of (F1, F2, f, g) in z0..z3."""
    m = jacobian_minor([P.F1, P.F2, f, g], [0, 1, 2, 3], list(Z_NAMES))
    return m.scale(P.eta)


def jacobi_defect(P: JacobianPoissonStructure, f: MPoly, g: MPoly, h: MPoly) -> MPoly:
    """{f,{g,h}} + {g,{h,f}} + {h,{f,g}}; identically zero for this structure."""
    return (
        bracket(P, f, bracket(P, g, h))
        + bracket(P, g, bracket(P, h, f))
        + bracket(P, h, bracket(P, f, g))
    )


def symplectic_point_ideal(P: JacobianPoissonStructure) -> PolyIdeal:
    """Ideal of the vanishing locus of the bracket, cut to the surface."""
    gens = [entry for _, entry in sorted(P.table().items())]
    gens.extend([P.F1, P.F2])
    return PolyIdeal([g for g in gens if not g.is_zero()])


def slice_symplectic_points(P: JacobianPoissonStructure, gamma1, gamma2):
    """Solve the symplectic-point system on the slice g1=gamma1, g2=gamma2.

    Returns the solve_zero_dim output: sorted [(point, multiplicity)] in
    z0..z3 coordinates.
    """
    f = P.field_
    assignment = {"g1": f.convert(gamma1), "g2": f.convert(gamma2)}
    sliced = []
    for g in symplectic_point_ideal(P).generators:
        s = g.specialize(assignment)
        if not s.is_zero():
            sliced.append(s)
    return solve_zero_dim(PolyIdeal(sliced))
