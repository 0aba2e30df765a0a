"""The order-64 Heisenberg symmetry group acting on the algebra.

Generator matrices for the three distinguished graded automorphisms, the
finite-presentation check, group closure, the automorphism property against
the quadratic relation span, and the induced 2-dimensional action on the
central quadrics.

Conventions
-----------
* A matrix M encodes the substitution x_j -> sum_i M[i, j] x_i (columns are
  images), so composing substitutions multiplies matrices.
* Group words are read left to right ("apply the first letter first"), so
  the matrix of the word ``gh`` is M_h @ M_g.  The defining relations hold
  as matrix identities in exactly this convention.
* Fourth roots are principal branches throughout; the resulting matrices
  differ from other branch choices only by relabeling inside the group, so
  all checks are relation-based, with the single entrywise exception of the
  induced action on the central quadrics (whose coefficients only involve
  the square roots b, c and are branch-consistent by construction).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import (
    ClosureExplosion,
    DegenerateParams,
    NotInGSpan,
    SklylabError,
)
from .scalars import ComplexField, PrimeField, principal_sqrt
from .skly import SklyaninParams, build_relations

__all__ = [
    "LinAutomorphism",
    "MatrixGroup",
    "complex_params",
    "build_generators",
    "verify_presentation",
    "enumerate_group",
    "is_algebra_automorphism",
    "induced_action_on_g",
    "g_action_expected",
    "verify_even_irrep",
    "z_action_matrices",
]

XI = cmath.exp(3j * cmath.pi / 4)

DEFAULT_TOL = 1e-9
GROUP_SIZE_CAP = 512
_DEDUP_GRID = 1e-7


@dataclass(frozen=True)
class LinAutomorphism:
    """Invertible linear substitution on the degree-1 slice, with a word label."""

    matrix: np.ndarray
    label: str

    @staticmethod
    def make(matrix, label: str) -> "LinAutomorphism":
        m = np.asarray(matrix, dtype=complex)
        if m.shape != (4, 4):
            raise SklylabError("linear automorphisms here are 4x4")
        if abs(np.linalg.det(m)) < 1e-12:
            raise SklylabError(f"matrix for {label!r} is singular")
        m.setflags(write=False)
        return LinAutomorphism(m, label)

    def key(self):
        re = np.round(self.matrix.real / _DEDUP_GRID).astype(np.int64)
        im = np.round(self.matrix.imag / _DEDUP_GRID).astype(np.int64)
        return (tuple(re.ravel().tolist()), tuple(im.ravel().tolist()))


@dataclass(frozen=True)
class MatrixGroup:
    elements: tuple  # of LinAutomorphism
    generator_labels: tuple

    def __len__(self):
        return len(self.elements)


def complex_params(p: SklyaninParams, tol: float = DEFAULT_TOL) -> SklyaninParams:
    """Re-express parameters over the approximate complex field."""
    if isinstance(p.field, PrimeField):
        raise SklylabError("prime-field parameters have no complex counterpart")
    C = ComplexField(tol if tol <= 1e-3 else 1e-3)
    return SklyaninParams.make(p.alpha, p.beta, p.gamma, C)


def _complex_abc(p: SklyaninParams):
    C = ComplexField()
    return C.convert(p.alpha), C.convert(p.beta), C.convert(p.gamma)


def build_generators(p: SklyaninParams):
    """The three generator matrices (eps, eps1, eps2).

    Requires alpha*beta*gamma != 0, since the entries involve inverse roots.
    """
    alpha, beta, gamma = _complex_abc(p)
    if any(abs(v) < 1e-12 for v in (alpha, beta, gamma)):
        raise DegenerateParams("alpha*beta*gamma = 0: generator entries undefined")
    a, b, c = (principal_sqrt(v) for v in (alpha, beta, gamma))
    sa, sb, sc = (principal_sqrt(v) for v in (a, b, c))

    eps = LinAutomorphism.make(-1j * np.eye(4), "e")

    m1 = np.zeros((4, 4), dtype=complex)
    m1[1, 0] = sb * sc / XI          # x0 -> b^{1/2} c^{1/2} xi^{-1} x1
    m1[0, 1] = XI / (sb * sc)        # x1 -> b^{-1/2} c^{-1/2} xi x0
    m1[3, 2] = sb / sc * XI          # x2 -> b^{1/2} c^{-1/2} xi x3
    m1[2, 3] = -sc / (sb * XI)       # x3 -> -b^{-1/2} c^{1/2} xi^{-1} x2
    eps1 = LinAutomorphism.make(m1, "e1")

    m2 = np.zeros((4, 4), dtype=complex)
    m2[2, 0] = sa * sc / XI          # x0 -> a^{1/2} c^{1/2} xi^{-1} x2
    m2[3, 1] = -sa / (sc * XI)       # x1 -> -a^{1/2} c^{-1/2} xi^{-1} x3
    m2[0, 2] = XI / (sa * sc)        # x2 -> a^{-1/2} c^{-1/2} xi x0
    m2[1, 3] = sc / sa * XI          # x3 -> a^{-1/2} c^{1/2} xi x1
    eps2 = LinAutomorphism.make(m2, "e2")
    return eps, eps1, eps2


def _presentation_residuals(me, m1, m2):
    """Max-entry residuals of the defining relations, word-matrix convention."""
    I = np.eye(me.shape[0], dtype=complex)

    def res(x, y):
        return float(np.max(np.abs(x - y)))

    return {
        "e^4": res(np.linalg.matrix_power(me, 4), I),
        "e1^4": res(np.linalg.matrix_power(m1, 4), I),
        "e2^4": res(np.linalg.matrix_power(m2, 4), I),
        "e*e1 = e1*e": res(m1 @ me, me @ m1),
        "e*e2 = e2*e": res(m2 @ me, me @ m2),
        "e1*e2 = e*e2*e1": res(m2 @ m1, m1 @ m2 @ me),
    }


def verify_presentation(eps, eps1, eps2, tol: float = DEFAULT_TOL) -> dict:
    """Check the six defining relations as matrix identities within tol."""
    residuals = _presentation_residuals(eps.matrix, eps1.matrix, eps2.matrix)
    failures = sorted(k for k, v in residuals.items() if v >= tol)
    return {
        "residuals": residuals,
        "max_residual": max(residuals.values()),
        "failures": failures,
        "passed": not failures,
    }


def enumerate_group(*generators: LinAutomorphism, cap: int = GROUP_SIZE_CAP) -> MatrixGroup:
    """Closure of the generators under multiplication (tolerance-deduplicated)."""
    ident = LinAutomorphism.make(np.eye(4), "1")
    seen = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for elem in frontier:
            for g in generators:
                prod = g.matrix @ elem.matrix  # word: elem's word then g
                label = g.label if elem.label == "1" else elem.label + "*" + g.label
                cand = LinAutomorphism.make(prod, label)
                k = cand.key()
                if k not in seen:
                    seen[k] = cand
                    nxt.append(cand)
                    if len(seen) > cap:
                        raise ClosureExplosion(
                            f"group closure exceeded cap {cap}; broken constants?"
                        )
        frontier = nxt
    elems = tuple(sorted(seen.values(), key=lambda e: (len(e.label), e.label)))
    return MatrixGroup(elems, tuple(g.label for g in generators))


def _relation_matrix(p: SklyaninParams) -> np.ndarray:
    """6 x 16 complex matrix whose rows are the quadratic relation tensors."""
    cp = complex_params(p)
    rows = np.zeros((6, 16), dtype=complex)
    for i, t in enumerate(build_relations(cp).tensors):
        for idx, val in t.items():
            rows[i, idx] = val
    return rows


def _transform_tensor(vec16: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Push a degree-2 tensor through the substitution x_j -> sum M[i,j] x_i."""
    T = vec16.reshape(4, 4)
    return (m @ T @ m.T).ravel()


def _span_residual(basis_rows: np.ndarray, vec: np.ndarray):
    coeffs, *_ = np.linalg.lstsq(basis_rows.T, vec, rcond=None)
    resid = float(np.linalg.norm(basis_rows.T @ coeffs - vec))
    return coeffs, resid


def is_algebra_automorphism(m: LinAutomorphism, R, tol: float = DEFAULT_TOL) -> bool:
    """Does the substitution preserve the span of the six quadratic relations?"""
    rows = np.zeros((6, 16), dtype=complex)
    for i, t in enumerate(R.tensors):
        for idx, val in t.items():
            rows[i, idx] = complex(val) if not isinstance(val, complex) else val
    for i in range(6):
        _, resid = _span_residual(rows, _transform_tensor(rows[i], m.matrix))
        if resid >= tol:
            return False
    return True


def _g_tensors(p: SklyaninParams):
    cp = complex_params(p)
    f = cp.field
    one = 1.0 + 0j
    g1 = np.zeros(16, dtype=complex)
    g1[0] = -one
    g1[5] = g1[10] = g1[15] = one
    g2 = np.zeros(16, dtype=complex)
    g2[5] = one
    g2[10] = f.div(f.add(one, cp.alpha), f.sub(one, cp.beta))
    g2[15] = f.div(f.sub(one, cp.alpha), f.add(one, cp.gamma))
    return g1, g2


def induced_action_on_g(m: LinAutomorphism, p: SklyaninParams, tol: float = DEFAULT_TOL) -> np.ndarray:
    """2x2 matrix of the action on span(g1, g2) modulo the relation span.

    Column j holds the (g1, g2) coefficients of the image of g_{j+1}.
    """
    g1, g2 = _g_tensors(p)
    basis = np.vstack([g1, g2, _relation_matrix(p)])
    out = np.zeros((2, 2), dtype=complex)
    for j, g in enumerate((g1, g2)):
        coeffs, resid = _span_residual(basis, _transform_tensor(g, m.matrix))
        if resid >= tol:
            raise NotInGSpan(
                f"image of g{j + 1} under {m.label!r} leaves the central-quadric span"
                f" (residual {resid:.3e})"
            )
        out[0, j] = coeffs[0]
        out[1, j] = coeffs[1]
    return out


def g_action_expected(p: SklyaninParams):
    """Closed-form 2x2 matrices for the three generators acting on (g1, g2)."""
    alpha, beta, gamma = _complex_abc(p)
    b, c = principal_sqrt(beta), principal_sqrt(gamma)
    a = principal_sqrt(alpha)
    e = -np.eye(2, dtype=complex)
    e1 = (1j / (b * c)) * np.array(
        [[1, 1], [-1 - beta * gamma, -1]], dtype=complex
    )
    e2 = (1j / (a * c)) * np.array(
        [[1, (1 + alpha) / (1 - beta)], [-1 - gamma, -1]], dtype=complex
    )
    return e, e1, e2


def verify_even_irrep(p: SklyaninParams, s: int, rho_type: int, tol: float = DEFAULT_TOL) -> dict:
    """Check the displayed 2x2 matrices for one even-degree character type.

    ``s`` is half the even iteration order n = 2s; ``rho_type`` in {1, 2, 3}
    selects which 2-torsion character the pair of matrices realizes.  The
    scalar generator acts by (-1)^s.
    """
    if s < 1:
        raise SklylabError("s must be a positive integer")
    if rho_type not in (1, 2, 3):
        raise SklylabError("rho_type must be 1, 2, or 3")
    alpha, beta, gamma = _complex_abc(p)
    if any(abs(v) < 1e-12 for v in (alpha, beta, gamma)):
        raise DegenerateParams("alpha*beta*gamma = 0")
    a, b, c = (principal_sqrt(v) for v in (alpha, beta, gamma))
    n = 2 * s
    xin = XI ** n
    I2 = np.eye(2, dtype=complex)
    if rho_type == 1:
        m1 = np.array([[0, c ** (-s) * xin], [c ** s / xin, 0]], dtype=complex)
        m2 = np.array([[0, c ** (-s)], [c ** s, 0]], dtype=complex)
    elif rho_type == 2:
        m1 = np.array([[0, b ** (-s)], [b ** s, 0]], dtype=complex)
        m2 = I2.copy()
    else:
        m1 = I2.copy()
        m2 = np.array([[0, a ** (-s) / xin], [a ** s * xin, 0]], dtype=complex)
    me = ((-1.0) ** s) * I2

    residuals = _presentation_residuals(me, m1, m2)
    failures = sorted(k for k, v in residuals.items() if v >= tol)

    comm = m1 @ m2 - m2 @ m1
    commute_to_scalar = float(np.max(np.abs(comm))) < tol
    irreducible = None
    if not commute_to_scalar:
        # no common eigenvector: test each eigenvector of m1 against m2
        irreducible = True
        _, vecs = np.linalg.eig(m1)
        for k in range(2):
            v = vecs[:, k]
            w = m2 @ v
            # common eigenvector iff w parallel to v
            if abs(w[0] * v[1] - w[1] * v[0]) < tol * max(1.0, float(np.linalg.norm(w))):
                irreducible = False
    return {
        "residuals": residuals,
        "failures": failures,
        "passed": not failures,
        "commute_to_scalar": commute_to_scalar,
        "irreducible": irreducible,
        "matrices": {"e": me, "e1": m1, "e2": m2},
    }


def z_action_matrices(p: SklyaninParams, n: int):
    """Displayed 4x4 matrices of the action on the degree-n central quartet.

    Evaluated directly from the closed-form entries (not derived from
    degree-n normal forms); the scalar generator acts by (-i)^n.
    """
    if n < 1:
        raise SklylabError("n must be a positive integer")
    alpha, beta, gamma = _complex_abc(p)
    if any(abs(v) < 1e-12 for v in (alpha, beta, gamma)):
        raise DegenerateParams("alpha*beta*gamma = 0")
    a, b, c = (principal_sqrt(v) for v in (alpha, beta, gamma))
    sa, sb, sc = (principal_sqrt(v) for v in (a, b, c))
    an, bn, cn = sa ** n, sb ** n, sc ** n  # a^{n/2} etc.
    xin = XI ** n
    sign = (-1.0) ** n

    m1 = np.zeros((4, 4), dtype=complex)
    m1[0, 1] = xin / (bn * cn)
    m1[1, 0] = bn * cn / xin
    m1[2, 3] = sign * cn / (bn * xin)
    m1[3, 2] = bn * xin / cn

    m2 = np.zeros((4, 4), dtype=complex)
    m2[0, 2] = xin / (an * cn)
    m2[1, 3] = cn * xin / an
    m2[2, 0] = an * cn / xin
    m2[3, 1] = sign * an / (cn * xin)

    me = ((-1j) ** n) * np.eye(4, dtype=complex)
    return me, m1, m2
