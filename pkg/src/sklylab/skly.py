"""The quadratic algebra S(alpha, beta, gamma) and its graded structure.

Degree-d computations happen in tensor coordinates: the degree-d slice of
the free algebra on x0..x3 is identified with vectors of length 4^d (word
w = x_{i_1}...x_{i_d} maps to index sum i_k * 4^(d-k)).  The degree-d
component of the two-sided relation ideal is spanned by

    V (x) I_{d-1}  +  R (x) V^(x)(d-2)

which is row-reduced once per degree and cached; graded dimensions,
centrality tests, the low-degree center and central quotients are all
linear algebra against that reduced span.

Backends: prime fields use numpy echelon forms (fast); rationals use exact
sparse elimination up to EXACT_RATIONAL_MAX_DEGREE and certify higher
degrees by agreement over two independent primes (documented probabilistic
certificate).  No noncommutative Groebner basis is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import CapExceeded, ConstraintViolated, DivisionByZero, SklylabError
from .scalars import Field, PrimeField, RationalField, is_prime

__all__ = [
    "SklyaninParams",
    "RelationSet",
    "CentralElement",
    "SklyaninAlgebra",
    "validate_params",
    "build_relations",
    "graded_dimension",
    "is_central_up_to",
    "center_slice",
    "quotient_dimension",
    "random_valid_params",
    "g1_element",
    "g2_element",
    "require_valid",
]

DEFAULT_DEGREE_CAP = 6
EXACT_RATIONAL_MAX_DEGREE = 4

# deterministic prime stream for modular rank certificates
_CERT_PRIMES = [10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091]


@dataclass(frozen=True)
class SklyaninParams:
    alpha: object
    beta: object
    gamma: object
    field: Field

    @staticmethod
    def make(alpha, beta, gamma, field: Field) -> "SklyaninParams":
        return SklyaninParams(
            field.convert(alpha), field.convert(beta), field.convert(gamma), field
        )

    def key(self):
        return (self.field.spec_string(), str(self.alpha), str(self.beta), str(self.gamma))


def validate_params(p: SklyaninParams) -> dict:
    """Check the defining constraint and the excluded families.

    Returns {"valid": bool, "violations": [...], "warnings": [...]}.
    Warnings flag boundary values where the elliptic geometry degenerates.
    """
    f = p.field
    a, b, c = p.alpha, p.beta, p.gamma
    violations: list[str] = []
    warnings: list[str] = []

    lhs = f.add(f.add(a, b), f.add(c, f.mul(a, f.mul(b, c))))
    if not f.is_zero(lhs):
        violations.append("sum constraint alpha+beta+gamma+alpha*beta*gamma = 0 fails")

    one, mone = f.one(), f.neg(f.one())
    if f.eq(a, mone) and f.eq(b, one):
        violations.append("excluded family (-1, 1, *)")
    if f.eq(b, mone) and f.eq(c, one):
        violations.append("excluded family (*, -1, 1)")
    if f.eq(a, one) and f.eq(c, mone):
        violations.append("excluded family (1, *, -1)")

    if f.is_zero(f.sub(one, b)):
        violations.append("1 - beta = 0 (second central element undefined)")
    if f.is_zero(f.add(one, c)):
        violations.append("1 + gamma = 0 (second central element undefined)")
    if f.is_zero(f.add(one, a)):
        warnings.append("1 + alpha = 0 (curve quadric coefficient degenerates)")

    for name, v in (("alpha", a), ("beta", b), ("gamma", c)):
        if f.is_zero(v) or f.eq(v, one) or f.eq(v, mone):
            warnings.append(f"{name} in {{0, 1, -1}}: downstream elliptic checks may degenerate")

    return {"valid": not violations, "violations": violations, "warnings": warnings}


def require_valid(p: SklyaninParams) -> None:
    report = validate_params(p)
    if not report["valid"]:
        raise ConstraintViolated("; ".join(report["violations"]))


def random_valid_params(field: Field, rng, require_nonzero: bool = True) -> SklyaninParams:
    """Sample a valid triple by solving the sum constraint for alpha."""
    f = field
    for _ in range(1000):
        if isinstance(field, PrimeField):
            b = f.convert(rng.randrange(2, field.p - 1))
            c = f.convert(rng.randrange(2, field.p - 1))
        else:
            b = f.convert(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
            c = f.convert(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        denom = f.add(f.one(), f.mul(b, c))
        if f.is_zero(denom):
            continue
        a = f.neg(f.div(f.add(b, c), denom))
        p = SklyaninParams(a, b, c, field)
        rep = validate_params(p)
        if not rep["valid"]:
            continue
        if require_nonzero and (
            f.is_zero(a) or f.is_zero(b) or f.is_zero(c) or rep["warnings"]
        ):
            continue
        return p
    raise SklylabError("could not sample valid parameters")


# ---------------------------------------------------------------------------
# relations and distinguished central elements
# ---------------------------------------------------------------------------

def _pair(i: int, j: int) -> int:
    return 4 * i + j


@dataclass(frozen=True)
class RelationSet:
    """Six degree-2 tensors (dicts index -> scalar over the params' field)."""

    params: SklyaninParams
    tensors: tuple

    def as_rows(self) -> list[dict[int, object]]:
        return [dict(t) for t in self.tensors]

    def span_dimension(self) -> int:
        rows = [dict(t) for t in self.tensors]
        return len(_exact_echelon(rows, self.params.field))


def build_relations(p: SklyaninParams) -> RelationSet:
    """The six quadratic relations as tensors in V (x) V (16 coordinates)."""
    require_valid(p)
    f = p.field
    one = f.one()

    a, b, c = p.alpha, p.beta, p.gamma
    tensors = []
    # commutator relations: [x0,xk] = coeff * (x_i x_j + x_j x_i)
    for k, coeff, (i, j) in ((1, a, (2, 3)), (2, b, (3, 1)), (3, c, (1, 2))):
        t = {_pair(0, k): one, _pair(k, 0): f.neg(one)}
        neg = f.neg(coeff)
        for idx in (_pair(i, j), _pair(j, i)):
            t[idx] = f.add(t.get(idx, f.zero()), neg)
        tensors.append({k2: v for k2, v in t.items() if not f.is_zero(v)})
    # anticommutator relations: {x0,xk} = x_i x_j - x_j x_i
    for k, (i, j) in ((1, (2, 3)), (2, (3, 1)), (3, (1, 2))):
        t = {_pair(0, k): one, _pair(k, 0): one}
        t[_pair(i, j)] = f.neg(one)
        t[_pair(j, i)] = one
        tensors.append(t)
    return RelationSet(p, tuple(tensors))


@dataclass(frozen=True)
class CentralElement:
    """Homogeneous tensor representative of a (candidate) central element."""

    degree: int
    coeffs: tuple  # tuple of (index, scalar)
    label: str

    def as_dict(self) -> dict[int, object]:
        return dict(self.coeffs)

    @staticmethod
    def from_dict(degree: int, d: dict, label: str) -> "CentralElement":
        return CentralElement(degree, tuple(sorted(d.items(), key=lambda kv: kv[0])), label)


def g1_element(p: SklyaninParams) -> CentralElement:
    f = p.field
    one = f.one()
    d = {_pair(0, 0): f.neg(one), _pair(1, 1): one, _pair(2, 2): one, _pair(3, 3): one}
    return CentralElement.from_dict(2, d, "g1")


def g2_element(p: SklyaninParams) -> CentralElement:
    f = p.field
    one = f.one()
    c2 = f.div(f.add(one, p.alpha), f.sub(one, p.beta))
    c3 = f.div(f.sub(one, p.alpha), f.add(one, p.gamma))
    d = {_pair(1, 1): one, _pair(2, 2): c2, _pair(3, 3): c3}
    return CentralElement.from_dict(2, d, "g2")


# ---------------------------------------------------------------------------
# linear-algebra backends
# ---------------------------------------------------------------------------

def _exact_echelon(rows: list[dict[int, object]], field: Field) -> dict[int, dict[int, object]]:
    """Sparse row echelon over an exact field: {pivot_col: monic row}."""
    basis: dict[int, dict[int, object]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if not field.is_zero(v)}
        while row:
            c = min(row)
            if c not in basis:
                inv = field.div(field.one(), row[c])
                basis[c] = {k: field.mul(v, inv) for k, v in row.items()}
                break
            factor = row[c]
            for k, v in basis[c].items():
                nv = field.sub(row.get(k, field.zero()), field.mul(factor, v))
                if field.is_zero(nv):
                    row.pop(k, None)
                else:
                    row[k] = nv
        # empty row: dependent, dropped
    return basis


def _exact_reduce(vec: dict[int, object], basis: dict[int, dict], field: Field) -> dict:
    vec = {c: v for c, v in vec.items() if not field.is_zero(v)}
    for c in sorted(basis):
        if c in vec:
            factor = vec[c]
            for k, v in basis[c].items():
                nv = field.sub(vec.get(k, field.zero()), field.mul(factor, v))
                if field.is_zero(nv):
                    vec.pop(k, None)
                else:
                    vec[k] = nv
    return vec


class _FpSlice:
    """Echelon form of the degree-d ideal component over F_p (numpy)."""

    def __init__(self, matrix: np.ndarray, p: int):
        self.p = p
        self.ncols = matrix.shape[1]
        self.rows, self.pivots = _fp_echelon(matrix, p)
        self.rank = len(self.pivots)

    def reduce_many(self, V: np.ndarray) -> np.ndarray:
        return _fp_reduce(V, self.rows, self.pivots, self.p)

    def reduce_vec(self, vec: dict[int, object]) -> dict[int, object]:
        V = np.zeros((1, self.ncols), dtype=np.int64)
        for c, v in vec.items():
            V[0, c] = int(v) % self.p
        R = self.reduce_many(V)[0]
        return {int(c): int(R[c]) for c in np.nonzero(R)[0]}

    def contains(self, vec: dict[int, object]) -> bool:
        return not self.reduce_vec(vec)

    def contains_many(self, vecs: list[dict[int, object]]) -> bool:
        if not vecs:
            return True
        V = np.zeros((len(vecs), self.ncols), dtype=np.int64)
        for i, vec in enumerate(vecs):
            for c, v in vec.items():
                V[i, c] = int(v) % self.p
        return not np.any(self.reduce_many(V))


def _fp_echelon(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row echelon mod p with deferred reduction (entries stay in int64)."""
    M = M.astype(np.int64) % p
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = M[r:, c] % p
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] %= p
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        if r + 1 < rows:
            below = M[r + 1 :, c] % p
            # deferred mod: entries grow by < p^2 per pivot, bounded in int64
            M[r + 1 :] -= np.outer(below, M[r])
        pivots.append(c)
        r += 1
    return M[:r] % p, pivots


def _fp_reduce(V: np.ndarray, R: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    V = V.astype(np.int64) % p
    for i, c in enumerate(pivots):
        f = V[:, c] % p
        if np.any(f):
            V -= np.outer(f, R[i])
            # keep magnitudes bounded without a full-matrix mod every step
            if i % 64 == 63:
                V %= p
    return V % p


class _ExactSlice:
    """Echelon form of the degree-d ideal component over an exact field."""

    def __init__(self, rows: list[dict[int, object]], field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.basis = _exact_echelon(rows, field)
        self.rank = len(self.basis)

    def reduce_vec(self, vec: dict[int, object]) -> dict[int, object]:
        return _exact_reduce(vec, self.basis, self.field)

    def contains(self, vec: dict[int, object]) -> bool:
        return not self.reduce_vec(vec)

    def contains_many(self, vecs: list[dict[int, object]]) -> bool:
        return all(self.contains(v) for v in vecs)

    def as_rows(self) -> list[dict[int, object]]:
        return [dict(r) for r in self.basis.values()]


class _TwoPrimeSlice:
    """Rank/membership certificate for rational params at high degree."""

    def __init__(self, slices: list[_FpSlice]):
        self.slices = slices
        ranks = {s.rank for s in slices}
        if len(ranks) != 1:
            raise SklylabError("modular ranks disagree; certificate failed")
        self.rank = ranks.pop()
        self.ncols = slices[0].ncols

    def contains(self, vec: dict[int, object]) -> bool:
        # vec has Fraction values; reduce mod each certificate prime
        for s in self.slices:
            fp = PrimeField(s.p)
            v = {c: fp.convert(val) for c, val in vec.items()}
            if not s.contains(v):
                return False
        return True

    def contains_many(self, vecs: list[dict[int, object]]) -> bool:
        for s in self.slices:
            fp = PrimeField(s.p)
            batch = [{c: fp.convert(val) for c, val in v.items()} for v in vecs]
            if not s.contains_many(batch):
                return False
        return True


# ---------------------------------------------------------------------------
# the algebra object
# ---------------------------------------------------------------------------

def _tensor_rows_fp(p_mod: tuple[int, int, int, int], d: int, cache: dict) -> "_FpSlice":
    """Build the echelon of I_d over F_p, reusing I_{d-1} from the cache."""
    alpha, beta, gamma, prime = p_mod
    fp = PrimeField(prime)
    params = SklyaninParams(alpha, beta, gamma, fp)
    rel = build_relations(params)
    if d == 2:
        M = np.zeros((6, 16), dtype=np.int64)
        for r, t in enumerate(rel.tensors):
            for idx, v in t.items():
                M[r, idx] = int(v) % prime
        sl = _FpSlice(M, prime)
        cache[d] = sl
        return sl
    prev = cache.get(d - 1) or _tensor_rows_fp(p_mod, d - 1, cache)
    n_prev = prev.rows.shape[0]
    dim_prev_cols = prev.ncols  # 4^(d-1)
    ncols = 4 * dim_prev_cols
    n_words = 4 ** (d - 2)
    M = np.zeros((4 * n_prev + 6 * n_words, ncols), dtype=np.int64)
    # V (x) I_{d-1): block-shift the previous echelon rows
    for i in range(4):
        M[i * n_prev : (i + 1) * n_prev, i * dim_prev_cols : (i + 1) * dim_prev_cols] = prev.rows
    # R (x) V^(d-2): each relation entry lands at pair_index * 4^(d-2) + word
    base = 4 * n_prev
    for r, t in enumerate(rel.tensors):
        for w in range(n_words):
            row = base + r * n_words + w
            for idx, v in t.items():
                M[row, idx * n_words + w] = int(v) % prime
    sl = _FpSlice(M, prime)
    cache[d] = sl
    return sl


class SklyaninAlgebra:
    """Caches relation data and per-degree ideal slices for one parameter triple."""

    def __init__(self, params: SklyaninParams, cap: int = DEFAULT_DEGREE_CAP):
        require_valid(params)
        self.params = params
        self.cap = cap
        self.relations = build_relations(params)
        self._exact_slices: dict[int, _ExactSlice] = {}
        self._fp_caches: dict[int, dict] = {}  # prime -> {degree: _FpSlice}
        self._cert_primes: list[int] | None = None

    # -- slice plumbing -------------------------------------------------
    def _check_cap(self, d: int) -> None:
        if d > self.cap:
            raise CapExceeded(f"degree {d} above cap {self.cap}")
        if d < 0:
            raise SklylabError("negative degree")

    def _params_mod(self, prime: int) -> tuple[int, int, int, int]:
        fp = PrimeField(prime)
        f = self.params.field
        if isinstance(f, PrimeField):
            if f.p != prime:
                raise SklylabError("prime mismatch")
            return (self.params.alpha, self.params.beta, self.params.gamma, prime)
        return (
            fp.convert(self.params.alpha),
            fp.convert(self.params.beta),
            fp.convert(self.params.gamma),
            prime,
        )

    def _certificate_primes(self) -> list[int]:
        """Two primes where the rational triple reduces to a valid fp triple."""
        if self._cert_primes is None:
            chosen: list[int] = []
            for prime in _CERT_PRIMES:
                try:
                    pm = self._params_mod(prime)
                    rep = validate_params(
                        SklyaninParams(pm[0], pm[1], pm[2], PrimeField(prime))
                    )
                    if rep["valid"]:
                        chosen.append(prime)
                except (DivisionByZero, SklylabError):
                    continue
                if len(chosen) == 2:
                    break
            if len(chosen) < 2:
                raise SklylabError("no usable certificate primes for these parameters")
            self._cert_primes = chosen
        return self._cert_primes

    def _fp_slice(self, prime: int, d: int) -> _FpSlice:
        cache = self._fp_caches.setdefault(prime, {})
        if d not in cache:
            _tensor_rows_fp(self._params_mod(prime), d, cache)
        return cache[d]

    def _exact_slice(self, d: int) -> _ExactSlice:
        if d not in self._exact_slices:
            f = self.params.field
            if d == 2:
                rows = self.relations.as_rows()
            else:
                prev = self._exact_slice(d - 1)
                n_words = 4 ** (d - 2)
                dim_prev_cols = prev.ncols
                rows = []
                for i in range(4):
                    for r in prev.as_rows():
                        rows.append({i * dim_prev_cols + c: v for c, v in r.items()})
                for t in self.relations.tensors:
                    for w in range(n_words):
                        rows.append({idx * n_words + w: v for idx, v in t.items()})
            self._exact_slices[d] = _ExactSlice(rows, f, 4 ** d)
        return self._exact_slices[d]

    def slice(self, d: int):
        """Membership structure for the degree-d ideal component."""
        self._check_cap(d)
        if d < 2:
            # the ideal has no component below degree 2
            f = self.params.field
            if isinstance(f, PrimeField):
                return _FpSlice(np.zeros((0, 4 ** d), dtype=np.int64), f.p)
            return _ExactSlice([], f, 4 ** d)
        f = self.params.field
        if isinstance(f, PrimeField):
            return self._fp_slice(f.p, d)
        if isinstance(f, RationalField):
            if d <= EXACT_RATIONAL_MAX_DEGREE:
                return self._exact_slice(d)
            return _TwoPrimeSlice([self._fp_slice(pr, d) for pr in self._certificate_primes()])
        raise SklylabError("graded computations need an exact field")

    # -- public queries -------------------------------------------------
    def graded_dimension(self, d: int) -> int:
        self._check_cap(d)
        if d == 0:
            return 1
        if d == 1:
            return 4
        return 4 ** d - self.slice(d).rank

    def is_central_up_to(self, elem: CentralElement, dmax: int) -> bool:
        self._check_cap(dmax)
        vec = elem.as_dict()
        if not vec:
            return True
        e = elem.degree
        if e + 1 > dmax:
            raise SklylabError("need dmax >= elem degree + 1")
        current = []
        for j in range(4):
            comm: dict[int, object] = {}
            f = self.params.field
            for idx, c in vec.items():
                k1 = idx * 4 + j          # elem (x) x_j
                k2 = j * (4 ** e) + idx   # x_j (x) elem
                comm[k1] = f.add(comm.get(k1, f.zero()), c)
                comm[k2] = f.sub(comm.get(k2, f.zero()), c)
            current.append(comm)
        degree = e + 1
        while True:
            sl = self.slice(degree)
            if not sl.contains_many(current):
                return False
            degree += 1
            if degree > dmax:
                return True
            padded = []
            for t in current:
                for i in range(4):
                    padded.append({i * (4 ** (degree - 1)) + idx: v for idx, v in t.items()})
                    padded.append({idx * 4 + i: v for idx, v in t.items()})
            current = padded

    def center_slice(self, d: int) -> list[CentralElement]:
        """Basis of the degree-d center modulo the ideal (small d only)."""
        self._check_cap(d + 1)
        f = self.params.field
        if d == 0:
            return [CentralElement.from_dict(0, {0: f.one()}, "1")]
        sl_up = self.slice(d + 1)
        sl_here = self.slice(d)
        n = 4 ** d
        # commutator matrix: 4 stacked blocks of reduced [e_u, x_j]
        columns: list[dict[int, object]] = []
        for u in range(n):
            col: dict[int, object] = {}
            for j in range(4):
                comm: dict[int, object] = {u * 4 + j: f.one()}
                k2 = j * n + u
                comm[k2] = f.sub(comm.get(k2, f.zero()), f.one())
                comm = {k: v for k, v in comm.items() if not f.is_zero(v)}
                red = sl_up.reduce_vec(comm)
                for idx, v in red.items():
                    col[j * (4 * n) + idx] = v
            columns.append(col)
        kernel = _kernel_of_columns(columns, f)
        # quotient the kernel by the ideal component
        out: list[CentralElement] = []
        extra = _exact_echelon(
            (sl_here.as_rows() if isinstance(sl_here, _ExactSlice) else _fp_rows_as_dicts(sl_here)),
            f,
        )
        count = 0
        for vec in kernel:
            residual = _exact_reduce(dict(vec), extra, f)
            if residual:
                c = min(residual)
                inv = f.div(f.one(), residual[c])
                monic = {k: f.mul(v, inv) for k, v in residual.items()}
                extra[c] = monic
                out.append(CentralElement.from_dict(d, residual, f"center_{d}_{count}"))
                count += 1
        return out

    def quotient_dimension(self, central: Sequence[CentralElement], d: int) -> int:
        """dim of S_d modulo the images of the given central elements."""
        self._check_cap(d)
        if d == 0:
            return 1
        f = self.params.field
        extra_rows: list[dict[int, object]] = []
        for c in central:
            e = c.degree
            if e > d:
                continue
            cd = c.as_dict()
            n_words = 4 ** (d - e)
            for w in range(n_words):
                extra_rows.append({idx * n_words + w: v for idx, v in cd.items()})
                extra_rows.append({w * (4 ** e) + idx: v for idx, v in cd.items()})
        if d < 2:
            rank = len(_exact_echelon(extra_rows, f))
            return 4 ** d - rank
        if isinstance(f, PrimeField):
            return 4 ** d - self._augmented_fp_rank(f.p, d, extra_rows)
        if isinstance(f, RationalField):
            if d <= EXACT_RATIONAL_MAX_DEGREE:
                rows = self._exact_slice(d).as_rows() + extra_rows
                return 4 ** d - len(_exact_echelon(rows, f))
            values = set()
            for prime in self._certificate_primes():
                fp = PrimeField(prime)
                rows_fp = [
                    {k: fp.convert(v) for k, v in r.items()} for r in extra_rows
                ]
                values.add(4 ** d - self._augmented_fp_rank(prime, d, rows_fp))
            if len(values) != 1:
                raise SklylabError("modular quotient ranks disagree; certificate failed")
            return values.pop()
        raise SklylabError("graded computations need an exact field")

    def _augmented_fp_rank(self, prime: int, d: int, extra_rows: list[dict]) -> int:
        sl = self._fp_slice(prime, d)
        if not extra_rows:
            return sl.rank
        V = np.zeros((len(extra_rows), sl.ncols), dtype=np.int64)
        for i, r in enumerate(extra_rows):
            for c, v in r.items():
                V[i, c] = int(v) % prime
        residuals = sl.reduce_many(V)
        extra_rank = len(_fp_echelon(residuals, prime)[1])
        return sl.rank + extra_rank


def _fp_rows_as_dicts(sl: _FpSlice) -> list[dict[int, object]]:
    out = []
    for row in sl.rows:
        nz = np.nonzero(row)[0]
        out.append({int(c): int(row[c]) for c in nz})
    return out


def _kernel_of_columns(columns: list[dict[int, object]], field: Field) -> list[dict[int, object]]:
    """Kernel basis of the linear map sending e_u to columns[u] (sparse dicts)."""
    # Gaussian elimination on (column | unit) pairs: track combinations.
    combos: list[tuple[dict[int, object], dict[int, object]]] = []
    basis: dict[int, tuple[dict[int, object], dict[int, object]]] = {}
    kernel: list[dict[int, object]] = []
    for u, col in enumerate(columns):
        vec = {k: v for k, v in col.items() if not field.is_zero(v)}
        combo = {u: field.one()}
        while vec:
            c = min(vec)
            if c not in basis:
                inv = field.div(field.one(), vec[c])
                basis[c] = (
                    {k: field.mul(v, inv) for k, v in vec.items()},
                    {k: field.mul(v, inv) for k, v in combo.items()},
                )
                break
            bvec, bcombo = basis[c]
            factor = vec[c]
            for k, v in bvec.items():
                nv = field.sub(vec.get(k, field.zero()), field.mul(factor, v))
                if field.is_zero(nv):
                    vec.pop(k, None)
                else:
                    vec[k] = nv
            for k, v in bcombo.items():
                nv = field.sub(combo.get(k, field.zero()), field.mul(factor, v))
                if field.is_zero(nv):
                    combo.pop(k, None)
                else:
                    combo[k] = nv
        if not vec:
            kernel.append(combo)
    return kernel


# ---------------------------------------------------------------------------
# functional facade (one cached algebra per parameter triple)
# ---------------------------------------------------------------------------

_ALGEBRA_CACHE: dict[tuple, SklyaninAlgebra] = {}


def _algebra(p: SklyaninParams, cap: int = DEFAULT_DEGREE_CAP) -> SklyaninAlgebra:
    key = p.key() + (cap,)
    if key not in _ALGEBRA_CACHE:
        if len(_ALGEBRA_CACHE) > 64:
            _ALGEBRA_CACHE.clear()
        _ALGEBRA_CACHE[key] = SklyaninAlgebra(p, cap)
    return _ALGEBRA_CACHE[key]


def graded_dimension(p: SklyaninParams, d: int, cap: int = DEFAULT_DEGREE_CAP) -> int:
    return _algebra(p, cap).graded_dimension(d)


def is_central_up_to(p: SklyaninParams, elem: CentralElement, dmax: int) -> bool:
    return _algebra(p).is_central_up_to(elem, dmax)


def center_slice(p: SklyaninParams, d: int) -> list[CentralElement]:
    return _algebra(p).center_slice(d)


def quotient_dimension(p: SklyaninParams, central: Sequence[CentralElement], d: int) -> int:
    return _algebra(p).quotient_dimension(central, d)
