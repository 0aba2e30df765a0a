"""Sparse multivariate commutative polynomials with weighted grading.

Polynomials are dicts mapping exponent tuples to nonzero field elements, in
the style of the classic sparse representation.  On top of the arithmetic
this module provides:

  * per-variable weights and weighted-homogeneity queries,
  * partial derivatives and Jacobian minors,
  * a Buchberger engine (weighted-grevlex default, lex, grevlex) with a
    degree cap, normal forms, ideal membership,
  * radical membership via the auxiliary-variable trick (1 in I + (1 - y*f)),
  * set-theoretic variety comparison, and
  * a zero-dimensional solver (lex triangularization + root finding in the
    coefficient field, multiplicities by deflation).

Groebner paths are disabled over the approximate complex field: a pivot
tolerance cannot certify ideal membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegreeCapExceeded,
    GroebnerUnavailable,
    MixedFields,
    NotZeroDimensional,
    ParseError,
    ShapeMismatch,
    SklylabError,
    SolveIncomplete,
    UnknownVariable,
)
from .scalars import Field, PrimeField, RationalField

__all__ = [
    "VarTable",
    "MPoly",
    "PolyIdeal",
    "parse_poly",
    "jacobian_minor",
    "poly_det",
    "radical_member",
    "variety_equal",
    "solve_zero_dim",
]

DEFAULT_DEGREE_CAP = 40

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names with positive integer weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(set(self.names)):
            raise SklylabError(f"duplicate variable names in {self.names}")
        if len(self.weights) != len(self.names):
            raise SklylabError("weights/names length mismatch")
        if any(w < 1 for w in self.weights):
            raise SklylabError("variable weights must be >= 1")

    @staticmethod
    def make(names: Sequence[str], weights: Sequence[int] | None = None) -> "VarTable":
        names = tuple(names)
        if weights is None:
            weights = (1,) * len(names)
        return VarTable(names, tuple(weights))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise SklylabError(f"unknown variable {name!r}") from None

    def wdeg(self, exps: Exponent) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def extended(self, name: str, weight: int = 1) -> "VarTable":
        """New table with one extra (last) variable."""
        return VarTable(self.names + (name,), self.weights + (weight,))


def monomial_key(order: str, vartab: VarTable):
    """Return a sort key; larger key = larger monomial in the order.

    grevlex ties: degree first, then the monomial whose last differing
    exponent is *smaller* wins (last-variable-smallest tie break).
    """
    if order == "lex":
        return lambda e: e
    if order == "grevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    if order == "wgrevlex":
        w = vartab.weights
        return lambda e: (sum(x * y for x, y in zip(e, w)), tuple(-x for x in reversed(e)))
    raise SklylabError(f"unknown term order {order!r}")


class MPoly:
    """Immutable sparse polynomial over a Field with a VarTable."""

    __slots__ = ("field", "vartab", "terms")

    def __init__(self, field: Field, vartab: VarTable, terms: dict[Exponent, object]):
        self.field = field
        self.vartab = vartab
        # canonical: no explicit zeros
        self.terms = {e: c for e, c in terms.items() if not field.is_zero(c)}

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero(vartab: VarTable, field: Field) -> "MPoly":
        return MPoly(field, vartab, {})

    @staticmethod
    def const(vartab: VarTable, field: Field, value) -> "MPoly":
        return MPoly(field, vartab, {(0,) * len(vartab): field.convert(value)})

    @staticmethod
    def var(vartab: VarTable, field: Field, name: str) -> "MPoly":
        e = [0] * len(vartab)
        e[vartab.index(name)] = 1
        return MPoly(field, vartab, {tuple(e): field.one()})

    def _check(self, other: "MPoly") -> None:
        if self.vartab != other.vartab:
            raise MixedFields("polynomials over different variable tables")
        self.field.require_same(other.field)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vartab, self.field, other)
        self._check(other)
        out = dict(self.terms)
        f = self.field
        for e, c in other.terms.items():
            out[e] = f.add(out.get(e, f.zero()), c)
        return MPoly(f, self.vartab, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return MPoly(f, self.vartab, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vartab, self.field, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(self.field.convert(other))
        self._check(other)
        f = self.field
        out: dict[Exponent, object] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = f.mul(ca, cb)
                out[e] = f.add(out[e], prod) if e in out else prod
        return MPoly(f, self.vartab, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise SklylabError("negative polynomial power")
        out = MPoly.const(self.vartab, self.field, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "MPoly":
        f = self.field
        return MPoly(f, self.vartab, {e: f.mul(c, v) for e, v in self.terms.items()})

    # -- queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.vartab), self.field.zero())

    def weighted_degree(self) -> int | None:
        """Max weighted degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.vartab.wdeg(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.vartab.wdeg(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exps: Exponent):
        return self.terms.get(tuple(exps), self.field.zero())

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.vartab, frozenset(self.terms)))

    # -- calculus -------------------------------------------------------
    def diff(self, name: str) -> "MPoly":
        i = self.vartab.index(name)
        f = self.field
        out: dict[Exponent, object] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = f.mul(c, f.convert(e[i]))
        return MPoly(f, self.vartab, out)

    def evaluate(self, values: Sequence) -> object:
        """Full evaluation at a point (one value per variable)."""
        if len(values) != len(self.vartab):
            raise SklylabError("evaluation point has wrong length")
        f = self.field
        vals = [f.convert(v) if isinstance(v, (int, Fraction)) else v for v in values]
        total = f.zero()
        for e, c in self.terms.items():
            term = c
            for exp, v in zip(e, vals):
                if exp:
                    term = f.mul(term, f.pow(v, exp))
            total = f.add(total, term)
        return total

    def specialize(self, assignment: dict[str, object]) -> "MPoly":
        """Substitute scalars for a subset of variables; result drops them."""
        keep = [i for i, n in enumerate(self.vartab.names) if n not in assignment]
        sub = {self.vartab.index(n): self.field.convert(v) for n, v in assignment.items()}
        new_vt = VarTable(
            tuple(self.vartab.names[i] for i in keep),
            tuple(self.vartab.weights[i] for i in keep),
        )
        f = self.field
        out: dict[Exponent, object] = {}
        for e, c in self.terms.items():
            coeff = c
            for i, v in sub.items():
                if e[i]:
                    coeff = f.mul(coeff, f.pow(v, e[i]))
            ne = tuple(e[i] for i in keep)
            out[ne] = f.add(out[ne], coeff) if ne in out else coeff
        return MPoly(f, new_vt, out)

    def lift(self, new_vt: VarTable) -> "MPoly":
        """Re-express over a table that extends this one by trailing vars."""
        if new_vt.names[: len(self.vartab)] != self.vartab.names:
            raise SklylabError("lift target must extend the variable table")
        pad = (0,) * (len(new_vt) - len(self.vartab))
        return MPoly(self.field, new_vt, {e + pad: c for e, c in self.terms.items()})

    # -- printing -------------------------------------------------------
    def to_str(self) -> str:
        if not self.terms:
            return "0"
        key = monomial_key("wgrevlex", self.vartab)
        parts = []
        for e in sorted(self.terms, key=key, reverse=True):
            c = self.terms[e]
            factors = [
                f"{n}^{k}" if k > 1 else n
                for n, k in zip(self.vartab.names, e)
                if k > 0
            ]
            cs = self.field.to_str(c)
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            elif cs == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append(cs + "*" + "*".join(factors))
        text = parts[0]
        for p in parts[1:]:
            text += p if p.startswith("-") else "+" + p
        return text

    def __repr__(self):
        return f"MPoly({self.to_str()})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.vartab.names),
            "weights": list(self.vartab.weights),
            "terms": [
                {"coeff": self.field.to_str(c), "exps": list(e)}
                for e, c in sorted(self.terms.items())
            ],
        }


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_poly(text: str, vartab: VarTable, field: Field) -> MPoly:
    """Parse `term (+|- term)*`, term = [coeff *] var[^k] (* var[^k])*.

    Coefficients are integers or rationals `p/q`.  Whitespace is ignored.
    """
    src = text
    pos = 0
    n = len(src)

    def skip_ws():
        nonlocal pos
        while pos < n and src[pos].isspace():
            pos += 1

    def read_number() -> Fraction:
        nonlocal pos
        start = pos
        while pos < n and src[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected a number", pos)
        num = int(src[start:pos])
        skip_ws()
        if pos < n and src[pos] == "/":
            pos += 1
            skip_ws()
            dstart = pos
            while pos < n and src[pos].isdigit():
                pos += 1
            if pos == dstart:
                raise ParseError("expected a denominator", pos)
            return Fraction(num, int(src[dstart:pos]))
        return Fraction(num)

    def read_ident() -> str:
        nonlocal pos
        start = pos
        if pos >= n or not (src[pos].isalpha() or src[pos] == "_"):
            raise ParseError("expected a variable name", pos)
        while pos < n and (src[pos].isalnum() or src[pos] == "_"):
            pos += 1
        return src[start:pos]

    result = MPoly.zero(vartab, field)
    skip_ws()
    if pos >= n:
        raise ParseError("empty polynomial text", pos)
    first = True
    while pos < n:
        skip_ws()
        sign = 1
        if pos < n and src[pos] in "+-":
            sign = -1 if src[pos] == "-" else 1
            pos += 1
            skip_ws()
        elif not first:
            raise ParseError(f"expected '+' or '-', got {src[pos]!r}", pos)
        first = False
        # term: coefficient and/or power products
        coeff = Fraction(sign)
        exps = [0] * len(vartab)
        saw_factor = False
        if pos < n and src[pos].isdigit():
            coeff *= read_number()
            saw_factor = True
            skip_ws()
            if pos < n and src[pos] == "*":
                pos += 1
                saw_factor = False  # factors must follow
        while True:
            skip_ws()
            if pos < n and (src[pos].isalpha() or src[pos] == "_"):
                ident_pos = pos
                name = read_ident()
                if name not in vartab.names:
                    raise UnknownVariable(f"unknown variable {name!r}", ident_pos)
                k = 1
                skip_ws()
                if pos < n and src[pos] == "^":
                    pos += 1
                    skip_ws()
                    k = int(read_number())
                exps[vartab.index(name)] += k
                saw_factor = True
                skip_ws()
                if pos < n and src[pos] == "*":
                    pos += 1
                    saw_factor = False
                    continue
            break
        if not saw_factor:
            raise ParseError("dangling '*' or empty term", pos)
        term = MPoly(field, vartab, {tuple(exps): field.convert(coeff)})
        result = result + term
        skip_ws()
    return result


# ---------------------------------------------------------------------------
# determinants and Jacobian minors
# ---------------------------------------------------------------------------

def poly_det(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """Determinant by cofactor expansion (intended for small matrices)."""
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        raise ShapeMismatch("determinant of a non-square matrix")
    if m == 0:
        raise ShapeMismatch("empty determinant")
    if m == 1:
        return matrix[0][0]
    if m == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    first = matrix[0]
    out = MPoly.zero(first[0].vartab, first[0].field)
    for j in range(m):
        if first[j].is_zero():
            continue
        minor = [[row[k] for k in range(m) if k != j] for row in matrix[1:]]
        cof = first[j] * poly_det(minor)
        out = out + cof if j % 2 == 0 else out - cof
    return out


def jacobian_minor(
    polys: Sequence[MPoly], rows: Sequence[int], cols: Sequence[str]
) -> MPoly:
    """det of the sub-Jacobian d(polys[rows]) / d(cols)."""
    if len(rows) != len(cols):
        raise ShapeMismatch(f"{len(rows)} rows vs {len(cols)} columns")
    matrix = [[polys[r].diff(c) for c in cols] for r in rows]
    return poly_det(matrix)


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------

def _leading(f: MPoly, key) -> tuple[Exponent, object]:
    e = max(f.terms, key=key)
    return e, f.terms[e]


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _normal_form(f: MPoly, basis: list[MPoly], key) -> MPoly:
    """Full multivariate division remainder of f by the basis."""
    fld = f.field
    leads = [_leading(g, key) for g in basis]
    rem: dict[Exponent, object] = {}
    work = dict(f.terms)
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        if fld.is_zero(c):
            continue
        for g, (le, lc) in zip(basis, leads):
            if _divides(le, e):
                # cancel c*e against (c/lc) * shift(g)
                q = fld.div(c, lc)
                shift = tuple(x - y for x, y in zip(e, le))
                for ge, gc in g.terms.items():
                    te = tuple(x + y for x, y in zip(ge, shift))
                    delta = fld.neg(fld.mul(q, gc))
                    cur = work.get(te)
                    if te == e:
                        continue  # cancels the pivot term exactly
                    work[te] = fld.add(cur, delta) if cur is not None else delta
                    if fld.is_zero(work[te]):
                        del work[te]
                break
        else:
            rem[e] = c
    return MPoly(fld, f.vartab, rem)


def _s_poly(f: MPoly, g: MPoly, key) -> MPoly:
    fld = f.field
    (fe, fc), (ge, gc) = _leading(f, key), _leading(g, key)
    lcm = _lcm(fe, ge)
    fshift = tuple(x - y for x, y in zip(lcm, fe))
    gshift = tuple(x - y for x, y in zip(lcm, ge))
    mf = MPoly(fld, f.vartab, {fshift: fld.div(fld.one(), fc)})
    mg = MPoly(fld, f.vartab, {gshift: fld.div(fld.one(), gc)})
    return mf * f - mg * g


def buchberger(
    gens: Sequence[MPoly],
    order: str = "wgrevlex",
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> list[MPoly]:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Raises DegreeCapExceeded when an intermediate element climbs above the
    cap (runaway run) instead of hanging.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    fld = gens[0].field
    if not fld.exact:
        raise GroebnerUnavailable("Groebner bases are disabled over approximate fields")
    vartab = gens[0].vartab
    key = monomial_key(order, vartab)

    basis: list[MPoly] = []
    for g in gens:
        r = _normal_form(g, basis, key)
        if not r.is_zero():
            basis.append(r)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        # select by smallest lcm degree (normal strategy)
        i, j = min(
            pairs,
            key=lambda p: key(_lcm(_leading(basis[p[0]], key)[0], _leading(basis[p[1]], key)[0])),
        )
        pairs.discard((i, j))
        le_i = _leading(basis[i], key)[0]
        le_j = _leading(basis[j], key)[0]
        lcm = _lcm(le_i, le_j)
        # first Buchberger criterion: coprime leads reduce to zero
        if lcm == tuple(a + b for a, b in zip(le_i, le_j)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (
                _divides(_leading(basis[k], key)[0], lcm)
                and (min(i, k), max(i, k)) not in pairs
                and (min(j, k), max(j, k)) not in pairs
            ):
                skip = True
                break
        if skip:
            continue
        r = _normal_form(_s_poly(basis[i], basis[j], key), basis, key)
        if r.is_zero():
            continue
        deg = r.weighted_degree()
        if deg is not None and deg > degree_cap * max(vartab.weights):
            raise DegreeCapExceeded(
                f"Groebner element of weighted degree {deg} exceeds cap {degree_cap}"
            )
        basis.append(r)
        pairs.update((k, len(basis) - 1) for k in range(len(basis) - 1))

    # inter-reduce to the reduced basis
    reduced: list[MPoly] = []
    leads = [_leading(g, key)[0] for g in basis]
    for idx, g in enumerate(basis):
        if any(
            k != idx and _divides(leads[k], leads[idx])
            and not (leads[k] == leads[idx] and k > idx)
            for k in range(len(basis))
        ):
            continue
        reduced.append(g)
    final: list[MPoly] = []
    for idx, g in enumerate(reduced):
        others = reduced[:idx] + reduced[idx + 1 :]
        r = _normal_form(g, others, key) if others else g
        if r.is_zero():
            continue
        _, lc = _leading(r, key)
        final.append(r.scale(r.field.div(r.field.one(), lc)))
    final.sort(key=lambda g: key(_leading(g, key)[0]))
    return final


class PolyIdeal:
    """Generator list with cached reduced Groebner bases per term order."""

    def __init__(self, generators: Sequence[MPoly], degree_cap: int = DEFAULT_DEGREE_CAP):
        gens = list(generators)
        if not gens:
            raise SklylabError("ideal needs at least one generator")
        vt, fld = gens[0].vartab, gens[0].field
        for g in gens[1:]:
            if g.vartab != vt:
                raise MixedFields("ideal generators over different variable tables")
            fld.require_same(g.field)
        self.generators = gens
        self.vartab = vt
        self.field = fld
        self.degree_cap = degree_cap
        self._gb: dict[str, list[MPoly]] = {}

    def groebner(self, order: str = "wgrevlex") -> list[MPoly]:
        if order not in self._gb:
            self._gb[order] = buchberger(self.generators, order, self.degree_cap)
        return self._gb[order]

    def normal_form(self, f: MPoly, order: str = "wgrevlex") -> MPoly:
        gb = self.groebner(order)
        if not gb:
            return f
        return _normal_form(f, gb, monomial_key(order, self.vartab))

    def contains(self, f: MPoly, order: str = "wgrevlex") -> bool:
        return self.normal_form(f, order).is_zero()

    def is_unit(self, order: str = "wgrevlex") -> bool:
        gb = self.groebner(order)
        return any(g.is_constant() and not g.is_zero() for g in gb)


def radical_member(f: MPoly, ideal: PolyIdeal) -> bool:
    """True iff f vanishes on V(ideal): 1 in ideal + (1 - y*f)."""
    if f.is_zero():
        return True
    if ideal.is_unit():
        return True
    # pick a fresh auxiliary variable name
    aux = "_y"
    while aux in ideal.vartab.names:
        aux += "_"
    big_vt = ideal.vartab.extended(aux, 1)
    fld = ideal.field
    gens = [g.lift(big_vt) for g in ideal.generators]
    # start from a cached basis if present: it generates the same ideal
    if ideal._gb.get("wgrevlex"):
        gens = [g.lift(big_vt) for g in ideal._gb["wgrevlex"]]
    y = MPoly.var(big_vt, fld, aux)
    gens.append(MPoly.const(big_vt, fld, 1) - y * f.lift(big_vt))
    saturated = PolyIdeal(gens, ideal.degree_cap)
    return saturated.is_unit()


def variety_equal(I: PolyIdeal, J: PolyIdeal) -> bool:
    """Set-theoretic equality of V(I) and V(J) via mutual radical membership."""
    if I.vartab != J.vartab:
        raise MixedFields("variety comparison over different variable tables")
    return all(radical_member(g, J) for g in I.generators) and all(
        radical_member(g, I) for g in J.generators
    )


# ---------------------------------------------------------------------------
# zero-dimensional solving
# ---------------------------------------------------------------------------

def _univ_coeffs(f: MPoly, var_index: int) -> list:
    """Coefficient list (ascending) of a polynomial univariate in one variable."""
    deg = max((e[var_index] for e in f.terms), default=0)
    coeffs = [f.field.zero()] * (deg + 1)
    for e, c in f.terms.items():
        if any(x != 0 for i, x in enumerate(e) if i != var_index):
            raise SklylabError("polynomial is not univariate in the given variable")
        coeffs[e[var_index]] = f.field.add(coeffs[e[var_index]], c)
    return coeffs


def _univ_trim(fld: Field, coeffs: list) -> list:
    while coeffs and fld.is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def _univ_divmod(fld: Field, a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [fld.zero()] * max(0, len(a) - len(b) + 1)
    inv_lead = fld.div(fld.one(), b[-1])
    for i in range(len(a) - len(b), -1, -1):
        factor = fld.mul(a[i + len(b) - 1], inv_lead)
        q[i] = factor
        for j, bc in enumerate(b):
            a[i + j] = fld.sub(a[i + j], fld.mul(factor, bc))
    return q, _univ_trim(fld, a)


def _univ_gcd(fld: Field, a: list, b: list) -> list:
    a, b = _univ_trim(fld, list(a)), _univ_trim(fld, list(b))
    while b:
        _, r = _univ_divmod(fld, a, b)
        a, b = b, r
    if a:
        inv = fld.div(fld.one(), a[-1])
        a = [fld.mul(c, inv) for c in a]
    return a


def _univ_eval(fld: Field, coeffs: list, x):
    total = fld.zero()
    for c in reversed(coeffs):
        total = fld.add(fld.mul(total, x), c)
    return total


def _field_roots(fld: Field, coeffs: list) -> tuple[list[tuple[object, int]], int]:
    """Roots of a univariate polynomial lying in the field, with multiplicity.

    Returns (roots, leftover_degree) where leftover_degree counts the degree
    of the rootless factor that remains (0 when the polynomial splits).
    """
    coeffs = _univ_trim(fld, list(coeffs))
    if not coeffs:
        raise SklylabError("root finding on the zero polynomial")
    if len(coeffs) == 1:
        return [], 0

    candidates: list = []
    if isinstance(fld, RationalField):
        # rational root theorem on the cleared-denominator polynomial
        from math import gcd

        lcm_den = 1
        for c in coeffs:
            lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
        ints = [int(c * lcm_den) for c in coeffs]
        while ints and ints[0] == 0:
            candidates.append(Fraction(0))
            break

        def divisors(m: int) -> list[int]:
            m = abs(m)
            out = []
            d = 1
            while d * d <= m:
                if m % d == 0:
                    out.extend((d, m // d))
                d += 1
            return sorted(set(out))

        lead = ints[-1]
        trail = next((c for c in ints if c != 0), 0)
        if trail != 0:
            for p in divisors(trail):
                for q in divisors(lead):
                    candidates.extend((Fraction(p, q), Fraction(-p, q)))
        candidates = sorted(set(candidates))
    elif isinstance(fld, PrimeField):
        if fld.p > 200_000:
            raise SolveIncomplete(f"root scan over F_{fld.p} too large")
        candidates = list(range(fld.p))
    else:
        raise SolveIncomplete("exact root finding needs an exact field")

    roots: list[tuple[object, int]] = []
    work = coeffs
    for cand in candidates:
        if len(work) == 1:
            break
        mult = 0
        while len(work) > 1 and fld.is_zero(_univ_eval(fld, work, cand)):
            work, rem = _univ_divmod(fld, work, [fld.neg(cand), fld.one()])
            assert not rem
            mult += 1
        if mult:
            roots.append((cand, mult))
    return roots, len(work) - 1


def is_zero_dimensional(ideal: PolyIdeal) -> bool:
    """Finiteness test: each variable has a pure-power leading monomial."""
    gb = ideal.groebner("lex")
    if any(g.is_constant() and not g.is_zero() for g in gb):
        return True  # empty variety
    key = monomial_key("lex", ideal.vartab)
    nvars = len(ideal.vartab)
    covered = [False] * nvars
    for g in gb:
        le = _leading(g, key)[0]
        nz = [i for i, x in enumerate(le) if x > 0]
        if len(nz) == 1:
            covered[nz[0]] = True
    return all(covered)


def solve_zero_dim(ideal: PolyIdeal) -> list[tuple[tuple, int]]:
    """All solutions of a zero-dimensional ideal over the coefficient field.

    Returns [(point, multiplicity)] with the point in VarTable order.
    Multiplicity is the product of root multiplicities along the
    triangular back-substitution.  Raises SolveIncomplete when a branch
    leaves the coefficient field, NotZeroDimensional when the variety is
    not finite.
    """
    if not is_zero_dimensional(ideal):
        raise NotZeroDimensional("ideal has infinitely many zeros (or cap hit)")
    gb = ideal.groebner("lex")
    if any(g.is_constant() and not g.is_zero() for g in gb):
        return []
    fld = ideal.field
    vt = ideal.vartab
    nvars = len(vt)

    solutions: list[tuple[tuple, int]] = []

    def descend(level: int, partial: dict[str, object], mult: int) -> None:
        """Assign variables from the last (index nvars-1) up to index 0."""
        if level < 0:
            point = tuple(partial[n] for n in vt.names)
            # guard: every generator must vanish
            for g in ideal.generators:
                if not fld.is_zero(g.evaluate(point)):
                    return
            solutions.append((point, mult))
            return
        name = vt.names[level]
        assigned = {vt.names[i]: partial[vt.names[i]] for i in range(level + 1, nvars)}
        univs: list[list] = []
        inconsistent = False
        for g in gb:
            spec = g.specialize(assigned) if assigned else g
            if spec.is_zero():
                continue
            idx = spec.vartab.index(name) if name in spec.vartab.names else None
            if idx is None:
                inconsistent = True
                break
            if all(
                all(x == 0 for i, x in enumerate(e) if i != idx) for e in spec.terms
            ):
                univs.append(_univ_coeffs(spec, idx))
            elif max(e[idx] for e in spec.terms) == 0:
                # constant nonzero in remaining vars cannot happen at this
                # level for a lex basis; treat as not-yet-usable
                continue
        if inconsistent:
            return
        if not univs:
            raise NotZeroDimensional(f"no univariate constraint for {name}")
        g = univs[0]
        for other in univs[1:]:
            g = _univ_gcd(fld, g, other)
            if not g:
                raise NotZeroDimensional(f"constraints for {name} collapsed to zero")
        if len(g) == 1:
            return  # contradictory branch
        roots, leftover = _field_roots(fld, g)
        if leftover:
            raise SolveIncomplete(
                f"variable {name}: degree-{leftover} factor has no roots in the field"
            )
        for root, m in roots:
            partial[name] = root
            descend(level - 1, partial, mult * m)
            del partial[name]

    descend(nvars - 1, {}, 1)
    solutions.sort(key=lambda s: str(s[0]))
    return solutions
