"""Field-arithmetic backends behind one uniform contract.

Three coefficient domains are supported:

  * Rational      — exact fractions (`fractions.Fraction`)
  * PrimeField p  — canonical residues in [0, p), p prime and >= 5
  * ComplexApprox — python complex with a comparison tolerance

A scalar is a plain Python value (Fraction / int / complex); the `Field`
object it belongs to supplies arithmetic, parsing and printing.  Keeping
scalars unboxed makes the polynomial layer fast and keeps everything
hashable for sparse-dict storage.

Characteristics 2 and 3 are rejected: the quadratic relations, the central
elements and the curve quadrics all involve denominators and quadric
geometry that degenerate there.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .errors import DivisionByZero, MixedFields, NonResidue, SklylabError

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "ComplexField",
    "parse_field_spec",
    "arith",
    "sqrt_mod_p",
    "approx_eq",
    "is_prime",
]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3,317,044,064,679,887,385,961,981."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of the three coefficient domains."""

    kind: str = "abstract"
    exact: bool = True

    # -- element constructors -------------------------------------------
    def zero(self):
        return self.convert(0)

    def one(self):
        return self.convert(1)

    def convert(self, x):
        """Coerce an int/Fraction/str into a canonical field element."""
        raise NotImplementedError

    def from_str(self, text: str):
        raise NotImplementedError

    def to_str(self, v) -> str:
        raise NotImplementedError

    # -- arithmetic -----------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        return self.sub(self.zero(), a)

    def inv(self, a):
        return self.div(self.one(), a)

    def pow(self, a, k: int):
        if k < 0:
            return self.inv(self.pow(a, -k))
        out = self.one()
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    # -- predicates -----------------------------------------------------
    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def same(self, other: "Field") -> bool:
        return self.spec_string() == other.spec_string()

    def require_same(self, other: "Field") -> None:
        if not self.same(other):
            raise MixedFields(f"{self.spec_string()} vs {other.spec_string()}")

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<Field {self.spec_string()}>"

    def __eq__(self, other):
        return isinstance(other, Field) and self.same(other)

    def __hash__(self):
        return hash(self.spec_string())


class RationalField(Field):
    kind = "rational"
    exact = True

    def convert(self, x):
        if isinstance(x, float):
            raise SklylabError("floats are not exact rationals; pass Fraction or str")
        return Fraction(x)

    def from_str(self, text: str):
        return Fraction(text)

    def to_str(self, v) -> str:
        return str(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("rational division by zero")
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def spec_string(self) -> str:
        return "rational"


class PrimeField(Field):
    kind = "fp"
    exact = True

    def __init__(self, p: int):
        if not is_prime(p) or p < 5:
            raise SklylabError(f"prime field modulus must be prime >= 5, got {p}")
        self.p = p

    def convert(self, x):
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    def from_str(self, text: str):
        return self.convert(Fraction(text))

    def to_str(self, v) -> str:
        return str(v)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        b %= self.p
        if b == 0:
            raise DivisionByZero(f"division by zero mod {self.p}")
        return a * pow(b, -1, self.p) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def sqrt(self, a):
        return sqrt_mod_p(a, self.p)

    def spec_string(self) -> str:
        return f"fp:{self.p}"


class ComplexField(Field):
    kind = "complex"
    exact = False

    def __init__(self, tol: float = 1e-9):
        if not (0 < tol <= 1e-3):
            raise SklylabError(f"complex tolerance must lie in (0, 1e-3], got {tol}")
        self.tol = float(tol)

    def convert(self, x):
        if isinstance(x, Fraction):
            return complex(x.numerator / x.denominator)
        return complex(x)

    def from_str(self, text: str):
        try:
            return complex(Fraction(text))
        except ValueError:
            return complex(text)

    def to_str(self, v) -> str:
        return repr(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if abs(b) <= self.tol:
            raise DivisionByZero("complex division by (toleranced) zero")
        return a / b

    def is_zero(self, a) -> bool:
        return abs(a) <= self.tol

    def eq(self, a, b) -> bool:
        return approx_eq(a, b, self.tol)

    def spec_string(self) -> str:
        return f"complex:{self.tol:g}"


def parse_field_spec(text: str) -> Field:
    """Parse a CLI field spec: `rational` | `fp:<p>` | `complex:<tol>`."""
    text = text.strip()
    if text == "rational":
        return RationalField()
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    if text == "complex":
        return ComplexField()
    if text.startswith("complex:"):
        return ComplexField(float(text[8:]))
    raise SklylabError(f"unrecognized field spec {text!r}")


def arith(field: Field, a, b, op: str):
    """Single entry point for the four binary operations (CLI-facing)."""
    fn = {"add": field.add, "sub": field.sub, "mul": field.mul, "div": field.div}.get(op)
    if fn is None:
        raise SklylabError(f"unknown op {op!r}")
    return fn(a, b)


def sqrt_mod_p(a: int, p: int) -> int:
    """Tonelli-Shanks modular square root; returns min(r, p-r).

    Raises NonResidue when a has no square root mod p.
    """
    if not is_prime(p) or p < 5:
        raise SklylabError(f"modulus must be prime >= 5, got {p}")
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise NonResidue(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    # deterministic scan for a non-residue
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        # find least i with t^(2^i) = 1
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def approx_eq(a, b, tol: float) -> bool:
    """Hybrid relative/absolute comparison: |a-b| <= tol * max(1, |a|, |b|)."""
    if tol <= 0:
        raise SklylabError("tolerance must be positive")
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def principal_sqrt(z) -> complex:
    """Principal branch square root of a complex number."""
    return cmath.sqrt(z)
