"""Exception types shared across the library.

Every failure mode that callers are expected to handle has its own class, so
tests can assert on the exact condition rather than matching message strings.
"""


class SklylabError(Exception):
    """Base class for all library errors."""


class MixedFields(SklylabError):
    """Two operands (or polynomials) carry different field specs."""


class DivisionByZero(SklylabError, ZeroDivisionError):
    """Division by an (exact or toleranced) zero scalar."""


class NonResidue(SklylabError):
    """Quadratic non-residue passed to a modular square root."""


class ParseError(SklylabError):
    """Polynomial text rejected; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(ParseError):
    """Identifier in polynomial text not present in the variable table."""


class ShapeMismatch(SklylabError):
    """Jacobian minor requested with mismatched row/column counts."""


class GroebnerUnavailable(SklylabError):
    """Groebner-basis paths are disabled for approximate coefficients."""


class DegreeCapExceeded(SklylabError):
    """A Groebner run produced elements above the configured degree cap."""


class NotZeroDimensional(SklylabError):
    """Zero-dimensional solver called on an ideal with infinitely many zeros."""


class SolveIncomplete(SklylabError):
    """A zero-dimensional system has solutions outside the coefficient field."""


class CapExceeded(SklylabError):
    """Graded computation requested above the configured degree cap."""


class ConstraintViolated(SklylabError):
    """Parameter triple violates a defining constraint."""

    def __init__(self, which: str):
        super().__init__(which)
        self.which = which


class Indeterminacy(SklylabError):
    """All four coordinate cubics vanish at the given point."""


class NoPointFound(SklylabError):
    """Curve point search exhausted its attempt budget."""


class DisagreementAcrossPoints(SklylabError):
    """Iteration order differs between sample points (degenerate case)."""


class DegenerateParams(SklylabError):
    """Parameters unusable for the requested construction (e.g. a zero factor)."""


class ClosureExplosion(SklylabError):
    """Matrix-group closure exceeded its size cap; constants are broken."""


class NotInGSpan(SklylabError):
    """An automorphism image leaves the span it was expected to preserve."""


class DegenerateAForm(SklylabError):
    """Even-case linear form misses its required complementary variable."""


class CommonFactorH(SklylabError):
    """The two binary forms h1, h2 share a common factor."""


class DegreeMismatch(SklylabError):
    """Structured presentation parts have incompatible weighted degrees."""


class BadPIDegree(SklylabError):
    """PI degree outside the supported range (n < 3 or n divides 4)."""


class RangeError(SklylabError):
    """A label index lies outside its admissible range."""
