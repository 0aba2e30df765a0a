"""sklylab: exact computational checks for 4-generator Sklyanin algebras.

Subpackages by concern:

- ``scalars``    exact and approximate coefficient fields
- ``mpoly``      sparse weighted multivariate polynomials, Groebner bases,
                 radical membership, zero-dimensional solving
- ``skly``       the quadratic algebra: relations, graded dimensions,
                 central elements, quotients
- ``geometry``   the space elliptic curve and its translation automorphism
- ``heisenberg`` the order-64 symmetry group and its induced actions
- ``poisson``    the Jacobian (two-potential) Poisson bracket on the center
- ``singularity`` center presentations, singular loci, nodal curves
- ``strata``     closed-form stratification and multiplicity bookkeeping
- ``cli``        the ``sklylab`` command-line front end
"""

__version__ = "0.1.0"

__all__ = [
    "scalars",
    "mpoly",
    "skly",
    "geometry",
    "heisenberg",
    "poisson",
    "singularity",
    "strata",
    "cli",
    "errors",
]
