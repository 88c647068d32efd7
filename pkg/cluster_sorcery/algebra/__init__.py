"""Exact algebra the rest of the package is built on.

Laurent polynomials
-------------------

:py:class:`.LaurentPoly` holds expansions of cluster variables in the initial variables ``x1..xn`` with
principal coefficients ``y1..yn``::

    >>> from cluster_sorcery.algebra import LaurentPoly, parse_poly
    >>> parse_poly("x1^-1 * x2 + x1^-1", 2) == (LaurentPoly.variable(2, 2) + 1) * LaurentPoly.variable(1, 2) ** -1
    True

Seeds
-----

:py:class:`.Seed` bundles a cluster, tropical coefficients and an exchange matrix::

    >>> from cluster_sorcery.algebra import Seed
    >>> seed = Seed.initial([[0, 1], [-1, 0]])
    >>> seed.mutate_path([1, 2, 1, 2, 1]).cluster == seed.cluster[::-1]
    True
"""
from .laurent import (  # noqa
    ExponentVector,
    LaurentPoly,
    TropicalMonomial,
    format_poly,
    min_x_exponents,
    parse_poly,
    poly_add,
    poly_div_exact,
    poly_mul,
    trop_oplus,
)
from .matrix import IntMatrix  # noqa
from .seed import (  # noqa
    MODES,
    PRINCIPAL,
    TRIVIAL,
    Seed,
    SkewSymmetrizer,
    canonical_key,
    find_skew_symmetrizer,
    labeled_key,
    mutate_matrix,
    mutate_seed,
    seeds_equivalent,
)
