"""d-vectors, g-vectors and the G-, D- and R-matrices of seeds.

Everything here is a pure function of immutable seeds. Expansions relative to a cluster other than the initial
one are obtained with :py:func:`reexpand`, which re-roots the pattern at that cluster.
"""
import logging

from .algebra import PRINCIPAL, TRIVIAL, IntMatrix, LaurentPoly, Seed, min_x_exponents, mutate_matrix
from .exceptions import IndexOutOfRange, MalformedExpansion, PreconditionError, RankMismatch
from .utils import reduce_word


logger = logging.getLogger(__name__)


def dvector_direct(x):
    """d-vector of an expansion with respect to the variables it is expanded in.

    For example::

        >>> x1, x2 = LaurentPoly.variable(1, 2), LaurentPoly.variable(2, 2)
        >>> dvector_direct((x1 + x2 + 1) * (x1 * x2) ** -1)
        (1, 1)
    """
    return tuple(-a for a in min_x_exponents(x))


def dmatrix_direct(seed):
    """Matrix whose columns are the d-vectors of the cluster of ``seed``."""
    return IntMatrix.from_columns([dvector_direct(x) for x in seed.cluster])


def dmatrix_recurrence(path, bmat):
    """D-matrix at the end of ``path`` computed by the d-vector recurrence alone.

    Starts from ``-I`` and only touches column ``k`` at a mutation in direction ``k``. ``bmat`` is the
    initial exchange matrix and is mutated along with the d-matrix.
    """
    n = bmat.nrows
    columns = [[-1 if i == j else 0 for i in range(n)] for j in range(n)]
    for k in path:
        if not isinstance(k, int) or not 1 <= k <= n:
            raise IndexOutOfRange(params={"index": k, "rank": n})
        c = k - 1
        column = []
        for i in range(n):
            positive = sum(columns[l][i] * bmat[l, c] for l in range(n) if bmat[l, c] > 0)
            negative = sum(-columns[l][i] * bmat[l, c] for l in range(n) if bmat[l, c] < 0)
            column.append(-columns[c][i] + max(positive, negative))
        columns[c] = column
        bmat = mutate_matrix(bmat, k)
    return IntMatrix.from_columns(columns, nrows=n)


def gvector(x):
    """Exponent of the unique y-free monomial of a principal coefficient expansion."""
    y_free = x.y_free_part()
    if not y_free.is_monomial:
        raise MalformedExpansion(params={"expansion": str(x)})
    ((flat, coeff),) = y_free.items()
    if coeff != 1:
        raise MalformedExpansion(params={"expansion": str(x)})
    return flat[: x.rank]


def _require_principal(seed):
    if seed.mode != PRINCIPAL:
        raise PreconditionError(params={"reason": "g-vectors need principal coefficients"})


def gmatrix(seed):
    _require_principal(seed)
    return IntMatrix.from_columns([gvector(x) for x in seed.cluster])


def rmatrix(s, t):
    """``R`` with ``G_t = G_s R``."""
    return gmatrix(s).inverse_unimodular() @ gmatrix(t)


def _check_monomial_exponents(seed, v):
    v = tuple(v)
    if len(v) != seed.rank:
        raise RankMismatch(params={"left": seed.rank, "right": len(v)})
    if any(a < 0 for a in v):
        raise PreconditionError(params={"reason": "cluster monomial exponents must be nonnegative: {}".format(v)})
    return v


def monomial_gvector(seed, v):
    """Degree ``G v`` of the cluster monomial ``x^v`` of ``seed``."""
    v = _check_monomial_exponents(seed, v)
    return gmatrix(seed) @ v


def cluster_monomial(seed, v):
    v = _check_monomial_exponents(seed, v)
    result = LaurentPoly.one(seed.rank)
    for x, a in zip(seed.cluster, v):
        if a:
            result = result * x ** a
    return result


def monomial_dvector(seed, v):
    """d-vector of ``x^v`` through ``D v`` with the recurrence D-matrix of ``seed``."""
    v = _check_monomial_exponents(seed, v)
    return dmatrix_recurrence(seed.path, seed.root_bmat()) @ v


def reexpand(anchor, target, mode=TRIVIAL):
    """Seed at ``target``'s labeled vertex in a pattern rooted at ``anchor``.

    The cluster of the result expands ``target``'s variables in the variables of ``anchor``, ``x_j`` of the
    result standing for the ``j``-th entry of ``anchor``'s cluster.
    """
    if anchor.rank != target.rank:
        raise RankMismatch(params={"left": anchor.rank, "right": target.rank})
    word = reduce_word(tuple(reversed(anchor.path)) + tuple(target.path))
    seed = Seed.initial(anchor.bmat, mode=mode).mutate_path(word)
    logger.debug("reexpand anchor=%s target=%s word=%s", list(anchor.path), list(target.path), list(word))
    return seed


def relative_dmatrix(anchor, target):
    """D-matrix of ``target``'s cluster with respect to ``anchor``'s cluster."""
    return dmatrix_direct(reexpand(anchor, target))


def proper_laurent_check(s, v, target):
    """Whether ``x_s^v`` expands in ``target``'s cluster with a negative exponent in every term."""
    v = _check_monomial_exponents(s, v)
    support = [x for x, a in zip(s.cluster, v) if a]
    if all(x in target.cluster for x in support):
        raise PreconditionError(params={"reason": "monomial is a cluster monomial of the target"})

    monomial = cluster_monomial(reexpand(target, s), v)
    return all(any(a < 0 for a in flat[: monomial.rank]) for flat, _ in monomial.items())


def is_sign_coherent(values):
    return not (any(v > 0 for v in values) and any(v < 0 for v in values))


def rows_sign_coherent(mat):
    return all(is_sign_coherent(row) for row in mat.rows)


def columns_sign_coherent(mat):
    return all(is_sign_coherent(column) for column in mat.columns())
