"""Seeds, the three part seed mutation and seed equivalence.

Seeds are immutable values. A seed remembers the reduced mutation word that produced it from the initial
seed of its pattern, i.e. the vertex of the ``n``-regular tree it is attached to.

For example::

    >>> seed = Seed.initial(IntMatrix([[0, 1], [-1, 0]]), mode=TRIVIAL)
    >>> [str(x) for x in seed.mutate(1).cluster]
    ['x1^-1 * x2 + x1^-1', 'x2']
"""
from fractions import Fraction
from functools import reduce
from math import gcd

import networkx as nx

from .. import signals
from ..exceptions import IndexOutOfRange, InvalidDescriptor, NotSkewSymmetrizable, RankMismatch
from ..utils import reduce_word
from .laurent import LaurentPoly, TropicalMonomial, poly_div_exact, trop_oplus
from .matrix import IntMatrix


PRINCIPAL = "principal"
TRIVIAL = "trivial"
MODES = (PRINCIPAL, TRIVIAL)


class SkewSymmetrizer(tuple):
    """Positive integer diagonal ``S`` with ``S B`` skew-symmetric, stored as its diagonal."""

    __slots__ = ()

    @property
    def diag(self):
        return tuple(self)

    @property
    def trace(self):
        return sum(self)


def _lcm(a, b):
    return a * b // gcd(a, b)


def find_skew_symmetrizer(bmat):
    """Returns the minimal trace skew-symmetrizer of ``bmat``.

    Ratio constraints ``s_j / s_i = -b_ij / b_ji`` are propagated along a spanning tree of every connected
    component of the diagram of ``bmat``, checked on every edge and scaled to the smallest positive integers.
    """
    if not bmat.is_square:
        raise NotSkewSymmetrizable(params={"reason": "matrix is {}x{}".format(*bmat.shape)})

    n = bmat.nrows
    diagram = nx.Graph()
    diagram.add_nodes_from(range(n))
    for i in range(n):
        if bmat[i, i]:
            raise NotSkewSymmetrizable(params={"reason": "diagonal entry {} is nonzero".format(i + 1)})
        for j in range(i + 1, n):
            bij, bji = bmat[i, j], bmat[j, i]
            if (bij == 0) != (bji == 0) or bij * bji > 0:
                raise NotSkewSymmetrizable(
                    params={"reason": "sign pattern violated at ({}, {})".format(i + 1, j + 1)}
                )
            if bij:
                diagram.add_edge(i, j)

    diag = [1] * n
    for component in nx.connected_components(diagram):
        root = min(component)
        ratios = {root: Fraction(1)}
        for u, v in nx.bfs_edges(diagram, root):
            ratios[v] = -ratios[u] * bmat[u, v] / bmat[v, u]

        for u, v in diagram.subgraph(component).edges():
            if ratios[u] * bmat[u, v] != -ratios[v] * bmat[v, u]:
                raise NotSkewSymmetrizable(
                    params={"reason": "inconsistent ratios around ({}, {})".format(u + 1, v + 1)}
                )

        scale = reduce(_lcm, (r.denominator for r in ratios.values()), 1)
        scaled = {i: int(r * scale) for i, r in ratios.items()}
        common = reduce(gcd, scaled.values())
        for i, value in scaled.items():
            diag[i] = value // common

    return SkewSymmetrizer(diag)


def _check_direction(k, n):
    if not isinstance(k, int) or not 1 <= k <= n:
        raise IndexOutOfRange(params={"index": k, "rank": n})


def mutate_matrix(bmat, k):
    """Matrix mutation in direction ``k`` (1-based)."""
    n = bmat.nrows
    _check_direction(k, n)
    c = k - 1
    rows = []
    for i in range(n):
        row = []
        for j in range(bmat.ncols):
            if i == c or j == c:
                row.append(-bmat[i, j])
            else:
                bik, bkj = bmat[i, c], bmat[c, j]
                sign = (bik > 0) - (bik < 0)
                row.append(bmat[i, j] + sign * max(bik * bkj, 0))
        rows.append(row)
    return IntMatrix(rows, ncols=bmat.ncols)


class Seed:
    """A labeled seed ``(cluster, coefficients, exchange matrix)``.

    ``cluster`` holds the expansions of the cluster variables in the initial variables, ``coeffs`` the
    tropical coefficients and ``path`` the reduced mutation word leading here from the initial seed.
    Two seeds are equal when cluster, coefficients, matrix and mode are equal, the path is provenance only.
    """

    __slots__ = ("cluster", "coeffs", "bmat", "mode", "path")

    def __init__(self, cluster, coeffs, bmat, mode=PRINCIPAL, path=()):
        if mode not in MODES:
            raise InvalidDescriptor(params={"reason": "unknown mode {!r}".format(mode)})
        self.cluster = tuple(cluster)
        self.coeffs = tuple(coeffs)
        self.bmat = bmat
        self.mode = mode
        self.path = tuple(path)
        n = len(self.cluster)
        if len(self.coeffs) != n or bmat.shape != (n, n):
            raise RankMismatch(params={"left": n, "right": bmat.nrows})

    @classmethod
    def initial(cls, bmat, mode=PRINCIPAL):
        """Returns the initial seed of the pattern with exchange matrix ``bmat``."""
        if not isinstance(bmat, IntMatrix):
            bmat = IntMatrix(bmat)
        find_skew_symmetrizer(bmat)
        n = bmat.nrows
        cluster = [LaurentPoly.variable(i, n) for i in range(1, n + 1)]
        if mode == PRINCIPAL:
            coeffs = [TropicalMonomial.generator(i, n) for i in range(1, n + 1)]
        else:
            coeffs = [TropicalMonomial.one(n)] * n
        return cls(cluster, coeffs, bmat, mode=mode)

    @classmethod
    def from_descriptor(cls, data):
        """Builds the initial seed from a ``{"n": int, "B": [[int]], "mode": str}`` descriptor."""
        if not isinstance(data, dict) or "B" not in data:
            raise InvalidDescriptor(params={"reason": "expected an object with a 'B' matrix"})
        try:
            bmat = IntMatrix(data["B"])
        except (TypeError, ValueError) as e:
            raise InvalidDescriptor(params={"reason": "bad matrix: {}".format(e)})
        if "n" in data and data["n"] != bmat.nrows:
            raise InvalidDescriptor(params={"reason": "n={} but B has {} rows".format(data["n"], bmat.nrows)})
        return cls.initial(bmat, mode=data.get("mode", PRINCIPAL))

    @property
    def rank(self):
        return len(self.cluster)

    def mutate(self, k):
        return mutate_seed(self, k)

    def mutate_path(self, path):
        seed = self
        for k in path:
            seed = mutate_seed(seed, k)
        return seed

    def root_bmat(self):
        """The exchange matrix of the initial seed, recovered by undoing ``path``."""
        bmat = self.bmat
        for k in reversed(self.path):
            bmat = mutate_matrix(bmat, k)
        return bmat

    def root(self):
        return Seed.initial(self.root_bmat(), mode=self.mode)

    def descriptor(self):
        return {"n": self.rank, "B": self.root_bmat().to_list(), "mode": self.mode}

    def index_of(self, variable):
        """1-based slot of ``variable`` in the cluster or ``None``."""
        for i, x in enumerate(self.cluster, 1):
            if x == variable:
                return i
        return None

    def __contains__(self, variable):
        return variable in self.cluster

    def __eq__(self, other):
        if not isinstance(other, Seed):
            return NotImplemented
        return (self.mode, self.cluster, self.coeffs, self.bmat) == (
            other.mode,
            other.cluster,
            other.coeffs,
            other.bmat,
        )

    def __hash__(self):
        return hash((self.mode, self.cluster, self.coeffs, self.bmat))

    def __repr__(self):
        return "Seed(path={}, cluster=[{}])".format(list(self.path), ", ".join(str(x) for x in self.cluster))

    def __json__(self):
        return {
            "path": list(self.path),
            "mode": self.mode,
            "cluster": [str(x) for x in self.cluster],
            "coeffs": [list(y.yexp) for y in self.coeffs],
            "B": self.bmat.to_list(),
        }


def mutate_seed(seed, k):
    """Mutation in direction ``k`` (1-based).

    The new variable satisfies ``x'_k x_k (1 ⊕ y_k) = y_k prod x_i^[b_ik]+ + prod x_i^[-b_ik]+``, the
    coefficients follow the tropical rule and the matrix is mutated with :py:func:`mutate_matrix`.
    """
    n = seed.rank
    _check_direction(k, n)
    c = k - 1
    bmat = seed.bmat
    yk = seed.coeffs[c]
    one_plus_yk = trop_oplus(TropicalMonomial.one(n), yk)

    positive = yk.as_poly()
    negative = LaurentPoly.one(n)
    for i in range(n):
        bik = bmat[i, c]
        if bik > 0:
            positive = positive * seed.cluster[i] ** bik
        elif bik < 0:
            negative = negative * seed.cluster[i] ** -bik

    cluster = list(seed.cluster)
    cluster[c] = poly_div_exact(positive + negative, seed.cluster[c] * one_plus_yk.as_poly())

    coeffs = []
    for i, yi in enumerate(seed.coeffs):
        if i == c:
            coeffs.append(yk.inverse())
        else:
            bki = bmat[c, i]
            coeffs.append(yi * yk ** max(bki, 0) * one_plus_yk ** -bki)

    result = Seed(cluster, coeffs, mutate_matrix(bmat, k), mode=seed.mode, path=reduce_word(seed.path + (k,)))
    signals.seed_mutated.send(seed, direction=k, result=result)
    return result


def seeds_equivalent(s, t):
    """Returns the 1-based permutation ``sigma`` with ``x_i = x'_sigma(i)``, ``y_i = y'_sigma(i)`` and
    ``b_ij = b'_sigma(i)sigma(j)`` or ``None`` when the seeds are not equivalent."""
    if s.rank != t.rank:
        raise RankMismatch(params={"left": s.rank, "right": t.rank})
    if s.mode != t.mode:
        return None

    slots = {x: i for i, x in enumerate(t.cluster)}
    sigma = [slots.get(x) for x in s.cluster]
    if None in sigma or len(set(sigma)) != s.rank:
        return None

    if any(s.coeffs[i] != t.coeffs[sigma[i]] for i in range(s.rank)):
        return None
    if s.bmat != t.bmat.permuted(sigma):
        return None
    return tuple(i + 1 for i in sigma)


def _serialize(seed, order):
    return "|".join(
        [
            seed.mode,
            ";".join(str(seed.cluster[i]) for i in order),
            ";".join(",".join(str(a) for a in seed.coeffs[i].yexp) for i in order),
            ";".join(",".join(str(b) for b in row) for row in seed.bmat.permuted(order).rows),
        ]
    ).encode("utf-8")


def canonical_key(seed):
    """Byte string equal for two seeds iff they are equivalent.

    Cluster entries are sorted by the canonical polynomial order and the induced permutation is applied to
    the coefficients and the matrix.
    """
    order = sorted(range(seed.rank), key=lambda i: seed.cluster[i].sort_key())
    return _serialize(seed, order)


def labeled_key(seed):
    """Byte string equal for two seeds iff they are equal as labeled seeds."""
    return _serialize(seed, list(range(seed.rank)))
