"""Compatibility degrees and compatible sets of cluster variables.

The degree ``d(a, b)`` is entry ``j`` of the d-vector of ``b`` with respect to a cluster holding ``a`` in
slot ``j``. It is ``-1`` exactly for ``a == b``, ``0`` for distinct variables sharing a cluster and
positive otherwise. Degrees are computed coefficient free, re-expanding inside the explored graph.
"""
import itertools
import logging
from collections import namedtuple

import networkx as nx

from .algebra import IntMatrix
from .exceptions import NotFound, PreconditionError, TheoremViolation, UnknownVariable
from .explorer import cluster_variables
from .invariants import dvector_direct, reexpand


logger = logging.getLogger(__name__)


class DegreeReport(namedtuple("DegreeReport", ["a", "b", "degree", "witness", "audited"])):
    """Compatibility degree of ``(a, b)`` with the path of the witness cluster used for it."""

    __slots__ = ()

    @property
    def compatible(self):
        return self.degree <= 0

    def __json__(self):
        return {
            "a": str(self.a),
            "b": str(self.b),
            "degree": self.degree,
            "witness": list(self.witness),
            "audited": self.audited,
        }


def _occurrences(graph, x):
    occurrences = graph.occurrences().get(x)
    if not occurrences:
        raise UnknownVariable(params={"variable": str(x)})
    return occurrences


def _degree_at(graph, anchor, slot, target, index):
    expansion = reexpand(graph.nodes[anchor], graph.nodes[target]).cluster[index - 1]
    return dvector_direct(expansion)[slot - 1]


def degree_report(graph, a, b, audit=False):
    """Computes ``d(a, b)`` through the first cluster holding ``a``.

    With ``audit`` the degree is recomputed through every cluster holding ``a`` and any disagreement is
    reported as a theorem violation.
    """
    graph.require_complete()
    witnesses = _occurrences(graph, a)
    target, index = _occurrences(graph, b)[0]

    anchor, slot = witnesses[0]
    degree = _degree_at(graph, anchor, slot, target, index)
    if audit:
        for other, other_slot in witnesses[1:]:
            value = _degree_at(graph, other, other_slot, target, index)
            if value != degree:
                raise TheoremViolation(
                    "Compatibility degree of %(a)s and %(b)s depends on the cluster: %(values)s",
                    params={
                        "a": str(a),
                        "b": str(b),
                        "values": [degree, value],
                        "paths": [list(graph.nodes[anchor].path), list(graph.nodes[other].path)],
                    },
                )
    return DegreeReport(a, b, degree, graph.nodes[anchor].path, audit)


def compatibility_degree(graph, a, b, audit=False):
    return degree_report(graph, a, b, audit=audit).degree


def is_compatible_set(graph, variables):
    """Whether all pairs of ``variables`` have nonpositive degree."""
    variables = list(variables)
    for x in variables:
        _occurrences(graph.require_complete(), x)
    return all(compatibility_degree(graph, a, b) <= 0 for a, b in itertools.combinations(variables, 2))


def complete_to_cluster(graph, variables):
    """First node (in discovery order) whose cluster contains the compatible set ``variables``."""
    variables = list(variables)
    if not is_compatible_set(graph, variables):
        raise PreconditionError(params={"reason": "variables are not pairwise compatible"})
    for seed in graph.nodes:
        if all(x in seed.cluster for x in variables):
            return seed
    raise NotFound(params={"what": "cluster", "where": [str(x) for x in variables]})


def degree_matrix(graph, order=None):
    """Table of ``d(a, b)`` over all cluster variables, rows indexed by ``a``."""
    order = cluster_variables(graph) if order is None else tuple(order)
    rows = [[compatibility_degree(graph, a, b) for b in order] for a in order]
    logger.info("degree matrix variables=%s", len(order))
    return IntMatrix(rows, ncols=len(order))


def compatibility_graph(graph, order=None):
    """networkx graph on variable positions with an edge for each compatible pair."""
    order = cluster_variables(graph) if order is None else tuple(order)
    degrees = degree_matrix(graph, order)
    compatible = nx.Graph()
    compatible.add_nodes_from(range(len(order)))
    for i, j in itertools.combinations(range(len(order)), 2):
        if degrees[i, j] <= 0 and degrees[j, i] <= 0:
            compatible.add_edge(i, j)
    return compatible


def maximal_compatible_sets(graph):
    """All inclusion maximal compatible sets, each as a tuple in variable order."""
    order = cluster_variables(graph)
    cliques = sorted(tuple(sorted(clique)) for clique in nx.find_cliques(compatibility_graph(graph, order)))
    return [tuple(order[i] for i in clique) for clique in cliques]
