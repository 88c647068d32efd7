"""Breadth first materialization of exchange graphs.

:py:func:`explore` walks the pattern up to seed equivalence, which gives the exchange graph.
:py:func:`restricted_explore` only mutates in a subset of directions and keeps labeled seeds apart, which is
what I-sequence questions need.
"""
import json
import logging
from collections import deque

import networkx as nx

from . import signals
from .algebra import canonical_key, labeled_key
from .conf import settings
from .exceptions import IndexOutOfRange, InfiniteType, PreconditionError, TruncatedGraph


logger = logging.getLogger(__name__)


class ExchangeGraph:
    """Seeds discovered from an initial seed together with their mutation edges.

    Node ``i`` is ``nodes[i]``, a labeled seed whose ``path`` is the first (shortest) mutation word that
    reached its class. ``edges`` holds ``(i, slot, j)`` triples with 1-based mutation slots, ``n`` per node
    unless the graph was truncated.

    Exploration stops early and marks the graph truncated when a discovered seed has a pair of explored
    directions with ``|b_ij b_ji| >= 4``, ``infinite_type`` then holds that pair and the seed's path.

    For example::

        >>> from cluster_sorcery.algebra import Seed
        >>> graph = explore(Seed.initial([[0, 1], [-1, 0]]))
        >>> len(graph), graph.truncated
        (5, False)
    """

    def __init__(self, initial, directions=None, labeled=False, limit=None):
        self.initial = initial
        self.rank = initial.rank
        self.mode = initial.mode
        self.directions = tuple(sorted(directions)) if directions is not None else tuple(range(1, self.rank + 1))
        self.labeled = labeled
        self.limit = limit
        self.truncated = False
        self.infinite_type = None
        self.nodes = []
        self.keys = {}
        self.edges = []
        self._occurrences = None

    def key_for(self, seed):
        return labeled_key(seed) if self.labeled else canonical_key(seed)

    def node_for(self, seed):
        """Index of the node ``seed`` belongs to or ``None``."""
        return self.keys.get(self.key_for(seed))

    def add(self, seed):
        index = len(self.nodes)
        self.keys[self.key_for(seed)] = index
        self.nodes.append(seed)
        self._occurrences = None
        signals.node_discovered.send(self, node=index, seed=seed)
        return index

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    @property
    def paths(self):
        return [seed.path for seed in self.nodes]

    def truncation_error(self):
        if self.infinite_type is not None:
            return InfiniteType(params=dict(self.infinite_type, limit=self.limit))
        return TruncatedGraph(params={"limit": self.limit})

    def require_complete(self):
        if self.truncated:
            raise self.truncation_error()
        return self

    def neighbors(self, index):
        """Neighbors of node ``index`` in slot order."""
        return [j for i, _, j in sorted(e for e in self.edges if e[0] == index)]

    def variable_order(self):
        """Cluster variables in depth first discovery order from the root.

        Nodes are visited in slot order and the variables of each newly visited node are taken in slot order.
        """
        adjacency = {i: [] for i in range(len(self.nodes))}
        for i, slot, j in sorted(self.edges):
            adjacency[i].append(j)

        order, seen = [], set()

        def visit(seed):
            for x in seed.cluster:
                if x not in seen:
                    seen.add(x)
                    order.append(x)

        if not self.nodes:
            return order

        visited = {0}
        visit(self.nodes[0])
        stack = [iter(adjacency[0])]
        while stack:
            for j in stack[-1]:
                if j not in visited:
                    visited.add(j)
                    visit(self.nodes[j])
                    stack.append(iter(adjacency[j]))
                    break
            else:
                stack.pop()

        for seed in self.nodes:
            visit(seed)
        return order

    def occurrences(self):
        """Maps every cluster variable to its ``(node, slot)`` occurrences in node order."""
        if self._occurrences is None:
            occurrences = {}
            for i, seed in enumerate(self.nodes):
                for slot, x in enumerate(seed.cluster, 1):
                    occurrences.setdefault(x, []).append((i, slot))
            self._occurrences = occurrences
        return self._occurrences

    def induced(self, indices):
        """Induced subgraph on the given node indices, renumbered in the given order."""
        indices = list(indices)
        renumber = {old: new for new, old in enumerate(indices)}
        graph = ExchangeGraph(self.initial, directions=self.directions, labeled=self.labeled, limit=self.limit)
        graph.truncated = self.truncated
        graph.infinite_type = self.infinite_type
        for old in indices:
            seed = self.nodes[old]
            graph.keys[self.key_for(seed)] = renumber[old]
            graph.nodes.append(seed)
        graph.edges = [(renumber[i], k, renumber[j]) for i, k, j in self.edges if i in renumber and j in renumber]
        return graph

    def to_networkx(self):
        graph = nx.Graph()
        for i, seed in enumerate(self.nodes):
            graph.add_node(i, path=seed.path, cluster=[str(x) for x in seed.cluster])
        for i, slot, j in self.edges:
            if graph.has_edge(i, j):
                graph.edges[i, j]["slots"].add((i, slot))
            else:
                graph.add_edge(i, j, slots={(i, slot)})
        return graph

    def is_connected(self):
        """Whether the graph is connected, the empty graph counting as connected."""
        if not self.nodes:
            return True
        return nx.is_connected(self.to_networkx())

    def __json__(self):
        return {
            "rank": self.rank,
            "mode": self.mode,
            "labeled": self.labeled,
            "directions": list(self.directions),
            "truncated": self.truncated,
            "infinite_type": self.infinite_type,
            "nodes": [
                {
                    "id": i,
                    "key": self.key_for(seed).decode("utf-8"),
                    "path": list(seed.path),
                    "cluster": [str(x) for x in seed.cluster],
                }
                for i, seed in enumerate(self.nodes)
            ],
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.__json__(), **kwargs)

    def to_edgelist(self):
        """One ``i slot j`` line per edge."""
        return "".join("{} {} {}\n".format(*e) for e in self.edges)

    def __repr__(self):
        return "ExchangeGraph(nodes={}, edges={}, truncated={})".format(
            len(self.nodes), len(self.edges), self.truncated
        )


def finite_type_obstruction(seed, directions):
    """First pair ``i < j`` of ``directions`` with ``|b_ij b_ji| >= 4`` at ``seed``, or ``None``.

    Finite type needs every matrix of the mutation class to be 2-finite, so one such pair proves the pattern
    mutated in ``directions`` is infinite.
    """
    bmat = seed.bmat
    for a, i in enumerate(directions):
        for j in directions[a + 1 :]:
            product = abs(bmat[i - 1, j - 1] * bmat[j - 1, i - 1])
            if product >= 4:
                return {"i": i, "j": j, "product": product, "path": list(seed.path)}
    return None


def _bfs(initial, directions, labeled, limit):
    limit = settings.node_limit if limit is None else limit
    if limit < 1:
        raise PreconditionError(params={"reason": "node limit must be at least 1, got {}".format(limit)})
    for k in directions:
        if not isinstance(k, int) or not 1 <= k <= initial.rank:
            raise IndexOutOfRange(params={"index": k, "rank": initial.rank})

    signals.exploration_started.send(initial, directions=directions, labeled=labeled)
    graph = ExchangeGraph(initial, directions=directions, labeled=labeled, limit=limit)
    queue = deque([graph.add(initial)])
    graph.infinite_type = finite_type_obstruction(initial, graph.directions)
    while queue and graph.infinite_type is None:
        i = queue.popleft()
        seed = graph.nodes[i]
        for k in graph.directions:
            mutated = seed.mutate(k)
            j = graph.node_for(mutated)
            if j is None:
                if len(graph) >= limit:
                    graph.truncated = True
                    continue
                j = graph.add(mutated)
                queue.append(j)
                graph.infinite_type = finite_type_obstruction(mutated, graph.directions)
            graph.edges.append((i, k, j))
            if graph.infinite_type is not None:
                break

    if graph.infinite_type is not None:
        graph.truncated = True
        logger.info("exploration stopped: %s", graph.truncation_error())

    logger.info(
        "explored nodes=%s edges=%s labeled=%s directions=%s truncated=%s",
        len(graph),
        len(graph.edges),
        labeled,
        ",".join(str(k) for k in graph.directions),
        graph.truncated,
    )
    signals.exploration_finished.send(graph)
    return graph


def explore(initial, limit=None, directions=None):
    """Exchange graph of ``initial``'s pattern up to seed equivalence, at most ``limit`` nodes."""
    directions = range(1, initial.rank + 1) if directions is None else directions
    return _bfs(initial, tuple(sorted(set(directions))), labeled=False, limit=limit)


def restricted_explore(initial, subset, limit=None):
    """Labeled seeds reachable from ``initial`` by mutations in ``subset`` only."""
    return _bfs(initial, tuple(sorted(set(subset))), labeled=True, limit=limit)


def cluster_variables(graph):
    """All cluster variables of a complete graph in depth first discovery order."""
    return tuple(graph.require_complete().variable_order())


def seeds_containing(graph, variables):
    """Induced subgraph of the nodes whose cluster contains every one of ``variables``."""
    graph.require_complete()
    variables = list(variables)
    return graph.induced(i for i, seed in enumerate(graph.nodes) if all(x in seed.cluster for x in variables))
