import json

from cluster_sorcery import signals
from cluster_sorcery.algebra import TRIVIAL, Seed
from cluster_sorcery.conf import settings
from cluster_sorcery.exceptions import IndexOutOfRange, InfiniteType, PreconditionError, TruncatedGraph
from cluster_sorcery.explorer import ExchangeGraph, cluster_variables, explore, restricted_explore, seeds_containing
from cluster_sorcery.profiler import ExplorationProfiler

from .base import TestCase, mock


class TestExplore(TestCase):
    def test_pentagon(self):
        graph = explore(self.seed("A2"))
        self.assertEqual(len(graph), 5)
        self.assertFalse(graph.truncated)
        self.assertEqual(len(graph.edges), 10)
        self.assertEqual(graph.paths, [(), (1,), (2,), (1, 2), (2, 1)])
        self.assertTrue(nx_is_cycle(graph))

    def test_pentagon_variables(self):
        graph = explore(self.seed("A2", mode=TRIVIAL))
        self.assertEqual(
            cluster_variables(graph),
            (
                self.x(1),
                self.x(2),
                self.poly("x1^-1 * x2 + x1^-1"),
                self.poly("x1^-1 + x2^-1 + x1^-1 * x2^-1"),
                self.poly("x1 * x2^-1 + x2^-1"),
            ),
        )

    def test_finite_type_sizes(self):
        for name, nodes, variables in (("A3", 14, 9), ("A3-alternating", 14, 9), ("B2", 6, 6), ("G2", 8, 8)):
            with self.subTest(name=name):
                graph = explore(self.seed(name))
                self.assertEqual(len(graph), nodes)
                self.assertEqual(len(cluster_variables(graph)), variables)
                self.assertTrue(graph.is_connected())

    def test_truncation(self):
        with settings.override(node_limit=3):
            graph = explore(self.seed("A3"))
        self.assertTrue(graph.truncated)
        self.assertIsNone(graph.infinite_type)
        with self.assertRaises(TruncatedGraph) as ctx:
            cluster_variables(graph)
        self.assertNotIsInstance(ctx.exception, InfiniteType)
        with self.assertRaises(TruncatedGraph):
            graph.require_complete()

    def test_infinite_type_stops_at_once(self):
        for limit in (10, 100, None):
            with self.subTest(limit=limit), ExplorationProfiler() as profiler:
                graph = explore(self.seed("A1-affine"), limit=limit)
                self.assertTrue(graph.truncated)
                self.assertEqual(len(graph), 1)
                self.assertEqual(graph.edges, [])
                self.assertEqual(graph.infinite_type, {"i": 1, "j": 2, "product": 4, "path": []})
                self.assertEqual(profiler.counts["mutations"], 0)

        with self.assertRaises(InfiniteType) as ctx:
            cluster_variables(graph)
        self.assertEqual(ctx.exception.params["limit"], settings.node_limit)

    def test_infinite_type_found_after_mutations(self):
        # acyclic affine A2, mutating at 2 doubles the arrow 1 -> 3
        seed = Seed.initial([[0, 1, 1], [-1, 0, 1], [-1, -1, 0]])
        with ExplorationProfiler() as profiler:
            graph = explore(seed)
        self.assertTrue(graph.truncated)
        self.assertEqual(graph.infinite_type, {"i": 1, "j": 3, "product": 4, "path": [2]})
        self.assertEqual(graph.paths, [(), (1,), (2,)])
        self.assertEqual(graph.edges, [(0, 1, 1), (0, 2, 2)])
        self.assertEqual(profiler.counts["mutations"], 2)

    def test_infinite_type_only_looks_at_explored_directions(self):
        seed = Seed.initial([[0, 1, 1], [-1, 0, 1], [-1, -1, 0]])
        graph = explore(seed, directions=[1, 3])
        self.assertFalse(graph.truncated)
        self.assertIsNone(graph.infinite_type)

    def test_default_limit_comes_from_settings(self):
        with settings.override(node_limit=3):
            graph = explore(self.seed("A2"))
        self.assertEqual(len(graph), 3)
        self.assertTrue(graph.truncated)

    def test_bad_limit(self):
        with self.assertRaises(PreconditionError):
            explore(self.seed("A2"), limit=0)

    def test_bad_directions(self):
        with self.assertRaises(IndexOutOfRange):
            explore(self.seed("A2"), directions=[3])

    def test_neighbors(self):
        graph = explore(self.seed("A2"))
        self.assertEqual(graph.neighbors(0), [1, 2])
        self.assertEqual(graph.neighbors(1), [0, 3])

    def test_node_for(self):
        seed = self.seed("A2")
        graph = explore(seed)
        self.assertEqual(graph.node_for(seed.mutate_path([1, 2, 1, 2, 1])), 0)
        self.assertEqual(graph.node_for(seed.mutate_path([2, 1, 2])), graph.node_for(seed.mutate_path([1, 2])))
        self.assertIsNone(graph.node_for(self.seed("A2", mode=TRIVIAL)))

    def test_occurrences(self):
        graph = explore(self.seed("A2"))
        self.assertEqual(graph.occurrences()[self.x(1)], [(0, 1), (2, 1)])

    def test_signals(self):
        started, discovered, finished = mock.MagicMock(), mock.MagicMock(), mock.MagicMock()
        signals.exploration_started.connect(started, weak=False)
        signals.node_discovered.connect(discovered, weak=False)
        signals.exploration_finished.connect(finished, weak=False)
        try:
            graph = explore(self.seed("A2"))
        finally:
            signals.exploration_started.disconnect(started)
            signals.node_discovered.disconnect(discovered)
            signals.exploration_finished.disconnect(finished)

        self.assertEqual(started.call_count, 1)
        self.assertEqual(discovered.call_count, 5)
        finished.assert_called_once_with(graph)


class TestRestrictedExplore(TestCase):
    def test_single_direction(self):
        graph = restricted_explore(self.seed("A2"), [1])
        self.assertTrue(graph.labeled)
        self.assertEqual(graph.paths, [(), (1,)])

    def test_labeled_seeds_are_kept_apart(self):
        graph = restricted_explore(self.seed("A2"), [1, 2])
        self.assertEqual(len(graph), 10)
        self.assertEqual(len(explore(self.seed("A2"))), 5)

    def test_a3_subset(self):
        self.assertEqual(len(restricted_explore(self.seed("A3"), [1, 2])), 10)
        self.assertEqual(len(restricted_explore(self.seed("A3"), [1, 3])), 4)


class TestExchangeGraph(TestCase):
    def test_json(self):
        graph = explore(self.seed("A2", mode=TRIVIAL))
        data = json.loads(graph.to_json())
        self.assertEqual(
            sorted(data),
            ["directions", "edges", "infinite_type", "labeled", "mode", "nodes", "rank", "truncated"],
        )
        self.assertIsNone(data["infinite_type"])
        self.assertEqual(len(data["nodes"]), 5)
        self.assertEqual(data["nodes"][1]["path"], [1])
        self.assertEqual(data["nodes"][1]["cluster"], ["x1^-1 * x2 + x1^-1", "x2"])
        self.assertEqual(data["edges"][0], [0, 1, 1])

    def test_edgelist(self):
        graph = explore(self.seed("A2"))
        lines = graph.to_edgelist().splitlines()
        self.assertEqual(len(lines), 10)
        self.assertEqual(lines[:2], ["0 1 1", "0 2 2"])

    def test_networkx(self):
        graph = explore(self.seed("B2")).to_networkx()
        self.assertEqual(graph.number_of_nodes(), 6)
        self.assertEqual(graph.number_of_edges(), 6)
        self.assertEqual(graph.nodes[1]["path"], (1,))

    def test_induced(self):
        graph = explore(self.seed("A2"))
        sub = graph.induced([3, 1])
        self.assertEqual(sub.paths, [(1, 2), (1,)])
        self.assertEqual(sub.edges, [(1, 2, 0), (0, 2, 1)])
        self.assertTrue(sub.is_connected())
        self.assertEqual(sub.node_for(graph.nodes[1]), 1)

    def test_seeds_containing(self):
        seed = self.seed("A2")
        graph = explore(seed)
        self.assertEqual(seeds_containing(graph, [self.x(1)]).paths, [(), (2,)])
        self.assertEqual(len(seeds_containing(graph, seed.cluster)), 1)
        self.assertEqual(len(seeds_containing(graph, [])), 5)

    def test_seeds_containing_incompatible_variables(self):
        graph = explore(self.seed("A2"))
        x1, _, _, x4, _ = cluster_variables(graph)
        sub = seeds_containing(graph, [x1, x4])
        self.assertEqual(len(sub), 0)
        self.assertEqual(sub.edges, [])
        self.assertTrue(sub.is_connected())

    def test_empty_graph_is_connected(self):
        graph = ExchangeGraph(Seed.initial([[0, 1], [-1, 0]]))
        self.assertTrue(graph.is_connected())
        self.assertEqual(graph.variable_order(), [])

    def test_repr(self):
        self.assertEqual(repr(explore(self.seed("A2"))), "ExchangeGraph(nodes=5, edges=10, truncated=False)")


def nx_is_cycle(graph):
    g = graph.to_networkx()
    return all(degree == 2 for _, degree in g.degree()) and g.number_of_edges() == len(graph)
