from cluster_sorcery.algebra import IntMatrix
from cluster_sorcery.compat import (
    compatibility_degree,
    compatibility_graph,
    complete_to_cluster,
    degree_matrix,
    degree_report,
    is_compatible_set,
    maximal_compatible_sets,
)
from cluster_sorcery.exceptions import PreconditionError, TruncatedGraph, UnknownVariable
from cluster_sorcery.explorer import cluster_variables, explore

from .base import TestCase


class TestCompatibilityDegree(TestCase):
    def setUp(self):
        super().setUp()
        self.graph = explore(self.seed("A2"))
        self.x1, self.x2, self.x3, self.x4, self.x5 = cluster_variables(self.graph)

    def test_degrees(self):
        self.assertEqual(compatibility_degree(self.graph, self.x1, self.x1), -1)
        self.assertEqual(compatibility_degree(self.graph, self.x1, self.x2), 0)
        self.assertEqual(compatibility_degree(self.graph, self.x1, self.x3), 1)
        self.assertEqual(compatibility_degree(self.graph, self.x3, self.x5), 1)

    def test_degree_matrix(self):
        self.assertEqual(
            degree_matrix(self.graph),
            IntMatrix(
                [
                    [-1, 0, 1, 1, 0],
                    [0, -1, 0, 1, 1],
                    [1, 0, -1, 0, 1],
                    [1, 1, 0, -1, 0],
                    [0, 1, 1, 0, -1],
                ]
            ),
        )

    def test_report(self):
        report = degree_report(self.graph, self.x1, self.x4, audit=True)
        self.assertEqual(report.degree, 1)
        self.assertEqual(report.witness, ())
        self.assertFalse(report.compatible)
        self.assertEqual(
            report.__json__(),
            {"a": str(self.x1), "b": str(self.x4), "degree": 1, "witness": [], "audited": True},
        )

    def test_unknown_variable(self):
        with self.assertRaises(UnknownVariable):
            compatibility_degree(self.graph, self.x1, self.x(1) + self.x(2))

    def test_truncated_graph(self):
        graph = explore(self.seed("A1-affine"), limit=4)
        with self.assertRaises(TruncatedGraph):
            compatibility_degree(graph, self.x(1), self.x(2))

    def test_compatibility_is_symmetric(self):
        for name in ("B2", "G2", "A3"):
            with self.subTest(name=name):
                degrees = degree_matrix(explore(self.seed(name)))
                size = degrees.shape[0]
                for i in range(size):
                    self.assertEqual(degrees[i, i], -1)
                    for j in range(size):
                        self.assertEqual(degrees[i, j] <= 0, degrees[j, i] <= 0)


class TestCompatibleSets(TestCase):
    def setUp(self):
        super().setUp()
        self.graph = explore(self.seed("A2"))
        self.variables = cluster_variables(self.graph)

    def test_is_compatible_set(self):
        x1, x2, x3, _, x5 = self.variables
        self.assertTrue(is_compatible_set(self.graph, []))
        self.assertTrue(is_compatible_set(self.graph, [x1, x5]))
        self.assertFalse(is_compatible_set(self.graph, [x1, x2, x3]))

    def test_complete_to_cluster(self):
        x3 = self.variables[2]
        self.assertEqual(complete_to_cluster(self.graph, [x3]).path, (1,))
        self.assertEqual(complete_to_cluster(self.graph, []).path, ())
        with self.assertRaises(PreconditionError):
            complete_to_cluster(self.graph, [self.variables[0], x3])

    def test_compatibility_graph(self):
        compatible = compatibility_graph(self.graph)
        self.assertEqual(sorted(compatible.edges()), [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)])

    def test_maximal_sets_are_clusters(self):
        for name in ("A2", "B2", "A3"):
            with self.subTest(name=name):
                graph = explore(self.seed(name))
                sets = {frozenset(s) for s in maximal_compatible_sets(graph)}
                clusters = {frozenset(seed.cluster) for seed in graph}
                self.assertEqual(sets, clusters)
