import unittest

from cluster_sorcery.algebra import IntMatrix, LaurentPoly, Seed, parse_poly
from cluster_sorcery.corpus import matrix


try:
    from unittest import mock  # noqa
except ImportError:
    import mock  # noqa


class TestCase(unittest.TestCase):
    def setUp(self):
        super().setUp()
        self.maxDiff = None

    def seed(self, name="A2", mode="principal"):
        return Seed.initial(IntMatrix(matrix(name)), mode=mode)

    def poly(self, text, rank=2):
        return parse_poly(text, rank)

    def x(self, index, rank=2):
        return LaurentPoly.variable(index, rank)
