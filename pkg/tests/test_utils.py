from cluster_sorcery import utils
from cluster_sorcery.algebra import IntMatrix

from .base import TestCase


class TestUtils(TestCase):
    def test_jsonable(self):
        value = utils.jsonable({1: (IntMatrix([[1]]), {3, 2}), "x": self.x(1), "none": None})
        self.assertEqual(value, {"1": [[[1]], [2, 3]], "x": "x1", "none": None})
        self.assertEqual(utils.jsonable(object).__class__, str)

    def test_parse_indices(self):
        self.assertEqual(utils.parse_indices("1, 2,3"), (1, 2, 3))
        self.assertEqual(utils.parse_indices(""), ())
        self.assertEqual(utils.parse_indices(None), ())
        with self.assertRaises(ValueError):
            utils.parse_indices("1,a")

    def test_reduce_word(self):
        self.assertEqual(utils.reduce_word((1, 2, 2, 1, 3)), (3,))
        self.assertEqual(utils.reduce_word(()), ())
        self.assertEqual(utils.reduce_word((1, 2, 1)), (1, 2, 1))

    def test_monomial_vectors(self):
        self.assertEqual(list(utils.monomial_vectors(2, 2)), [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)])
        self.assertEqual(len(list(utils.monomial_vectors(3, 3))), 20)
        self.assertEqual(list(utils.monomial_vectors(1, 0)), [(0,)])
