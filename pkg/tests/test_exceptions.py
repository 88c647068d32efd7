from cluster_sorcery.exceptions import (
    ClusterSorceryError,
    InfiniteType,
    NestedViolation,
    NonUnimodular,
    TheoremViolation,
    TruncatedGraph,
)

from .base import TestCase


class TestClusterSorceryError(TestCase):
    def test_params_are_interpolated(self):
        error = NonUnimodular(params={"det": 2})
        self.assertEqual(str(error), "Matrix is not unimodular, determinant is 2")
        self.assertEqual(error.as_dict(), {"code": "non_unimodular", "message": str(error), "params": {"det": 2}})

    def test_missing_params_keep_message(self):
        self.assertEqual(str(ClusterSorceryError("%(missing)s", params={"other": 1})), "%(missing)s")

    def test_exit_status(self):
        self.assertEqual(ClusterSorceryError().exit_status, 1)
        self.assertEqual(NonUnimodular().exit_status, 2)
        self.assertEqual(TruncatedGraph(params={"limit": 3}).exit_status, 3)

    def test_infinite_type_is_a_truncation(self):
        error = InfiniteType(params={"i": 1, "j": 2, "product": 4, "path": [1], "limit": 100})
        self.assertIsInstance(error, TruncatedGraph)
        self.assertEqual(error.exit_status, 3)
        self.assertEqual(str(error), "Pattern is not of finite type: |b_12 * b_21| = 4 at path [1]")

    def test_params_are_jsonable(self):
        error = TheoremViolation("boom", params={"path": (1, 2)})
        self.assertEqual(error.as_dict()["params"], {"path": [1, 2]})

    def test_repr(self):
        self.assertEqual(repr(TheoremViolation("boom")), "TheoremViolation('boom', code='theorem_violation')")


class TestNestedViolation(TestCase):
    def test_string(self):
        error = NestedViolation("error")
        self.assertEqual(error.messages, ["error"])

        error = NestedViolation("error %(here)s", params={"here": "here"})
        self.assertEqual(error.messages, ["error here"])

    def test_list(self):
        error = NestedViolation(["error", NonUnimodular(params={"det": 0})])
        self.assertEqual(error.messages, ["error", "Matrix is not unimodular, determinant is 0"])
        self.assertEqual([e["code"] for e in error], ["theorem_violation", "non_unimodular"])

    def test_dict(self):
        error = NestedViolation({"unimodularity": ["det 2"], "trichotomy": ["d 3", "d 4"]})
        self.assertEqual(error.messages, {"unimodularity": ["det 2"], "trichotomy": ["d 3", "d 4"]})
        self.assertEqual(str(error), "unimodularity: det 2; trichotomy: d 3, d 4")
        self.assertEqual(dict(error)["unimodularity"][0]["message"], "det 2")

    def test_nested(self):
        error = NestedViolation(NestedViolation({"some": ["error"]}))
        self.assertEqual(error.messages, {"some": ["error"]})

        error = NestedViolation([NestedViolation(["a", "b"]), "c"])
        self.assertEqual(error.messages, ["a", "b", "c"])

    def test_is_a_theorem_violation(self):
        error = NestedViolation({"some": ["error"]})
        self.assertIsInstance(error, TheoremViolation)
        self.assertEqual(error.exit_status, 2)

    def test_repr(self):
        self.assertTrue(repr(NestedViolation("error")).startswith("NestedViolation"))
