import json

from cluster_sorcery.verification import FAILED, PASSED, SKIPPED, PropertyResult, VerificationReport

from ..base import TestCase


class TestVerificationReport(TestCase):
    def setUp(self):
        super().setUp()
        self.report = VerificationReport(
            {"B": [[0, 1], [-1, 0]], "mode": "principal"},
            [
                PropertyResult("a", PASSED, "first", [], 0.5),
                PropertyResult("b", PASSED, "second", [], 0.25),
                PropertyResult("c", FAILED, "third", [{"path": (1, 2)}], 0.125),
            ],
            started="2020-01-01T00:00:00",
            duration=0.875,
        )

    def test_counts(self):
        self.assertEqual(self.report.count(PASSED), 2)
        self.assertFalse(self.report.passed)
        self.assertEqual([r.name for r in self.report.failures], ["c"])

    def test_sentence(self):
        self.assertEqual(self.report.sentence(), "2 properties passed, 1 property failed and 0 properties were skipped")
        report = VerificationReport({}, [PropertyResult("a", SKIPPED, "", [], 0)])
        self.assertEqual(report.sentence(), "0 properties passed, 0 properties failed and 1 property was skipped")
        self.assertTrue(report.passed)

    def test_as_dict(self):
        data = self.report.as_dict()
        self.assertEqual(data["schema_version"], 1)
        self.assertEqual(data["timing"], {"started": "2020-01-01T00:00:00", "duration": 0.875})
        self.assertEqual(data["results"][2]["counterexamples"], [{"path": [1, 2]}])
        self.assertEqual(data["summary"]["failed"], 1)

    def test_without_timing(self):
        data = self.report.as_dict(include_timing=False)
        self.assertNotIn("timing", data)
        self.assertNotIn("duration", data["results"][0])

    def test_to_json(self):
        self.assertEqual(json.loads(self.report.to_json()), self.report.as_dict())
        self.assertIn('\n  "schema_version"', self.report.to_json())

    def test_repr(self):
        self.assertTrue(repr(self.report).startswith("VerificationReport(2 properties passed"))
