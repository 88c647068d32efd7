import doctest

from cluster_sorcery import signals
from cluster_sorcery import store as store_module
from cluster_sorcery.conf import settings
from cluster_sorcery.store import ReportStore, make_store
from cluster_sorcery.verification import FAILED, PASSED, SKIPPED, PropertyResult, VerificationReport

from .base import TestCase, mock


def make_report():
    instance = {"B": [[0, 1], [-1, 0]], "rank": 2, "mode": "principal", "node_limit": 100, "degree_bound": 2}
    return VerificationReport(
        instance,
        [
            PropertyResult("witness-paths", PASSED, "replay", [], 0.1),
            PropertyResult("gmatrix-unimodularity", FAILED, "det", [{"path": [1], "det": 2}], 0.2),
            PropertyResult("connectedness", SKIPPED, "truncated", [], 0.0),
        ],
        started="2020-01-01T00:00:00",
        duration=0.3,
    )


class TestReportStore(TestCase):
    def setUp(self):
        super().setUp()
        self.store = ReportStore("sqlite://")
        self.store.create_all()

    def tearDown(self):
        self.store.drop_all()
        self.store.engine.dispose()
        super().tearDown()

    def test_save_and_get(self):
        run = self.store.save(make_report())
        self.assertIsNotNone(run.id)

        stored = self.store.get(run.id)
        self.assertEqual((stored.passed, stored.failed, stored.skipped), (1, 1, 1))
        self.assertEqual(stored.matrix, [[0, 1], [-1, 0]])
        self.assertEqual(stored.mode, "principal")
        self.assertEqual([r.name for r in stored.results], ["witness-paths", "gmatrix-unimodularity", "connectedness"])
        self.assertEqual(stored.results[1].counterexamples, [{"path": [1], "det": 2}])
        self.assertEqual(stored.report["summary"]["failed"], 1)
        self.assertEqual(repr(stored), "<VerificationRun id={} mode=principal failed=1>".format(run.id))

    def test_runs_newest_first(self):
        first = self.store.save(make_report())
        second = self.store.save(make_report())
        self.assertEqual([r.id for r in self.store.runs()], [second.id, first.id])
        self.assertIsNone(self.store.get(second.id + 1))

    def test_json(self):
        run = self.store.get(self.store.save(make_report()).id)
        data = run.__json__()
        self.assertEqual(data["B"], [[0, 1], [-1, 0]])
        self.assertEqual(data["schema_version"], 1)
        self.assertEqual((data["passed"], data["failed"], data["skipped"]), (1, 1, 1))
        self.assertIsNotNone(data["created"])

    def test_signals(self):
        receiver = mock.MagicMock()
        signals.report_stored.connect(receiver, weak=False)
        try:
            run = self.store.save(make_report())
        finally:
            signals.report_stored.disconnect(receiver)
        receiver.assert_called_once_with(self.store, run=run)


class TestMakeStore(TestCase):
    def test_without_url(self):
        with settings.override(store_url=None):
            self.assertIsNone(make_store())

    def test_from_settings(self):
        with settings.override(store_url="sqlite://"):
            store = make_store()
        self.assertIsInstance(store, ReportStore)
        self.assertEqual(store.runs(), [])
        store.engine.dispose()

    def test_docstring_example(self):
        result = doctest.testmod(store_module)
        self.assertEqual(result.failed, 0)
        self.assertGreater(result.attempted, 0)
