from cluster_sorcery.corpus import make_seed
from cluster_sorcery.explorer import explore
from cluster_sorcery.pytest_plugin import exploration_profiler, report_store  # noqa
from cluster_sorcery.store import VerificationRun
from cluster_sorcery.verification import verify_suite


def test_exploration_profiler(exploration_profiler):  # noqa
    explore(make_seed("B2"))

    assert exploration_profiler.counts["explorations"] == 1
    assert exploration_profiler.counts["nodes"] == 6
    assert exploration_profiler.stats["duration"] >= 0


def test_report_store(report_store):  # noqa
    run = report_store.save(verify_suite(make_seed("A2"), suite="seed"))

    assert run.failed == 0
    assert report_store.get(run.id).passed == 5

    session = report_store.session_factory()
    try:
        assert session.query(VerificationRun).count() == 1
    finally:
        session.close()
