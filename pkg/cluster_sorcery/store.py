"""Persistence of verification reports with SQLAlchemy.

For example::

    >>> from cluster_sorcery.corpus import make_seed
    >>> from cluster_sorcery.verification import verify_suite
    >>> report = verify_suite(make_seed("A2"), suite="seed")
    >>> store = make_store("sqlite://")
    >>> run = store.save(report)
    >>> store.get(run.id).failed
    0
"""
import datetime
import logging

import sqlalchemy as sa
import sqlalchemy.orm  # noqa

from . import signals
from .conf import settings


logger = logging.getLogger(__name__)

Base = sa.orm.declarative_base()


class VerificationRun(Base):
    """One verification report."""

    __tablename__ = "verification_run"

    id = sa.Column(sa.Integer(), primary_key=True)
    schema_version = sa.Column(sa.Integer(), nullable=False)
    created = sa.Column(sa.DateTime(), nullable=False, default=datetime.datetime.utcnow)
    matrix = sa.Column(sa.JSON(), nullable=False)
    mode = sa.Column(sa.String(length=16), nullable=False)
    node_limit = sa.Column(sa.Integer(), nullable=False)
    degree_bound = sa.Column(sa.Integer(), nullable=False)
    passed = sa.Column(sa.Integer(), nullable=False, default=0)
    failed = sa.Column(sa.Integer(), nullable=False, default=0)
    skipped = sa.Column(sa.Integer(), nullable=False, default=0)
    report = sa.Column(sa.JSON(), nullable=False)

    results = sa.orm.relationship(
        "PropertyOutcome", back_populates="run", cascade="all, delete-orphan", order_by="PropertyOutcome.id"
    )

    def __json__(self):
        return {
            "id": self.id,
            "schema_version": self.schema_version,
            "created": self.created.isoformat() if self.created else None,
            "B": self.matrix,
            "mode": self.mode,
            "node_limit": self.node_limit,
            "degree_bound": self.degree_bound,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
        }

    def __repr__(self):
        return "<VerificationRun id={} mode={} failed={}>".format(self.id, self.mode, self.failed)


class PropertyOutcome(Base):
    """Outcome of one property within a run."""

    __tablename__ = "property_outcome"

    id = sa.Column(sa.Integer(), primary_key=True)
    run_id = sa.Column(sa.Integer(), sa.ForeignKey(VerificationRun.id, name="FK_outcome_run"), nullable=False)
    name = sa.Column(sa.String(length=64), nullable=False)
    status = sa.Column(sa.String(length=16), nullable=False)
    detail = sa.Column(sa.Text())
    counterexamples = sa.Column(sa.JSON())

    run = sa.orm.relationship(VerificationRun, back_populates="results")

    def __repr__(self):
        return "<PropertyOutcome {}={}>".format(self.name, self.status)


class ReportStore:
    """Thin wrapper around an engine and a session factory for verification reports."""

    logger = logger

    def __init__(self, url, **engine_options):
        self.url = url
        self.engine = sa.create_engine(url, **engine_options)
        signals.engine_created.send(self.engine, url=url)
        self.session_factory = sa.orm.sessionmaker(bind=self.engine, expire_on_commit=False)

    def create_all(self):
        Base.metadata.create_all(bind=self.engine)

    def drop_all(self):
        Base.metadata.drop_all(bind=self.engine)

    def save(self, report):
        """Persists a :py:class:`~cluster_sorcery.verification.report.VerificationReport`."""
        data = report.as_dict(include_timing=True)
        summary = data["summary"]
        run = VerificationRun(
            schema_version=data["schema_version"],
            matrix=data["instance"]["B"],
            mode=data["instance"]["mode"],
            node_limit=data["instance"]["node_limit"],
            degree_bound=data["instance"]["degree_bound"],
            passed=summary["passed"],
            failed=summary["failed"],
            skipped=summary["skipped"],
            report=data,
        )
        for result in data["results"]:
            run.results.append(
                PropertyOutcome(
                    name=result["name"],
                    status=result["status"],
                    detail=result["detail"],
                    counterexamples=result["counterexamples"],
                )
            )

        session = self.session_factory()
        try:
            session.add(run)
            session.commit()
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()

        self.logger.info("stored run id=%s failed=%s url=%s", run.id, run.failed, self.engine.url)
        signals.report_stored.send(self, run=run)
        return run

    def runs(self):
        """Stored runs, newest first."""
        session = self.session_factory()
        try:
            return session.query(VerificationRun).order_by(VerificationRun.id.desc()).all()
        finally:
            session.close()

    def get(self, run_id):
        session = self.session_factory()
        try:
            return (
                session.query(VerificationRun)
                .options(sa.orm.selectinload(VerificationRun.results))
                .filter(VerificationRun.id == run_id)
                .one_or_none()
            )
        finally:
            session.close()


def make_store(url=None):
    """Returns a ready to use store for ``url`` or ``settings.store_url``, ``None`` when neither is set."""
    url = url or settings.store_url
    if not url:
        return None
    store = ReportStore(url)
    store.create_all()
    return store
