"""Property runner."""
import datetime
import itertools
import logging
import time

from .. import signals
from ..exceptions import ClusterSorceryError, NestedViolation, TheoremViolation, TruncatedGraph
from .report import FAILED, PASSED, SKIPPED, PropertyResult, VerificationReport


logger = logging.getLogger(__name__)


class PropertyRunner:
    """Helper class that executes a bunch of properties on a verification context and collects violations."""

    logger = logger

    def __init__(self, properties=None, max_counterexamples=5, errors=None):
        self.properties = list(properties or [])
        self.max_counterexamples = max_counterexamples
        self.errors = errors or {}

    def check(self, prop, context):
        """Runs one property and returns its :py:class:`PropertyResult`."""
        start = time.time()
        if prop.requires_complete and context.truncated:
            status, detail, counterexamples = SKIPPED, "exchange graph truncated at {} nodes".format(context.limit), []
        else:
            try:
                counterexamples = list(itertools.islice(prop.check(context), self.max_counterexamples))
            except TruncatedGraph as e:
                status, detail, counterexamples = SKIPPED, str(e), []
            except ClusterSorceryError as e:
                status, detail, counterexamples = FAILED, str(e), [e.as_dict()]
            else:
                if counterexamples:
                    status, detail = FAILED, prop.description
                else:
                    status, detail = PASSED, prop.description

        result = PropertyResult(prop.name, status, detail, counterexamples, round(time.time() - start, 6))
        self.logger.info("property name=%s status=%s duration=%s", result.name, result.status, result.duration)
        signals.property_checked.send(self, result=result)

        if status == FAILED:
            self.errors.setdefault(prop.name, []).extend(
                TheoremViolation(detail, code=prop.name, params=c if isinstance(c, dict) else {"value": c})
                for c in counterexamples
            )
        return result

    def run(self, context, raise_exception=False):
        """Runs all properties and returns the report, optionally raising every violation at once."""
        started = datetime.datetime.utcnow().isoformat()
        start = time.time()
        results = [self.check(prop, context) for prop in self.properties]
        duration = round(time.time() - start, 6)
        report = VerificationReport(context.instance(), results, started=started, duration=duration)

        self.logger.info("verification %s", report.sentence())
        if self.errors and raise_exception:
            raise NestedViolation(self.errors)
        return report
