"""Verification reports."""
import json
from collections import namedtuple

import inflect

from ..utils import jsonable


inflector = inflect.engine()

SCHEMA_VERSION = 1

PASSED = "pass"
FAILED = "fail"
SKIPPED = "skipped"
STATUSES = (PASSED, FAILED, SKIPPED)


class PropertyResult(namedtuple("PropertyResult", ["name", "status", "detail", "counterexamples", "duration"])):
    """Outcome of one property.

    A failed result always carries at least one counterexample with enough data (seed path, subset, indices)
    to reproduce it.
    """

    __slots__ = ()

    def as_dict(self, include_timing=True):
        data = {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "counterexamples": jsonable(self.counterexamples),
        }
        if include_timing:
            data["duration"] = self.duration
        return data


class VerificationReport:
    """Results of a verification run over one exchange matrix.

    ``as_dict(include_timing=False)`` only depends on the instance and the limits.
    """

    schema_version = SCHEMA_VERSION

    def __init__(self, instance, results=None, started=None, duration=None):
        self.instance = instance
        self.results = list(results or [])
        self.started = started
        self.duration = duration

    def count(self, status):
        return sum(1 for r in self.results if r.status == status)

    @property
    def passed(self):
        return not self.count(FAILED)

    @property
    def failures(self):
        return [r for r in self.results if r.status == FAILED]

    def sentence(self):
        """Summary such as ``"30 properties passed, 1 property failed and 2 properties were skipped"``."""
        parts = []
        for status, verb in ((PASSED, "passed"), (FAILED, "failed"), (SKIPPED, "skipped")):
            count = self.count(status)
            noun = inflector.plural("property", count)
            if status == SKIPPED:
                verb = "{} {}".format(inflector.plural_verb("was", count), verb)
            parts.append("{} {} {}".format(count, noun, verb))
        return inflector.join(parts, final_sep="")

    def summary(self):
        return {
            "passed": self.count(PASSED),
            "failed": self.count(FAILED),
            "skipped": self.count(SKIPPED),
            "sentence": self.sentence(),
        }

    def as_dict(self, include_timing=True):
        data = {
            "schema_version": self.schema_version,
            "instance": jsonable(self.instance),
            "results": [r.as_dict(include_timing=include_timing) for r in self.results],
            "summary": self.summary(),
        }
        if include_timing:
            data["timing"] = {"started": self.started, "duration": self.duration}
        return data

    def to_json(self, include_timing=True, **kwargs):
        kwargs.setdefault("indent", 2)
        return json.dumps(self.as_dict(include_timing=include_timing), **kwargs)

    def __repr__(self):
        return "VerificationReport({})".format(self.sentence())
