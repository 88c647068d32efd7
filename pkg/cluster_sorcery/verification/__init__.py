"""Property based verification of the theorems the engine relies on.

For example::

    >>> from cluster_sorcery.corpus import make_seed
    >>> report = verify_suite(make_seed("A2"))
    >>> report.passed
    True
"""
from .properties import GROUPS, PROPERTIES, Property, VerificationContext, get_properties, register  # noqa
from .report import FAILED, PASSED, SCHEMA_VERSION, SKIPPED, PropertyResult, VerificationReport  # noqa
from .runner import PropertyRunner  # noqa


def verify_suite(
    initial, limit=None, degree_bound=None, suite="all", names=None, raise_exception=False, max_counterexamples=5
):
    """Explores ``initial``'s pattern and checks every property of ``suite`` on it."""
    context = VerificationContext(initial, limit=limit, degree_bound=degree_bound)
    runner = PropertyRunner(get_properties(suite, names), max_counterexamples=max_counterexamples)
    return runner.run(context, raise_exception=raise_exception)
