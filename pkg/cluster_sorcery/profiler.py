"""Exploration profiling."""
import logging
import time
from collections import defaultdict
from functools import partial
from threading import local

import inflect

from . import signals


logger = logging.getLogger(__name__)
inflector = inflect.engine()


class ExplorationProfiler:
    """Counts mutations, discovered nodes, explorations and checked properties by listening to signals.

    Can be used as a context manager::

        >>> from cluster_sorcery.corpus import make_seed
        >>> from cluster_sorcery.explorer import explore
        >>> with ExplorationProfiler() as profiler:
        ...     graph = explore(make_seed("A2"))
        >>> profiler.summary()
        '1 exploration, 5 nodes, 10 mutations'
    """

    logger = logger

    def __init__(self):
        self.local = local()
        self._receivers = [
            (signals.seed_mutated, partial(self._event_counter, count_event="mutations")),
            (signals.node_discovered, partial(self._event_counter, count_event="nodes")),
            (signals.exploration_started, self._exploration_started),
            (signals.exploration_finished, self._exploration_finished),
            (signals.property_checked, self._property_checked),
        ]

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.stop()

    def start(self):
        """Starts profiling by connecting to the signals."""
        self.clear()
        for signal, receiver in self._receivers:
            signal.connect(receiver, weak=False)

    def stop(self):
        """Stops profiling by disconnecting from the signals."""
        for signal, receiver in self._receivers:
            signal.disconnect(receiver)

    def clear(self):
        """Clears collected stats."""
        self.local.__dict__.clear()

    @property
    def duration(self):
        """Total time spent exploring."""
        return self.local.__dict__.setdefault("duration", 0)

    @duration.setter
    def duration(self, value):
        self.local.duration = value

    @property
    def counts(self):
        return self.local.__dict__.setdefault("counts", defaultdict(lambda: 0))

    @property
    def stats(self):
        stats = dict(self.counts)
        stats["duration"] = self.duration
        return stats

    def _event_counter(self, sender, count_event=None, **kwargs):
        self.counts[count_event] += 1

    def _exploration_started(self, sender, **kwargs):
        self.local._exploration_start_time = time.time()
        self.counts["explorations"] += 1

    def _exploration_finished(self, sender, **kwargs):
        start = self.local.__dict__.pop("_exploration_start_time", None)
        if start is not None:
            self.duration += time.time() - start
        if sender.truncated:
            self.counts["truncated"] += 1

    def _property_checked(self, sender, result=None, **kwargs):
        self.counts["properties"] += 1
        if result is not None:
            self.counts["properties_{}".format(result.status)] += 1

    def summary(self):
        """Human readable one line summary of the counts."""
        counts = self.counts
        return ", ".join(
            "{} {}".format(counts[name], inflector.plural(noun, counts[name]))
            for name, noun in (("explorations", "exploration"), ("nodes", "node"), ("mutations", "mutation"))
        )

    def log(self):
        """Logs the summary and the collected stats."""
        summary = self.summary()
        self.logger.info(
            "Exploration profiler %s (%s)", summary, " ".join("{}={}".format(k, v) for k, v in self.stats.items())
        )
