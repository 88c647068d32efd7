"""Settings.

Settings come from built-in defaults which can be overridden through ``CLUSTER_SORCERY_<NAME>``
environment variables. Raw environment strings go through :py:data:`SETTINGS_NORMALIZATION`, the same
way engine options get normalized from a database url query string.

For example::

    $ CLUSTER_SORCERY_NODE_LIMIT=500 cluster-sorcery explore --b A3
"""
import contextlib
import os

from .exceptions import ImproperlyConfigured


ENV_PREFIX = "CLUSTER_SORCERY_"


def boolean(x):
    return str(x) in ["True", "true", "1", "yes"]


def integer(x):
    return int(x)


def positive_integer(x):
    value = int(x)
    if value < 1:
        raise ValueError(value)
    return value


def string(x):
    return str(x)


def optional_string(x):
    return str(x) or None


def log_level(x):
    value = str(x).upper()
    if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
        raise ValueError(value)
    return value


DEFAULTS = {
    "node_limit": 10000,
    "degree_bound": 3,
    "exponent_bits": 32,
    "store_url": None,
    "log_level": "WARNING",
}

SETTINGS_NORMALIZATION = {
    "node_limit": positive_integer,
    "degree_bound": integer,
    "exponent_bits": positive_integer,
    "store_url": optional_string,
    "log_level": log_level,
}


class Settings:
    """Lazily resolved settings."""

    def __init__(self, environ=None):
        self._environ = environ
        self._overrides = {}

    @property
    def environ(self):
        return os.environ if self._environ is None else self._environ

    def __getattr__(self, name):
        if name.startswith("_") or name not in DEFAULTS:
            raise AttributeError(name)

        if name in self._overrides:
            return self._overrides[name]

        env_name = ENV_PREFIX + name.upper()
        raw = self.environ.get(env_name)
        if raw is None:
            return DEFAULTS[name]

        try:
            return SETTINGS_NORMALIZATION[name](raw)
        except (TypeError, ValueError):
            raise ImproperlyConfigured(params={"name": env_name, "value": raw})

    @contextlib.contextmanager
    def override(self, **values):
        """Temporarily overrides settings, mostly useful for tests."""
        unknown = set(values) - set(DEFAULTS)
        if unknown:
            raise ImproperlyConfigured(params={"name": ", ".join(sorted(unknown)), "value": None})

        previous = self._overrides.copy()
        self._overrides.update(values)
        try:
            yield self
        finally:
            self._overrides = previous


settings = Settings()
