"""Bundled exchange matrices.

Matrices are addressed by name from the command line, anything else given to ``--b`` is read as JSON text or
as a path to a JSON file holding either a bare matrix or a seed descriptor.
"""
import json
import os

from .algebra import PRINCIPAL, Seed
from .exceptions import InvalidDescriptor


CORPUS = {
    "A2": [[0, 1], [-1, 0]],
    "A3": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]],
    "A3-alternating": [[0, 1, 0], [-1, 0, -1], [0, 1, 0]],
    "B2": [[0, 1], [-2, 0]],
    "C2": [[0, 2], [-1, 0]],
    "G2": [[0, 1], [-3, 0]],
}

# infinite type, only useful for truncation
AFFINE = {
    "A1-affine": [[0, 2], [-2, 0]],
}

FINITE_TYPE = tuple(CORPUS)


def matrix(name):
    try:
        return CORPUS.get(name) or AFFINE[name]
    except KeyError:
        raise InvalidDescriptor(params={"reason": "unknown corpus entry {!r}".format(name)})


def _load(value):
    if os.path.isfile(value):
        with open(value) as f:
            return json.load(f)
    return json.loads(value)


def make_seed(value, mode=None):
    """Resolves a corpus name, JSON text or JSON file into the initial seed it describes.

    ``mode`` wins over the mode of a descriptor, principal coefficients are the default.

    For example::

        >>> make_seed("B2", mode="trivial").bmat
        IntMatrix([[0, 1], [-2, 0]])
        >>> make_seed('{"n": 2, "B": [[0, 1], [-1, 0]], "mode": "trivial"}').mode
        'trivial'
    """
    if isinstance(value, str) and (value in CORPUS or value in AFFINE):
        data = {"B": matrix(value)}
    elif isinstance(value, str):
        try:
            data = _load(value)
        except (OSError, ValueError) as e:
            raise InvalidDescriptor(params={"reason": "cannot read {!r}: {}".format(value, e)})
    else:
        data = value

    if isinstance(data, list):
        data = {"B": data}
    if not isinstance(data, dict):
        raise InvalidDescriptor(params={"reason": "expected a matrix or a descriptor object"})

    data = dict(data)
    data["mode"] = mode or data.get("mode") or PRINCIPAL
    return Seed.from_descriptor(data)
