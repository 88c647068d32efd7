"""The ``cluster-sorcery`` command line.

For example::

    $ cluster-sorcery explore --b A2 --mode trivial
    $ cluster-sorcery dvec --b A2 --path 1,2 --wrt-root
    $ cluster-sorcery compat degree --b A2 1 3
    $ cluster-sorcery verify --b B2 --store sqlite:///runs.db

Results go to standard output as JSON, diagnostics to standard error. The exit status is ``0`` on success,
``1`` on bad usage or when no command is given, ``2`` when a theorem backed assertion failed and ``3`` when a
complete exchange graph was needed but exploration hit the node limit or found the pattern is not of finite type.
"""
import logging
import sys

from ..exceptions import ClusterSorceryError
from .base import NamespacedCommand
from .compat import Compat
from .explore import Explore
from .gpair import GPair
from .seeds import DMat, DVec, GMat, GVec, Mutate
from .verify import Runs, Verify


logger = logging.getLogger(__name__)

PROG = "cluster-sorcery"


class Command(NamespacedCommand):
    """Namespaced commands for cluster sorcery."""

    help = "Exact cluster algebra computations and theorem verification"

    mutate = Mutate
    explore = Explore
    dvec = DVec
    gvec = GVec
    gmat = GMat
    dmat = DMat
    gpair = GPair
    compat = Compat
    verify = Verify
    runs = Runs


def main(argv=None, stdout=None, stderr=None):
    """Runs the command line and returns its exit status."""
    argv = sys.argv[1:] if argv is None else list(argv)
    command = Command(stdout=stdout, stderr=stderr)
    try:
        command.run_from_argv([PROG] + argv)
    except ClusterSorceryError as e:
        logger.debug("command failed argv=%s code=%s", argv, e.code, exc_info=True)
        command.stderr.write("error: {}\n".format(e))
        return e.exit_status
    except SystemExit as e:
        # argparse exits after --help
        return e.code or 0
    return 0
