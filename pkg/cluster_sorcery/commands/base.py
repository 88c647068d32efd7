"""Command classes the command line is assembled from."""
import argparse
import inspect
import json
import logging
import os
import sys
from contextlib import contextmanager

from ..conf import settings
from ..corpus import make_seed
from ..exceptions import ClusterSorceryError
from ..profiler import ExplorationProfiler
from ..utils import jsonable, parse_indices


logger = logging.getLogger(__name__)

VERBOSITY_LEVELS = {0: "ERROR", 1: "WARNING", 2: "INFO", 3: "DEBUG"}


class CommandError(ClusterSorceryError):
    """Bad command line usage."""

    message = "%(reason)s"
    code = "usage"


class CommandParser(argparse.ArgumentParser):
    """Argument parser raising :py:class:`CommandError` instead of exiting on bad arguments."""

    def __init__(self, stdout=None, **kwargs):
        self.stdout = stdout
        super().__init__(**kwargs)

    def print_help(self, file=None):
        super().print_help(file or self.stdout)

    def error(self, message):
        raise CommandError(params={"reason": "{}: {}".format(self.prog, message)})


def indices(value):
    """argparse type for comma separated 1-based indices."""
    try:
        return parse_indices(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got {!r}".format(value))


class BaseCommand:
    """A command reading its options from argv and writing JSON to ``stdout``.

    Subclasses implement :py:meth:`add_arguments` and :py:meth:`handle`, whatever ``handle`` returns is
    written out as JSON.
    """

    help = ""
    logger = logger

    def __init__(self, stdout=None, stderr=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def create_parser(self, prog_name):
        parser = CommandParser(stdout=self.stdout, prog=prog_name, description=self.help or None)
        parser.add_argument(
            "--verbosity",
            "-v",
            type=int,
            choices=sorted(VERBOSITY_LEVELS),
            default=None,
            help="Logging verbosity on standard error, 0=errors only .. 3=debug.",
        )
        parser.add_argument("--json", action="store_true", help="Compact single line JSON with sorted keys.")
        self.add_arguments(parser)
        return parser

    def add_arguments(self, parser):
        """Entry point for subclassed commands to add custom arguments."""

    def print_help(self, prog_name):
        self.create_parser(prog_name).print_help(self.stdout)

    def run_from_argv(self, argv):
        """Parses ``argv[1:]`` with ``argv[0]`` as the program name and executes the command."""
        parser = self.create_parser(argv[0])
        options = vars(parser.parse_args(argv[1:]))
        return self.execute(**options)

    def execute(self, **options):
        self.configure_logging(options.get("verbosity"))
        output = self.handle(**options)
        if output is not None:
            self.write(output, compact=options.get("json", False))
        return output

    def configure_logging(self, verbosity):
        level = VERBOSITY_LEVELS[verbosity] if verbosity is not None else settings.log_level
        package_logger = logging.getLogger("cluster_sorcery")
        for handler in list(package_logger.handlers):
            if getattr(handler, "_cluster_sorcery", False):
                package_logger.removeHandler(handler)
        handler = logging.StreamHandler(self.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s %(message)s"))
        handler._cluster_sorcery = True
        package_logger.addHandler(handler)
        package_logger.setLevel(level)

    def write(self, output, compact=False):
        if isinstance(output, str):
            self.stdout.write(output)
            return
        if compact:
            text = json.dumps(jsonable(output), sort_keys=True, separators=(",", ":"))
        else:
            text = json.dumps(jsonable(output), indent=2)
        self.stdout.write(text + "\n")

    def handle(self, **options):
        """The actual logic of the command, subclasses must implement this method."""
        raise NotImplementedError("subclasses of BaseCommand must provide a handle() method")


class SeedCommand(BaseCommand):
    """Command working on the pattern of an exchange matrix given with ``--b``."""

    default_mode = None

    def add_arguments(self, parser):
        parser.add_argument(
            "--b",
            "-b",
            dest="b",
            required=True,
            help="Corpus name, JSON matrix or descriptor, or path to a JSON file.",
        )
        parser.add_argument("--mode", choices=["principal", "trivial"], default=self.default_mode)
        parser.add_argument("--limit", type=int, default=None, help="Node limit for explorations.")

    def get_seed(self, options):
        return make_seed(options["b"], mode=options.get("mode"))

    @contextmanager
    def profiled(self):
        """Counts the explorations of the block, the counts are logged at info level."""
        with ExplorationProfiler() as profiler:
            yield profiler
        profiler.log()


class NamespacedCommand(BaseCommand):
    """Command dispatching to the subcommand classes declared as its attributes."""

    @property
    def commands(self):
        """Returns the subcommands in the namespace."""
        if not hasattr(self, "_commands"):
            self._commands = {}
            for cls in reversed(self.__class__.mro()):
                self._commands.update(
                    {
                        name.replace("_", "-"): cmd_cls
                        for name, cmd_cls in vars(cls).items()
                        if inspect.isclass(cmd_cls) and issubclass(cmd_cls, BaseCommand)
                    }
                )

        return self._commands

    def run_command_from_argv(self, command, argv):
        """Runs the subcommand with namespace adjusted argv."""
        cmd_args = argv[:]
        cmd_args[0] = " ".join([os.path.basename(cmd_args[0]), cmd_args.pop(1)])
        return command.run_from_argv(cmd_args)

    def run_from_argv(self, argv):
        if len(argv) > 1 and not argv[1].startswith("-") and argv[1] in self.commands:
            command = self.commands[argv[1]](stdout=self.stdout, stderr=self.stderr)
            return self.run_command_from_argv(command, argv)

        if len(argv) > 1 and argv[1] not in ("-h", "--help"):
            raise CommandError(
                params={"reason": "{}: unknown command {!r}".format(os.path.basename(argv[0]), argv[1])}
            )
        self.print_help(argv[0])
        if len(argv) == 1:
            raise CommandError(params={"reason": "{}: no command given".format(os.path.basename(argv[0]))})
        return None

    def create_parser(self, prog_name):
        parser = CommandParser(stdout=self.stdout, prog=os.path.basename(prog_name), description=self.help or None)
        subparsers = parser.add_subparsers(title="commands", metavar="command")
        for name, command_cls in sorted(self.commands.items()):
            subparsers.add_parser(name, help=command_cls.help, add_help=False)
        return parser
