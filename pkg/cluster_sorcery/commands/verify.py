"""Verification commands."""
from ..exceptions import TheoremViolation
from ..store import make_store
from ..verification import GROUPS, verify_suite
from .base import BaseCommand, CommandError, SeedCommand


class Verify(SeedCommand):
    """Runs the property suite and prints the report.

    Exits with status 2 when a property failed, the report is written out first.
    """

    help = "Check every property of a suite over the explored pattern"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--suite", choices=("all",) + GROUPS, default="all")
        parser.add_argument(
            "--property", action="append", dest="names", default=None, help="Only run the named properties."
        )
        parser.add_argument("--degree-bound", type=int, default=None, help="Total degree of checked monomials.")
        parser.add_argument("--max-counterexamples", type=int, default=5)
        parser.add_argument("--store", default=None, help="Database url to persist the report in.")
        parser.add_argument("--no-timing", action="store_true", help="Leave timing out of the printed report.")

    def handle(self, **options):
        with self.profiled():
            report = verify_suite(
                self.get_seed(options),
                limit=options["limit"],
                degree_bound=options["degree_bound"],
                suite=options["suite"],
                names=options["names"],
                max_counterexamples=options["max_counterexamples"],
            )

        store = make_store(options["store"])
        if store is not None:
            run = store.save(report)
            self.logger.info("verification stored id=%s", run.id)

        self.write(report.as_dict(include_timing=not options["no_timing"]), compact=options["json"])
        self.stderr.write(report.sentence() + "\n")
        if not report.passed:
            raise TheoremViolation(
                "Properties failed: %(names)s", params={"names": ", ".join(r.name for r in report.failures)}
            )


class Runs(BaseCommand):
    help = "List stored verification runs, or show one with --id"

    def add_arguments(self, parser):
        parser.add_argument("--store", default=None, help="Database url, defaults to the store_url setting.")
        parser.add_argument("--id", type=int, default=None, dest="run_id")

    def handle(self, **options):
        store = make_store(options["store"])
        if store is None:
            raise CommandError(params={"reason": "no store configured, pass --store or set CLUSTER_SORCERY_STORE_URL"})

        if options["run_id"] is None:
            return [run.__json__() for run in store.runs()]

        run = store.get(options["run_id"])
        if run is None:
            raise CommandError(params={"reason": "no stored run with id {}".format(options["run_id"])})
        return run.report
