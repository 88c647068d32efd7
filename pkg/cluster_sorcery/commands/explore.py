"""Explore command."""
from ..explorer import explore, restricted_explore
from .base import SeedCommand, indices


class Explore(SeedCommand):
    """Breadth first exploration of the exchange graph."""

    help = "Explore the exchange graph, or the labeled pattern restricted to --subset"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--subset",
            type=indices,
            default=None,
            help="Only mutate in these directions and keep labeled seeds apart.",
        )
        parser.add_argument("--format", choices=["json", "edgelist"], default="json")

    def handle(self, **options):
        seed = self.get_seed(options)
        with self.profiled():
            if options["subset"] is not None:
                graph = restricted_explore(seed, options["subset"], limit=options["limit"])
            else:
                graph = explore(seed, limit=options["limit"])

        if graph.truncated:
            self.logger.warning("exploration truncated limit=%s: %s", graph.limit, graph.truncation_error())
        if options["format"] == "edgelist":
            return graph.to_edgelist()
        return graph
