"""Compatibility degree commands.

Cluster variables are addressed either by their 1-based index in the canonical variable order or as
``path:slot``, e.g. ``1,2:1`` for the first variable of the cluster reached by mutating in directions 1 then 2
and ``:2`` for the second initial variable.
"""
from ..compat import complete_to_cluster, degree_matrix, degree_report, is_compatible_set, maximal_compatible_sets
from ..exceptions import IndexOutOfRange
from ..explorer import cluster_variables, explore
from ..utils import parse_indices
from .base import CommandError, NamespacedCommand, SeedCommand


def resolve_variable(graph, ref):
    """The cluster variable ``ref`` points to in ``graph``."""
    if ":" in ref:
        path, slot = ref.rsplit(":", 1)
        try:
            path, slot = parse_indices(path), int(slot)
        except ValueError:
            raise CommandError(params={"reason": "bad variable reference {!r}".format(ref)})
        seed = graph.initial.mutate_path(path)
        if not 1 <= slot <= seed.rank:
            raise IndexOutOfRange(params={"index": slot, "rank": seed.rank})
        return seed.cluster[slot - 1]

    try:
        index = int(ref)
    except ValueError:
        raise CommandError(params={"reason": "bad variable reference {!r}".format(ref)})
    variables = cluster_variables(graph)
    if not 1 <= index <= len(variables):
        raise IndexOutOfRange(params={"index": index, "rank": len(variables)})
    return variables[index - 1]


class CompatCommand(SeedCommand):
    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("variables", nargs="*", metavar="variable", help="Variable index or path:slot.")
        parser.add_argument(
            "--at", action="append", default=[], metavar="PATH:SLOT", help="Variable at a path and slot."
        )

    def get_graph(self, options):
        return explore(self.get_seed(options), limit=options["limit"]).require_complete()

    def get_variables(self, graph, options):
        return [resolve_variable(graph, ref) for ref in list(options["variables"]) + list(options["at"])]


class Degree(CompatCommand):
    help = "Compatibility degree d(a, b) of two cluster variables"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--audit", action="store_true", help="Recompute through every cluster holding a.")

    def handle(self, **options):
        graph = self.get_graph(options)
        variables = self.get_variables(graph, options)
        if len(variables) != 2:
            raise CommandError(params={"reason": "expected two variables, got {}".format(len(variables))})
        return degree_report(graph, *variables, audit=options["audit"])


class Sets(CompatCommand):
    help = "Maximal compatible sets, or whether the given variables are compatible and a cluster holding them"

    def handle(self, **options):
        graph = self.get_graph(options)
        variables = self.get_variables(graph, options)
        if variables:
            compatible = is_compatible_set(graph, variables)
            return {
                "variables": [str(x) for x in variables],
                "compatible": compatible,
                "cluster": complete_to_cluster(graph, variables) if compatible else None,
            }

        order = cluster_variables(graph)
        position = {x: i for i, x in enumerate(order, 1)}
        sets = maximal_compatible_sets(graph)
        return {
            "variables": [str(x) for x in order],
            "sets": [[position[x] for x in s] for s in sets],
        }


class Matrix(CompatCommand):
    help = "Table of compatibility degrees over all cluster variables"

    def handle(self, **options):
        graph = self.get_graph(options)
        order = self.get_variables(graph, options) or cluster_variables(graph)
        return {"variables": [str(x) for x in order], "degrees": degree_matrix(graph, order)}


class Compat(NamespacedCommand):
    """Namespace for the compatibility degree commands."""

    help = "Compatibility degrees and compatible sets"

    degree = Degree
    sets = Sets
    matrix = Matrix
