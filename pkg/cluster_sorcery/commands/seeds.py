"""Commands about a single seed reached along a mutation path."""
from ..invariants import dmatrix_direct, dmatrix_recurrence, gmatrix, monomial_gvector, relative_dmatrix
from .base import CommandError, SeedCommand, indices


class PathCommand(SeedCommand):
    """Seed command addressing the seed at the end of ``--path``."""

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--path",
            "-p",
            type=indices,
            default=(),
            help="Comma separated 1-based mutation directions applied to the initial seed.",
        )

    def get_target(self, options):
        root = self.get_seed(options)
        return root, root.mutate_path(options["path"])


class Mutate(PathCommand):
    """Mutates the initial seed along a path."""

    help = "Mutate the initial seed along --path and print the resulting seed"

    def handle(self, **options):
        _, seed = self.get_target(options)
        return {"requested": list(options["path"]), "seed": seed}


class DVec(PathCommand):
    """d-vectors of the cluster at the end of a path."""

    help = "d-vectors of a cluster with respect to the initial cluster or the cluster at --wrt"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        wrt = parser.add_mutually_exclusive_group()
        wrt.add_argument("--wrt-root", action="store_true", help="Expand in the initial cluster, the default.")
        wrt.add_argument("--wrt", type=indices, default=None, help="Expand in the cluster at the end of this path.")
        parser.add_argument("--method", choices=["direct", "recurrence"], default="direct")

    def handle(self, **options):
        root, seed = self.get_target(options)
        if options["wrt"] is not None:
            if options["method"] != "direct":
                raise CommandError(params={"reason": "--wrt only supports --method direct"})
            anchor = root.mutate_path(options["wrt"])
            dmat = relative_dmatrix(anchor, seed)
            wrt = list(anchor.path)
        elif options["method"] == "recurrence":
            dmat = dmatrix_recurrence(seed.path, root.bmat)
            wrt = []
        else:
            dmat = dmatrix_direct(seed)
            wrt = []
        return {"path": list(seed.path), "wrt": wrt, "method": options["method"], "columns": dmat.columns()}


class GVec(PathCommand):
    help = "g-vectors of a cluster, or of one of its cluster monomials with --monomial"

    default_mode = "principal"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--monomial", type=indices, default=None, help="Exponent vector of a cluster monomial.")

    def handle(self, **options):
        _, seed = self.get_target(options)
        data = {"path": list(seed.path), "gvectors": gmatrix(seed).columns()}
        if options["monomial"] is not None:
            data["monomial"] = list(options["monomial"])
            data["gvector"] = list(monomial_gvector(seed, options["monomial"]))
        return data


class GMat(PathCommand):
    help = "G-matrix of a seed"

    default_mode = "principal"

    def handle(self, **options):
        _, seed = self.get_target(options)
        gmat = gmatrix(seed)
        return {"path": list(seed.path), "G": gmat, "det": gmat.det()}


class DMat(PathCommand):
    help = "D-matrix of a seed with respect to the initial cluster"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--method", choices=["direct", "recurrence"], default="direct")

    def handle(self, **options):
        root, seed = self.get_target(options)
        if options["method"] == "recurrence":
            dmat = dmatrix_recurrence(seed.path, root.bmat)
        else:
            dmat = dmatrix_direct(seed)
        return {"path": list(seed.path), "method": options["method"], "D": dmat}
