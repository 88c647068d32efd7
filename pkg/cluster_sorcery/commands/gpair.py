"""g-pair command."""
from ..gpairs import find_gpair, gpair_dvector_classify
from ..invariants import rmatrix
from .base import CommandError, indices
from .seeds import PathCommand


class GPair(PathCommand):
    """Finds the g-pair partner of the seed at ``--path`` along ``--subset``."""

    help = "Find the g-pair partner of a seed along an index subset"

    default_mode = "principal"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--subset", type=indices, required=True, help="Comma separated 1-based indices.")

    def handle(self, **options):
        if not options["subset"]:
            raise CommandError(params={"reason": "--subset must not be empty"})
        _, source = self.get_target(options)
        cert = find_gpair(source, options["subset"], limit=options["limit"])

        data = cert.__json__()
        data["R"] = rmatrix(cert.partner, cert.source)
        if len(cert.subset) == source.rank - 1:
            data["classification"] = {str(i): gpair_dvector_classify(cert, i) for i in range(1, source.rank + 1)}
        return data
