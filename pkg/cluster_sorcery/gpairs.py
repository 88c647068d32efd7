"""g-pairs along index subsets.

A labeled seed ``partner`` reached from the root by mutations in ``I`` forms a g-pair with ``source`` along
``I`` when ``G_source`` restricted to the rows ``I`` factors as ``G_partner|IxI Q`` with ``Q`` nonnegative.
Partners are found by scanning the I-restricted labeled pattern.
"""
import logging
from collections import namedtuple

from .algebra import canonical_key
from .exceptions import MultipleFound, NotFound, PreconditionError, SingularBlock, TheoremViolation
from .explorer import restricted_explore
from .invariants import dvector_direct, gmatrix, reexpand, rmatrix


logger = logging.getLogger(__name__)

SHARED_AT_K = "shared-at-k"
SHARED_ELSEWHERE = "shared-elsewhere"
DISJOINT = "disjoint"


class GPairCertificate(namedtuple("GPairCertificate", ["source", "partner", "subset", "qmat", "partner_path"])):
    """Witness that ``partner`` is the g-pair partner of ``source`` along ``subset``."""

    __slots__ = ()

    def __json__(self):
        return {
            "source_path": list(self.source.path),
            "subset": list(self.subset),
            "partner_path": list(self.partner_path),
            "partner_cluster": [str(x) for x in self.partner.cluster],
            "Q": self.qmat.to_list(),
        }


def _normalize_subset(subset, rank):
    subset = tuple(sorted(set(subset)))
    if any(not 1 <= i <= rank for i in subset):
        raise PreconditionError(params={"reason": "subset {} is not inside 1..{}".format(list(subset), rank)})
    return subset


def is_gpair(source, partner, partner_path, subset):
    """Returns ``Q`` when ``(source, partner)`` is a g-pair along ``subset`` otherwise ``None``."""
    subset = _normalize_subset(subset, source.rank)
    if any(k not in subset for k in partner_path):
        raise PreconditionError(params={"reason": "path {} leaves subset {}".format(list(partner_path), list(subset))})

    rows = [i - 1 for i in subset]
    block = gmatrix(partner).submatrix(rows, rows)
    det = block.det()
    if det not in (1, -1):
        raise SingularBlock(params={"subset": list(subset), "det": det})

    qmat = block.inverse_unimodular() @ gmatrix(source).submatrix(rows, range(source.rank))
    if any(v < 0 for row in qmat.rows for v in row):
        return None
    return qmat


def find_gpair(source, subset, limit=None, restricted=None):
    """The unique g-pair partner of ``source`` along ``subset``.

    Scans the whole restricted pattern, acceptances by equivalent seeds count once. A restricted pattern
    explored beforehand from the root can be passed in as ``restricted``.
    Raises :py:class:`.InfiniteType` when the ``subset`` block of some reached matrix rules out finite type.
    """
    subset = _normalize_subset(subset, source.rank)
    if restricted is None:
        restricted = restricted_explore(source.root(), subset, limit=limit)
    if restricted.truncated:
        raise restricted.truncation_error()

    accepted = {}
    for partner in restricted.nodes:
        qmat = is_gpair(source, partner, partner.path, subset)
        if qmat is not None:
            accepted.setdefault(canonical_key(partner), GPairCertificate(source, partner, subset, qmat, partner.path))

    where = {"path": list(source.path), "subset": list(subset)}
    if not accepted:
        raise NotFound(params={"what": "g-pair partner", "where": where})
    if len(accepted) > 1:
        raise MultipleFound(params={"count": len(accepted), "what": "g-pair partners", "where": where})

    (certificate,) = accepted.values()
    logger.debug(
        "gpair source=%s subset=%s partner=%s candidates=%s",
        list(source.path),
        list(subset),
        list(certificate.partner_path),
        len(restricted),
    )
    return certificate


def gpair_dvector_classify(cert, i):
    """Position of ``x_i`` of the source relative to the partner of a g-pair along ``[1,n]\\{k}``.

    Read off the sign of ``r_ki`` in ``R = G_partner^-1 G_source`` and cross-checked against the d-vector of
    ``x_i`` with respect to the partner cluster.
    """
    n = cert.source.rank
    missing = [k for k in range(1, n + 1) if k not in cert.subset]
    if len(missing) != 1:
        reason = "subset {} does not omit exactly one index".format(list(cert.subset))
        raise PreconditionError(params={"reason": reason})
    (k,) = missing
    if not 1 <= i <= n:
        raise PreconditionError(params={"reason": "variable index {} out of range".format(i)})

    r = rmatrix(cert.partner, cert.source)[k - 1, i - 1]
    if r > 0:
        classification = SHARED_AT_K
    elif r == 0:
        classification = SHARED_ELSEWHERE
    else:
        classification = DISJOINT

    x = cert.source.cluster[i - 1]
    d = dvector_direct(reexpand(cert.partner, cert.source).cluster[i - 1])[k - 1]
    expected = {
        SHARED_AT_K: d == -1 and cert.partner.cluster[k - 1] == x,
        SHARED_ELSEWHERE: d == 0 and x in cert.partner.cluster,
        DISJOINT: d > 0 and x not in cert.partner.cluster,
    }
    if not expected[classification]:
        raise TheoremViolation(
            "d-vector entry %(d)s contradicts %(classification)s for r=%(r)s",
            params={"d": d, "classification": classification, "r": r, "path": list(cert.source.path), "i": i},
        )
    return classification
