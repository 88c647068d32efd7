"""Catalogue of checkable properties.

Each property is a generator over a :py:class:`VerificationContext` yielding counterexamples, an empty
generator means the property holds. Properties flagged ``requires_complete`` are skipped when the exchange
graph had to be truncated.
"""
import itertools
import logging
from collections import OrderedDict, namedtuple

import networkx as nx

from ..algebra import PRINCIPAL, TRIVIAL, Seed, canonical_key, find_skew_symmetrizer, parse_poly, trop_oplus
from ..compat import compatibility_degree, degree_matrix, maximal_compatible_sets
from ..conf import settings
from ..exceptions import InexactDivision, PreconditionError, TheoremViolation
from ..explorer import cluster_variables, explore, restricted_explore, seeds_containing
from ..gpairs import find_gpair, gpair_dvector_classify
from ..invariants import (
    cluster_monomial,
    columns_sign_coherent,
    dmatrix_direct,
    dmatrix_recurrence,
    dvector_direct,
    gmatrix,
    monomial_dvector,
    monomial_gvector,
    proper_laurent_check,
    reexpand,
    rmatrix,
    rows_sign_coherent,
)
from ..utils import monomial_vectors


logger = logging.getLogger(__name__)

Property = namedtuple("Property", ["name", "group", "check", "requires_complete", "description"])

PROPERTIES = OrderedDict()
GROUPS = ("laurent", "seed", "invariants", "explorer", "gpairs", "compat")


def register(name, group, requires_complete=False):
    def decorator(func):
        description = (func.__doc__ or name).strip().splitlines()[0]
        PROPERTIES[name] = Property(name, group, func, requires_complete, description)
        return func

    return decorator


def get_properties(suite="all", names=None):
    """Properties of a suite (``"all"`` or a group name) in catalogue order, optionally narrowed by name."""
    if suite != "all" and suite not in GROUPS:
        raise PreconditionError(params={"reason": "unknown suite {!r}".format(suite)})
    unknown = sorted(set(names or ()) - set(PROPERTIES))
    if unknown:
        raise PreconditionError(params={"reason": "unknown properties {}".format(", ".join(unknown))})
    return [
        p for p in PROPERTIES.values() if (suite == "all" or p.group == suite) and (not names or p.name in names)
    ]


class VerificationContext:
    """Lazily explored data shared by all properties of one run.

    Properties are always checked on principal coefficients, the trivial pattern of the same matrix is
    explored as well for the coefficient independence checks.
    """

    def __init__(self, initial, limit=None, degree_bound=None):
        bmat = initial.root_bmat()
        self.mode = initial.mode
        self.root = Seed.initial(bmat, mode=PRINCIPAL)
        self.trivial_root = Seed.initial(bmat, mode=TRIVIAL)
        self.limit = settings.node_limit if limit is None else limit
        self.degree_bound = settings.degree_bound if degree_bound is None else degree_bound
        self._graph = None
        self._trivial_graph = None
        self._restricted = {}
        self._certificates = {}
        self._relative = {}
        self._degrees = None

    @property
    def rank(self):
        return self.root.rank

    @property
    def graph(self):
        if self._graph is None:
            self._graph = explore(self.root, limit=self.limit)
        return self._graph

    @property
    def trivial_graph(self):
        if self._trivial_graph is None:
            self._trivial_graph = explore(self.trivial_root, limit=self.limit)
        return self._trivial_graph

    @property
    def truncated(self):
        return self.graph.truncated

    def instance(self):
        return {
            "B": self.root.bmat.to_list(),
            "rank": self.rank,
            "mode": self.mode,
            "node_limit": self.limit,
            "degree_bound": self.degree_bound,
        }

    def variables(self):
        return cluster_variables(self.graph)

    def monomials(self):
        """Nonzero exponent vectors of total degree at most ``degree_bound``."""
        return [v for v in monomial_vectors(self.rank, self.degree_bound) if any(v)]

    def subsets(self):
        """Nonempty index subsets, smallest first."""
        indices = range(1, self.rank + 1)
        return [s for size in indices for s in itertools.combinations(indices, size)]

    def restricted(self, subset):
        if subset not in self._restricted:
            self._restricted[subset] = restricted_explore(self.root, subset, limit=self.limit)
        return self._restricted[subset]

    def certificate(self, index, subset):
        if (index, subset) not in self._certificates:
            self._certificates[index, subset] = find_gpair(
                self.graph.nodes[index], subset, restricted=self.restricted(subset)
            )
        return self._certificates[index, subset]

    def relative(self, anchor, target):
        """Expansion of node ``target``'s cluster in node ``anchor``'s cluster."""
        if (anchor, target) not in self._relative:
            self._relative[anchor, target] = reexpand(self.graph.nodes[anchor], self.graph.nodes[target])
        return self._relative[anchor, target]

    def first_occurrence(self, x):
        return self.graph.occurrences()[x][0]

    def cocluster(self, a, b):
        occurrences = self.graph.occurrences()
        return bool({i for i, _ in occurrences[a]} & {i for i, _ in occurrences[b]})

    def degrees(self):
        if self._degrees is None:
            self._degrees = degree_matrix(self.graph, self.variables())
        return self._degrees


def _witness(seed, **kwargs):
    kwargs["path"] = list(seed.path)
    return kwargs


# laurent


@register("laurent-ring-axioms", "laurent")
def ring_axioms(context):
    """Addition and multiplication of expansions are associative, commutative and distributive."""
    sample = context.graph.variable_order()[:5]
    for p, q, r in itertools.product(sample, repeat=3):
        if (p + q) + r != p + (q + r) or (p * q) * r != p * (q * r):
            yield {"p": p, "q": q, "r": r, "axiom": "associativity"}
        if p + q != q + p or p * q != q * p:
            yield {"p": p, "q": q, "axiom": "commutativity"}
        if p * (q + r) != p * q + p * r:
            yield {"p": p, "q": q, "r": r, "axiom": "distributivity"}


@register("exact-division-round-trip", "laurent")
def division_round_trip(context):
    """Dividing a product by one factor gives back the other factor."""
    sample = context.graph.variable_order()[:6]
    for p, q in itertools.product(sample, repeat=2):
        try:
            if (p * q) / q != p:
                yield {"p": p, "q": q}
        except InexactDivision as e:
            yield {"p": p, "q": q, "error": e.as_dict()}


@register("tropical-semifield", "laurent")
def tropical_semifield(context):
    """Tropical addition is commutative, associative and idempotent and multiplication distributes over it."""
    coefficients = []
    for seed in context.graph.nodes:
        for y in seed.coeffs:
            if y not in coefficients:
                coefficients.append(y)
    for a, b, c in itertools.product(coefficients[:6], repeat=3):
        if trop_oplus(a, b) != trop_oplus(b, a) or trop_oplus(a, a) != a:
            yield {"a": a, "b": b, "law": "commutativity/idempotence"}
        if trop_oplus(trop_oplus(a, b), c) != trop_oplus(a, trop_oplus(b, c)):
            yield {"a": a, "b": b, "c": c, "law": "associativity"}
        if a * trop_oplus(b, c) != trop_oplus(a * b, a * c):
            yield {"a": a, "b": b, "c": c, "law": "distributivity"}


@register("serialization-round-trip", "laurent")
def serialization_round_trip(context):
    """Parsing the text form of every expansion reproduces it."""
    for seed in context.graph.nodes:
        for slot, x in enumerate(seed.cluster + tuple(y.as_poly() for y in seed.coeffs), 1):
            if parse_poly(str(x), context.rank) != x:
                yield _witness(seed, slot=slot, text=str(x))


# seed


@register("laurent-phenomenon", "seed")
def laurent_phenomenon(context):
    """Every mutation division during exploration is exact, with either coefficients."""
    for mode, attribute in ((PRINCIPAL, "graph"), (TRIVIAL, "trivial_graph")):
        try:
            getattr(context, attribute)
        except InexactDivision as e:
            yield {"mode": mode, "error": e.as_dict()}


@register("mutation-involution", "seed")
def mutation_involution(context):
    """Mutating twice in the same direction is the identity."""
    for seed in context.graph.nodes:
        for k in range(1, context.rank + 1):
            if seed.mutate(k).mutate(k) != seed:
                yield _witness(seed, direction=k)


@register("symmetrizer-preservation", "seed")
def symmetrizer_preservation(context):
    """Mutation keeps the minimal skew-symmetrizer."""
    expected = find_skew_symmetrizer(context.root.bmat)
    for seed in context.graph.nodes:
        found = find_skew_symmetrizer(seed.bmat)
        if found != expected:
            yield _witness(seed, expected=list(expected), found=list(found))


@register("principal-nonnegativity", "seed")
def principal_nonnegativity(context):
    """Principal coefficient expansions have positive coefficients and no negative y exponents."""
    n = context.rank
    for seed in context.graph.nodes:
        for slot, x in enumerate(seed.cluster, 1):
            if any(c <= 0 or any(b < 0 for b in flat[n:]) for flat, c in x.items()):
                yield _witness(seed, slot=slot, expansion=str(x))


@register("cluster-distinctness", "seed")
def cluster_distinctness(context):
    """The entries of every cluster are pairwise distinct."""
    for seed in context.graph.nodes:
        if len(set(seed.cluster)) != context.rank:
            yield _witness(seed)


# invariants


@register("dmatrix-recurrence", "invariants")
def dmatrix_recurrence_agreement(context):
    """The d-matrix recurrence agrees with d-vectors read off the expansions, with either coefficients."""
    for graph in (context.graph, context.trivial_graph):
        for seed in graph.nodes:
            recurrence = dmatrix_recurrence(seed.path, context.root.bmat)
            direct = dmatrix_direct(seed)
            if recurrence != direct:
                yield _witness(seed, mode=seed.mode, recurrence=recurrence, direct=direct)


@register("dvector-coefficient-independence", "invariants")
def dvector_coefficient_independence(context):
    """Principal and trivial coefficients give the same d-matrices at the same labeled vertex."""
    for seed in context.graph.nodes:
        trivial = context.trivial_root.mutate_path(seed.path)
        if dmatrix_direct(trivial) != dmatrix_direct(seed):
            yield _witness(seed, principal=dmatrix_direct(seed), trivial=dmatrix_direct(trivial))


@register("dvector-mutation-stability", "invariants", requires_complete=True)
def dvector_mutation_stability(context):
    """d-vectors with respect to clusters adjacent in direction k agree off coordinate k."""
    targets = {}
    for x in context.variables():
        targets.setdefault(context.first_occurrence(x)[0], []).append(context.first_occurrence(x)[1])

    for seed in context.graph.nodes:
        for k in range(1, context.rank + 1):
            mutated = seed.mutate(k)
            for target, slots in targets.items():
                before = dmatrix_direct(reexpand(seed, context.graph.nodes[target]))
                after = dmatrix_direct(reexpand(mutated, context.graph.nodes[target]))
                for slot in slots:
                    d, e = before.column(slot - 1), after.column(slot - 1)
                    if any(d[i] != e[i] for i in range(context.rank) if i != k - 1):
                        yield _witness(seed, direction=k, target=list(context.graph.nodes[target].path), slot=slot)


@register("gmatrix-sign-coherence", "invariants")
def gmatrix_sign_coherence(context):
    """No row of a G-matrix has entries of both signs."""
    for seed in context.graph.nodes:
        if not rows_sign_coherent(gmatrix(seed)):
            yield _witness(seed, G=gmatrix(seed))


@register("gmatrix-unimodularity", "invariants")
def gmatrix_unimodularity(context):
    """Every G-matrix has determinant 1 or -1."""
    for seed in context.graph.nodes:
        det = gmatrix(seed).det()
        if det not in (1, -1):
            yield _witness(seed, det=det)


@register("rmatrix-factorization", "invariants")
def rmatrix_factorization(context):
    """``G_s R = G_t`` for the integer matrix ``R = G_s^-1 G_t`` of every pair of seeds."""
    for s, t in itertools.product(context.graph.nodes, repeat=2):
        if gmatrix(s) @ rmatrix(s, t) != gmatrix(t):
            yield {"source": list(s.path), "target": list(t.path)}


@register("dmatrix-sign-coherence", "invariants")
def dmatrix_sign_coherence(context):
    """Nonzero entries of a D-matrix share their sign along every row and every column."""
    for seed in context.graph.nodes:
        dmat = dmatrix_direct(seed)
        if not (rows_sign_coherent(dmat) and columns_sign_coherent(dmat)):
            yield _witness(seed, D=dmat)


@register("monomial-dvector", "invariants")
def monomial_dvector_agreement(context):
    """The d-vector of a cluster monomial is ``D v``."""
    for seed in context.graph.nodes:
        for v in context.monomials():
            if monomial_dvector(seed, v) != dvector_direct(cluster_monomial(seed, v)):
                yield _witness(seed, v=v)


@register("gvector-injectivity", "invariants")
def gvector_injectivity(context):
    """Cluster monomials with equal g-vectors are equal, with equal supports and exponents."""
    variables = set(context.graph.occurrences())
    seen = {}
    for seed in context.graph.nodes:
        for v in context.monomials():
            g = monomial_gvector(seed, v)
            monomial = cluster_monomial(seed, v)
            support = frozenset((x, a) for x, a in zip(seed.cluster, v) if a)
            if sum(v) > 1 and monomial in variables:
                yield _witness(seed, v=v, reason="cluster monomial of degree > 1 equals a cluster variable")
            if g not in seen:
                seen[g] = (monomial, support, seed, v)
                continue
            other, other_support, other_seed, other_v = seen[g]
            if other != monomial or other_support != support:
                yield _witness(seed, v=v, g=g, other_path=list(other_seed.path), other_v=other_v)


@register("proper-laurent-monomials", "invariants")
def proper_laurent_monomials(context):
    """Cluster monomials outside the initial cluster expand into proper Laurent monomials only."""
    for seed in context.graph.nodes:
        for v in context.monomials():
            if all(x in context.root.cluster for x, a in zip(seed.cluster, v) if a):
                continue
            if not proper_laurent_check(seed, v, context.root):
                yield _witness(seed, v=v)


# explorer


@register("witness-paths", "explorer")
def witness_paths(context):
    """Replaying the witness path of a node from the root reproduces its seed."""
    for seed in context.graph.nodes:
        if context.root.mutate_path(seed.path) != seed:
            yield _witness(seed)


@register("degree-regularity", "explorer", requires_complete=True)
def degree_regularity(context):
    """Every node has exactly one edge per mutation slot."""
    slots = {}
    for i, k, _ in context.graph.edges:
        slots.setdefault(i, []).append(k)
    for i, seed in enumerate(context.graph.nodes):
        if sorted(slots.get(i, [])) != list(range(1, context.rank + 1)):
            yield _witness(seed, slots=sorted(slots.get(i, [])))


@register("cluster-determines-seed", "explorer")
def cluster_determines_seed(context):
    """No two non-equivalent seeds share a cluster."""
    seen = {}
    for seed in context.graph.nodes:
        cluster = frozenset(seed.cluster)
        if cluster in seen:
            yield _witness(seed, other_path=list(seen[cluster].path))
        seen.setdefault(cluster, seed)


@register("connectedness", "explorer", requires_complete=True)
def connectedness(context):
    """Seeds containing any given set of cluster variables form a connected subgraph."""
    variables = context.variables()
    for size in range(1, context.rank + 1):
        for subset in itertools.combinations(variables, size):
            if not seeds_containing(context.graph, subset).is_connected():
                yield {"variables": [str(x) for x in subset]}


@register("restricted-reachability", "explorer", requires_complete=True)
def restricted_reachability(context):
    """Labeled and equivalence quotient I-restricted searches reach the same seed classes."""
    for subset in context.subsets():
        labeled = {canonical_key(seed) for seed in context.restricted(subset).nodes}
        quotient = set(explore(context.root, limit=context.limit, directions=subset).keys)
        if labeled != quotient:
            yield {
                "subset": list(subset),
                "labeled_only": len(labeled - quotient),
                "quotient_only": len(quotient - labeled),
            }


# gpairs


@register("gpair-existence-uniqueness", "gpairs", requires_complete=True)
def gpair_existence_uniqueness(context):
    """Every seed has exactly one g-pair partner along every index subset."""
    for index, seed in enumerate(context.graph.nodes):
        for subset in context.subsets():
            try:
                context.certificate(index, subset)
            except TheoremViolation as e:
                yield _witness(seed, subset=list(subset), error=e.as_dict())


@register("gpair-row-sign", "gpairs", requires_complete=True)
def gpair_row_sign(context):
    """Along a single index ``k`` the matrix ``Q`` is plus or minus row ``k`` of the source G-matrix."""
    for index, seed in enumerate(context.graph.nodes):
        for k in range(1, context.rank + 1):
            row = context.certificate(index, (k,)).qmat.row(0)
            expected = gmatrix(seed).row(k - 1)
            if row != expected and row != tuple(-a for a in expected):
                yield _witness(seed, subset=[k], Q=list(row), row=list(expected))


@register("gpair-monomial-matching", "gpairs", requires_complete=True)
def gpair_monomial_matching(context):
    """The partner monomial built from ``Q`` has the same g-vector projected to ``I``."""
    for index, seed in enumerate(context.graph.nodes):
        for subset in context.subsets():
            cert = context.certificate(index, subset)
            rows = [i - 1 for i in subset]
            for v in context.monomials():
                projected = cert.qmat @ v
                partner_v = [0] * context.rank
                for i, a in zip(rows, projected):
                    partner_v[i] = a
                source_g = monomial_gvector(seed, v)
                partner_g = monomial_gvector(cert.partner, partner_v)
                if [source_g[i] for i in rows] != [partner_g[i] for i in rows]:
                    yield _witness(seed, subset=list(subset), v=v, partner_v=partner_v)


@register("gpair-trichotomy", "gpairs", requires_complete=True)
def gpair_trichotomy(context):
    """Signs of ``R`` along ``[1,n]\\{k}`` agree with the d-vectors with respect to the partner."""
    for index, seed in enumerate(context.graph.nodes):
        for k in range(1, context.rank + 1):
            subset = tuple(i for i in range(1, context.rank + 1) if i != k)
            cert = context.certificate(index, subset)
            for i in range(1, context.rank + 1):
                try:
                    gpair_dvector_classify(cert, i)
                except TheoremViolation as e:
                    yield _witness(seed, k=k, i=i, error=e.as_dict())


@register("gpair-r-nonnegative", "gpairs", requires_complete=True)
def gpair_r_nonnegative(context):
    """Along ``[1,n]\\{k}`` every row of ``R`` other than row ``k`` is nonnegative."""
    for index, seed in enumerate(context.graph.nodes):
        for k in range(1, context.rank + 1):
            subset = tuple(i for i in range(1, context.rank + 1) if i != k)
            cert = context.certificate(index, subset)
            r = rmatrix(cert.partner, cert.source)
            if any(a < 0 for j, row in enumerate(r.rows) if j != k - 1 for a in row):
                yield _witness(seed, k=k, R=r)


# compat


@register("degree-well-defined", "compat", requires_complete=True)
def degree_well_defined(context):
    """The compatibility degree does not depend on the cluster chosen for the first variable."""
    for a, b in itertools.product(context.variables(), repeat=2):
        try:
            compatibility_degree(context.graph, a, b, audit=True)
        except TheoremViolation as e:
            yield {"a": a, "b": b, "error": e.as_dict()}


@register("degree-trichotomy", "compat", requires_complete=True)
def degree_trichotomy(context):
    """d-vector entries are -1 for equal, 0 for compatible and positive for incompatible variables."""
    variables = context.variables()
    for anchor, seed in enumerate(context.graph.nodes):
        for x in variables:
            target, slot = context.first_occurrence(x)
            d = dvector_direct(context.relative(anchor, target).cluster[slot - 1])
            for j, y in enumerate(seed.cluster):
                if x == y:
                    ok = d[j] == -1
                elif context.cocluster(x, y):
                    ok = d[j] == 0
                else:
                    ok = d[j] > 0
                if not ok:
                    yield _witness(seed, variable=x, slot=j + 1, d=d)


@register("degree-sign-symmetry", "compat", requires_complete=True)
def degree_sign_symmetry(context):
    """Degrees ``d(a, b)`` and ``d(b, a)`` are both -1, both 0 or both positive."""
    degrees = context.degrees()
    variables = context.variables()
    for i, j in itertools.product(range(len(variables)), repeat=2):
        a, b = degrees[i, j], degrees[j, i]
        if (a == -1) != (i == j) or (a == 0) != (b == 0) or (a <= 0) != (b <= 0):
            yield {"a": variables[i], "b": variables[j], "degrees": [a, b]}


@register("maximal-compatible-sets", "compat", requires_complete=True)
def maximal_compatible_sets_are_clusters(context):
    """Maximal compatible sets are exactly the clusters."""
    sets = {frozenset(s) for s in maximal_compatible_sets(context.graph)}
    clusters = {frozenset(seed.cluster) for seed in context.graph.nodes}
    for s in sorted(sets - clusters, key=lambda s: sorted(str(x) for x in s)):
        yield {"extra": sorted(str(x) for x in s)}
    for s in sorted(clusters - sets, key=lambda s: sorted(str(x) for x in s)):
        yield {"missing": sorted(str(x) for x in s)}


@register("exchange-pairs", "compat", requires_complete=True)
def exchange_pairs(context):
    """Clusters sharing all but one variable differ by a single mutation."""
    for s, t in itertools.combinations(context.graph.nodes, 2):
        rest = [x for x in s.cluster if x not in t.cluster]
        if len(rest) != 1:
            continue
        k = s.index_of(rest[0])
        (other,) = [x for x in t.cluster if x not in s.cluster]
        if s.mutate(k).cluster[k - 1] != other:
            yield _witness(s, other_path=list(t.path), slot=k)


@register("pairwise-implies-global", "compat", requires_complete=True)
def pairwise_implies_global(context):
    """Every pairwise compatible set of variables lies in a common cluster."""
    degrees = context.degrees()
    variables = context.variables()
    compatible = nx.Graph()
    compatible.add_nodes_from(range(len(variables)))
    compatible.add_edges_from(
        (i, j) for i, j in itertools.combinations(range(len(variables)), 2) if degrees[i, j] <= 0 and degrees[j, i] <= 0
    )
    for clique in nx.enumerate_all_cliques(compatible):
        members = [variables[i] for i in clique]
        if not any(all(x in seed.cluster for x in members) for seed in context.graph.nodes):
            yield {"variables": [str(x) for x in members]}

