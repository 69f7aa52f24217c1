"""
Structure Classification of G^(f,int)

This module classifies every connected component of the subgraph induced by
the interval-spectrum vertices: an isolated vertex, or a galaxy whose leaves
that are not host leaves number zero (case a), one peripheral vertex (case b)
or two vertices at diametral distance (case c). Anything else is returned as
a Violation value, because finding one is the purpose of the tool.

It also carries the per-labeling checkers for the supporting claims: adjacent
interval vertices share exactly one label, interval chains through vertices
of host degree >= 2 are monotone, an interval vertex has at most two interval
neighbors of host degree >= 2, G^(f,int) is a forest, leafless hosts yield
simple paths and complete hosts yield K1 or K2.
"""

from typing import List, Sequence

from .errors import ChainBroken, Disconnected, InvalidVertex, LabelCountMismatch, NotEligible
from .galaxy import is_galaxy
from .graph import (
    Graph,
    components,
    diameter_and_peripherals,
    distance,
    induced_subgraph,
    is_forest,
    leaves,
    max_degree,
)
from .labeling import LabelInput, as_labels, interval_flags, interval_induced_subgraph, spectra
from .models.verdict import (
    ComponentClass,
    ComponentVerdict,
    Direction,
    GalaxyCaseA,
    GalaxyCaseB,
    GalaxyCaseC,
    IsolatedVertex,
    LemmaReport,
    Overall,
    TheoremVerdict,
    Violation,
    ViolationReason,
)


def _labels_for(g: Graph, f: LabelInput) -> Sequence[int]:
    labels = as_labels(f)
    if len(labels) != g.edge_count:
        raise LabelCountMismatch(
            f"labeling has {len(labels)} labels for {g.edge_count} edges",
            labels=len(labels), edges=g.edge_count,
        )
    return labels


def classify_component(g_host: Graph, h: Graph, host_map: Sequence[int]) -> ComponentClass:
    """Classify one connected component h of G^(f,int)"""
    if h.vertex_count == 1:
        vertex = host_map[0]
        return IsolatedVertex(vertex=vertex, is_host_leaf=g_host.degree(vertex) == 1)

    witness = {
        "host_vertices": list(host_map),
        "host_edges": [[host_map[u], host_map[v]] for u, v in h.edges],
    }
    try:
        galaxy = is_galaxy(h)
    except Disconnected:
        galaxy = False
    if not galaxy:
        return Violation(reason=ViolationReason.NOT_GALAXY, witness=witness)

    bad = [x for x in leaves(h) if g_host.degree(host_map[x]) >= 2]
    if not bad:
        return GalaxyCaseA()

    diam, peripherals = diameter_and_peripherals(h)
    if len(bad) == 1:
        b = bad[0]
        if b in peripherals:
            return GalaxyCaseB(bad_leaf=host_map[b])
        witness.update(bad_leaf=host_map[b], diameter=diam)
        return Violation(reason=ViolationReason.BAD_LEAF_NOT_PERIPHERAL, witness=witness)

    if len(bad) == 2:
        b1, b2 = bad
        pair_distance = distance(h, b1, b2)
        if pair_distance == diam:
            return GalaxyCaseC(bad_pair=(host_map[b1], host_map[b2]), pair_distance=pair_distance)
        witness.update(bad_pair=[host_map[b1], host_map[b2]], pair_distance=pair_distance, diameter=diam)
        return Violation(reason=ViolationReason.PAIR_NOT_DIAMETRAL, witness=witness)

    witness.update(bad_leaves=[host_map[x] for x in bad])
    return Violation(reason=ViolationReason.TOO_MANY_BAD_LEAVES, witness=witness)


def check_theorem(g: Graph, f: LabelInput) -> TheoremVerdict:
    """Assemble G^(f,int), test it is a forest and classify each component"""
    labels = _labels_for(g, f)
    sub = interval_induced_subgraph(g, labels)
    if sub.graph.vertex_count == 0:
        return TheoremVerdict(lambda_member=False, is_forest=True, components=[], overall=Overall.VACUOUS)

    forest = is_forest(sub.graph)
    verdicts: List[ComponentVerdict] = []
    for members in components(sub.graph):
        piece = induced_subgraph(sub.graph, members)
        host_map = tuple(sub.vertex_map[v] for v in piece.vertex_map)
        verdicts.append(
            ComponentVerdict(
                host_vertices=host_map,
                classification=classify_component(g, piece.graph, host_map),
            )
        )
    violated = not forest or any(v.classification.kind == "violation" for v in verdicts)
    return TheoremVerdict(
        lambda_member=True,
        is_forest=forest,
        components=verdicts,
        overall=Overall.VIOLATION if violated else Overall.HOLDS,
    )


def check_lemma_adjacent_overlap(g: Graph, f: LabelInput) -> LemmaReport:
    """Every host edge inside U joins two spectra that share exactly one label"""
    labels = _labels_for(g, f)
    flags = interval_flags(g, labels)
    table = spectra(g, labels)
    report = LemmaReport(name="adjacent_overlap")
    for index, (u, v) in enumerate(g.edges):
        if not (flags[u] and flags[v]):
            continue
        report.checked += 1
        shared = sorted(set(table[u]) & set(table[v]))
        if len(shared) != 1:
            report.failures.append({"edge": index, "ends": [u, v], "shared": shared})
    return report


def check_chain_monotonicity(g: Graph, f: LabelInput, chain: Sequence[int]) -> Direction:
    """
    Decide which of the two chaining statements holds along `chain`.

    Spectra are taken in the host graph. Raises NotEligible when the chain
    leaves U ∩ V''(G) or skips a non-edge, ChainBroken when neither holds.
    """
    labels = _labels_for(g, f)
    if len(chain) < 2:
        raise NotEligible("a chain needs at least two vertices", chain=list(chain))
    flags = interval_flags(g, labels)
    for x in chain:
        try:
            g.check_vertex(x)
        except InvalidVertex as exc:
            raise NotEligible(str(exc), vertex=x) from exc
        if not flags[x] or g.degree(x) < 2:
            raise NotEligible(f"vertex {x} is not in U(G,f) ∩ V''(G)", vertex=x)
    for u, v in zip(chain, chain[1:]):
        if not g.has_edge(u, v):
            raise NotEligible(f"({u}, {v}) is not an edge", u=u, v=v)

    table = spectra(g, labels)
    steps = [(labels[g.edge_index(u, v)], table[u], table[v]) for u, v in zip(chain, chain[1:])]
    if all(c == su[-1] == sv[0] for c, su, sv in steps):
        return Direction.ASCENDING
    if all(c == su[0] == sv[-1] for c, su, sv in steps):
        return Direction.DESCENDING
    raise ChainBroken("neither chaining statement holds", chain=list(chain))


def check_chain_pairs(g: Graph, f: LabelInput) -> LemmaReport:
    """Chain monotonicity on every host edge with both ends in U ∩ V''(G)"""
    labels = _labels_for(g, f)
    flags = interval_flags(g, labels)
    report = LemmaReport(name="chain_monotonicity")
    for u, v in g.edges:
        if flags[u] and flags[v] and g.degree(u) >= 2 and g.degree(v) >= 2:
            report.checked += 1
            try:
                check_chain_monotonicity(g, labels, (u, v))
            except ChainBroken:
                report.failures.append({"chain": [u, v]})
    return report


def check_lemma_neighbor_bound(g: Graph, f: LabelInput) -> LemmaReport:
    """Each interval vertex has at most two interval neighbors of host degree >= 2"""
    labels = _labels_for(g, f)
    flags = interval_flags(g, labels)
    report = LemmaReport(name="neighbor_bound")
    for x, row in enumerate(g.adjacency):
        if not flags[x]:
            continue
        report.checked += 1
        heavy = sorted(v for v, _ in row if flags[v] and len(g.adjacency[v]) >= 2)
        if len(heavy) > 2:
            report.failures.append({"vertex": x, "neighbors": heavy})
    return report


def check_forest(g: Graph, f: LabelInput) -> LemmaReport:
    """G^(f,int) has no cycle"""
    sub = interval_induced_subgraph(g, _labels_for(g, f))
    report = LemmaReport(name="interval_forest", checked=1)
    if not is_forest(sub.graph):
        report.failures.append({"host_vertices": list(sub.vertex_map)})
    return report


def check_leafless_components(g: Graph, f: LabelInput) -> LemmaReport:
    """On a host without leaves, every component of G^(f,int) is a simple path"""
    report = LemmaReport(name="leafless_paths")
    if leaves(g):
        return report
    sub = interval_induced_subgraph(g, _labels_for(g, f))
    for members in components(sub.graph):
        piece = induced_subgraph(sub.graph, members)
        report.checked += 1
        if max_degree(piece.graph) > 2 or not is_forest(piece.graph):
            report.failures.append(
                {"host_vertices": [sub.vertex_map[v] for v in piece.vertex_map]}
            )
    return report


def is_complete(g: Graph) -> bool:
    n = g.vertex_count
    return g.edge_count == n * (n - 1) // 2


def check_complete_host_bound(g: Graph, f: LabelInput) -> LemmaReport:
    """On a complete host, G^(f,int) is K1 or K2"""
    report = LemmaReport(name="complete_host_bound")
    if not is_complete(g):
        return report
    sub = interval_induced_subgraph(g, _labels_for(g, f))
    if sub.graph.vertex_count == 0:
        return report
    report.checked = 1
    if sub.graph.vertex_count > 2 or len(components(sub.graph)) != 1:
        report.failures.append({"host_vertices": list(sub.vertex_map)})
    return report


def lemma_suite(g: Graph, f: LabelInput) -> List[LemmaReport]:
    """Every per-labeling structural check that does not involve gradient paths"""
    return [
        check_lemma_adjacent_overlap(g, f),
        check_chain_pairs(g, f),
        check_lemma_neighbor_bound(g, f),
        check_forest(g, f),
        check_leafless_components(g, f),
        check_complete_host_bound(g, f),
    ]
