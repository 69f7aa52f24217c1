"""
Gradient Paths

A gradient path is a simple path inside G^(f,int) along which the label of
each edge is the largest label at its tail and the smallest label at its head
(ascending), or the mirrored statement (descending). Spectra here are always
taken inside G^(f,int), never in the host.

This module enumerates gradient paths, computes the maximal ones by greedy
two-ended extension and checks that every gradient path, and every edge
between two vertices of degree >= 2 in G^(f,int), lies in exactly one
maximal path.
"""

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidPath, InvariantFailure, NotInLambda, TruncatedOutput
from .graph import Graph
from .labeling import LabelInput, as_labels, interval_flags
from .models.paths import GradientPath
from .models.verdict import Direction, LemmaReport


class InducedSpectra:
    """Spectra and label-indexed neighborhoods inside G^(f,int)"""

    def __init__(self, g: Graph, f: LabelInput):
        self.graph = g
        self.labels = as_labels(f)
        flags = interval_flags(g, self.labels)
        self.members = frozenset(x for x, flag in enumerate(flags) if flag)
        # x -> {label: neighbor} over edges that stay inside U
        self.by_label: Dict[int, Dict[int, int]] = {}
        self.spectrum: Dict[int, Tuple[int, ...]] = {}
        for x in sorted(self.members):
            row = {self.labels[e]: v for v, e in g.adjacency[x] if v in self.members}
            self.by_label[x] = row
            self.spectrum[x] = tuple(sorted(row))

    def label(self, u: int, v: int) -> int:
        return self.labels[self.graph.edge_index(u, v)]

    def neighbors(self, x: int) -> List[int]:
        return sorted(self.by_label[x].values())

    def trivial_direction(self, x0: int, x1: int) -> Optional[Tuple[Direction, bool]]:
        """Direction of the trivial path (x0, x1) and whether the tie rule decided it"""
        if x0 not in self.members or x1 not in self.members:
            return None
        c = self.label(x0, x1)
        s0, s1 = self.spectrum[x0], self.spectrum[x1]
        ascending = c == s0[-1] == s1[0]
        descending = c == s0[0] == s1[-1]
        if ascending and descending:
            return (Direction.ASCENDING if x0 < x1 else Direction.DESCENDING), True
        if ascending:
            return Direction.ASCENDING, False
        if descending:
            return Direction.DESCENDING, False
        return None

    def step(self, x: int, direction: Direction, forward: bool) -> Optional[Tuple[int, int]]:
        """
        The unique neighbor continuing a path through x, with its edge label.

        forward=True extends at the head, forward=False at the tail.
        """
        s = self.spectrum[x]
        if len(s) < 2:
            return None
        # ascending head and descending tail leave x through its largest label
        leave_high = (direction is Direction.ASCENDING) == forward
        c = s[-1] if leave_high else s[0]
        y = self.by_label[x][c]
        t = self.spectrum[y]
        if (t[0] if leave_high else t[-1]) != c:
            return None
        return y, c


def _context(g: Graph, f: LabelInput) -> InducedSpectra:
    ctx = InducedSpectra(g, f)
    if not ctx.members:
        raise NotInLambda("U(G,f) is empty, so f is not in λ(G)")
    return ctx


def is_trivial_gradient_path(g: Graph, f: LabelInput, x0: int, x1: int) -> Optional[Direction]:
    """Direction of the trivial gradient path (x0, x1), or None"""
    g.edge_index(x0, x1)
    decided = InducedSpectra(g, f).trivial_direction(x0, x1)
    return decided[0] if decided else None


def _as_path(ctx: InducedSpectra, vertices: Sequence[int]) -> Optional[GradientPath]:
    vertices = tuple(vertices)
    if len(vertices) < 2 or len(set(vertices)) != len(vertices):
        return None
    if any(x not in ctx.members for x in vertices):
        return None
    if any(not ctx.graph.has_edge(u, v) for u, v in zip(vertices, vertices[1:])):
        return None
    labels = tuple(ctx.label(u, v) for u, v in zip(vertices, vertices[1:]))
    if len(vertices) == 2:
        decided = ctx.trivial_direction(*vertices)
        if decided is None:
            return None
        return GradientPath(vertices=vertices, direction=decided[0], edge_labels=labels, tie_rule=decided[1])
    s = ctx.spectrum
    steps = list(zip(labels, vertices, vertices[1:]))
    ascending = all(c == s[u][-1] == s[v][0] for c, u, v in steps)
    descending = all(c == s[u][0] == s[v][-1] for c, u, v in steps)
    if ascending == descending:
        return None
    direction = Direction.ASCENDING if ascending else Direction.DESCENDING
    return GradientPath(vertices=vertices, direction=direction, edge_labels=labels)


def is_gradient_path(g: Graph, f: LabelInput, vertices: Sequence[int]) -> Optional[GradientPath]:
    """The gradient path on `vertices` if the definition holds, else None"""
    return _as_path(InducedSpectra(g, f), vertices)


def _iter_paths(ctx: InducedSpectra) -> Iterator[GradientPath]:
    # preorder with sorted neighbors yields lexicographic order of vertex sequences
    for x0 in sorted(ctx.members):
        for x1 in ctx.neighbors(x0):
            decided = ctx.trivial_direction(x0, x1)
            if decided is None:
                continue
            direction, tie = decided
            vertices = [x0, x1]
            labels = [ctx.label(x0, x1)]
            yield GradientPath(vertices=tuple(vertices), direction=direction, edge_labels=tuple(labels), tie_rule=tie)
            while True:
                nxt = ctx.step(vertices[-1], direction, forward=True)
                if nxt is None or nxt[0] in vertices:
                    break
                vertices.append(nxt[0])
                labels.append(nxt[1])
                yield GradientPath(vertices=tuple(vertices), direction=direction, edge_labels=tuple(labels))


def enumerate_gradient_paths(g: Graph, f: LabelInput, max_count: Optional[int] = None) -> List[GradientPath]:
    """Every gradient path in lexicographic order; TruncatedOutput past `max_count`"""
    ctx = _context(g, f)
    paths: List[GradientPath] = []
    for path in _iter_paths(ctx):
        if max_count is not None and len(paths) >= max_count:
            raise TruncatedOutput(
                f"more than {max_count} gradient paths", partial=paths, max_count=max_count
            )
        paths.append(path)
    return paths


def _extend(ctx: InducedSpectra, path: GradientPath) -> GradientPath:
    """Grow an Ascending path at both ends until no extension exists"""
    vertices = list(path.vertices)
    labels = list(path.edge_labels)
    while True:
        nxt = ctx.step(vertices[-1], Direction.ASCENDING, forward=True)
        if nxt is None or nxt[0] in vertices:
            break
        vertices.append(nxt[0])
        labels.append(nxt[1])
    while True:
        prv = ctx.step(vertices[0], Direction.ASCENDING, forward=False)
        if prv is None or prv[0] in vertices:
            break
        vertices.insert(0, prv[0])
        labels.insert(0, prv[1])
    if len(vertices) == len(path.vertices):
        return path
    return GradientPath(vertices=tuple(vertices), direction=Direction.ASCENDING, edge_labels=tuple(labels))


def _maximal(ctx: InducedSpectra) -> List[GradientPath]:
    found: Dict[Tuple[int, ...], GradientPath] = {}
    for x0 in sorted(ctx.members):
        for x1 in ctx.neighbors(x0):
            decided = ctx.trivial_direction(x0, x1)
            if decided is None or decided[0] is not Direction.ASCENDING:
                continue
            seed = GradientPath(
                vertices=(x0, x1), direction=Direction.ASCENDING,
                edge_labels=(ctx.label(x0, x1),), tie_rule=decided[1],
            )
            grown = _extend(ctx, seed)
            found.setdefault(grown.vertices, grown)
    return [found[key] for key in sorted(found)]


def maximal_gradient_paths(g: Graph, f: LabelInput) -> List[GradientPath]:
    """Maximal gradient paths, one Ascending representative per reversal pair"""
    return _maximal(_context(g, f))


def containing_maximal_path(g: Graph, f: LabelInput, p: GradientPath) -> GradientPath:
    """The unique maximal gradient path whose vertex set contains V(p), oriented like p"""
    ctx = _context(g, f)
    checked = _as_path(ctx, p.vertices)
    if checked is None or checked.direction is not p.direction:
        raise InvalidPath("not a gradient path", vertices=list(p.vertices))
    containers = [m for m in _maximal(ctx) if p.vertex_set <= m.vertex_set]
    if len(containers) != 1:
        raise InvariantFailure(
            f"{len(containers)} maximal gradient paths contain the path",
            vertices=list(p.vertices), containers=[list(m.vertices) for m in containers],
        )
    container = containers[0]
    return container if p.direction is Direction.ASCENDING else container.reversed()


def check_maximal_uniqueness(g: Graph, f: LabelInput) -> LemmaReport:
    """Every gradient path lies in exactly one maximal gradient path"""
    report = LemmaReport(name="maximal_path_uniqueness")
    ctx = InducedSpectra(g, f)
    if not ctx.members:
        return report
    maximal = _maximal(ctx)
    for path in _iter_paths(ctx):
        report.checked += 1
        count = sum(1 for m in maximal if path.vertex_set <= m.vertex_set)
        if count != 1:
            report.failures.append({"vertices": list(path.vertices), "containers": count})
    return report


def check_edge_cover_uniqueness(g: Graph, f: LabelInput) -> LemmaReport:
    """Each edge between vertices of degree >= 2 in G^(f,int) lies in exactly one maximal path"""
    report = LemmaReport(name="edge_cover_uniqueness")
    ctx = InducedSpectra(g, f)
    if not ctx.members:
        return report
    maximal = _maximal(ctx)
    for u, v in g.edges:
        if u in ctx.members and v in ctx.members and len(ctx.spectrum[u]) >= 2 and len(ctx.spectrum[v]) >= 2:
            report.checked += 1
            count = sum(1 for m in maximal if u in m.vertex_set and v in m.vertex_set)
            if count != 1:
                report.failures.append({"edge": [u, v], "containers": count})
    return report
