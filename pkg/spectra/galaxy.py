"""
Galaxies

A galaxy is K2, or a tree T[A] made of a spine path x_1 ... x_n (n >= 3) with
a_{i-1} pendant leaves hanging from every internal spine vertex x_i. This
module builds T[A], recognizes galaxies through the leaf-deletion
(caterpillar) characterization, decomposes them canonically and produces the
labeling that gives every vertex of a galaxy an interval spectrum.
"""

from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from .errors import Disconnected, EmptySequence, NotAGalaxy, NotAnEdge
from .graph import Edge, Graph, bfs_distances, eccentricities, is_connected, is_tree
from .labeling import Labeling


class GalaxyKind(str, Enum):
    """The two branches of the galaxy definition"""
    K2 = "k2"
    SPINE = "spine"


class GalaxyDecomposition(BaseModel):
    """Witness that a graph is K2 or some T[A]"""

    model_config = ConfigDict(frozen=True)

    kind: GalaxyKind
    n: int  # spine length; 2 for K2
    pendant_counts: Tuple[int, ...]
    spine: Tuple[int, ...]
    pendants: Dict[int, Tuple[int, ...]]  # spine position (1-based, 2..n-1) -> leaves

    def vertex_total(self) -> int:
        return self.n + sum(self.pendant_counts)


def canonical_pendant_counts(a: Sequence[int]) -> Tuple[int, ...]:
    """The lexicographically smaller of A and its reverse"""
    forward = tuple(a)
    return min(forward, forward[::-1])


def iter_pendant_sequences(order_limit: int) -> Iterator[Tuple[int, ...]]:
    """Every A (length >= 1) whose T[A] has at most `order_limit` vertices"""

    def extend(prefix: Tuple[int, ...], budget: int) -> Iterator[Tuple[int, ...]]:
        # budget: vertices still available after the spine of the current length
        if prefix:
            yield prefix
        if budget < 1:
            return
        # one more spine vertex costs 1, plus its pendants
        for a in range(budget):
            yield from extend(prefix + (a,), budget - 1 - a)

    # T[(a_1)] has 3 spine vertices; each extra entry adds one spine vertex
    if order_limit < 3:
        return
    for a in range(order_limit - 2):
        yield from extend((a,), order_limit - 3 - a)


def build_galaxy(a: Sequence[int]) -> Tuple[Graph, GalaxyDecomposition]:
    """T[A]: spine x_1..x_n first, then pendant blocks in increasing spine position"""
    counts = tuple(int(value) for value in a)
    if not counts:
        raise EmptySequence("T[A] needs a sequence of length n - 2 >= 1")
    if any(value < 0 for value in counts):
        raise EmptySequence("pendant counts must be nonnegative", counts=list(counts))
    n = len(counts) + 2
    edges: List[Edge] = [(i, i + 1) for i in range(n - 1)]
    pendants: Dict[int, Tuple[int, ...]] = {}
    next_vertex = n
    for position in range(2, n):
        block = tuple(range(next_vertex, next_vertex + counts[position - 2]))
        edges.extend((position - 1, y) for y in block)
        pendants[position] = block
        next_vertex += len(block)
    graph = Graph(vertex_count=next_vertex, edges=tuple(edges))
    spine = tuple(range(n))
    if canonical_pendant_counts(counts) != counts:
        spine = spine[::-1]
        pendants = {n + 1 - position: block for position, block in pendants.items()}
        counts = counts[::-1]
    return graph, GalaxyDecomposition(
        kind=GalaxyKind.SPINE, n=n, pendant_counts=counts, spine=spine,
        pendants=dict(sorted(pendants.items())),
    )


def is_galaxy(h: Graph) -> bool:
    """K2, or a tree on >= 3 vertices whose leaf-deleted graph is a path"""
    if not is_connected(h):
        raise Disconnected("galaxy recognition needs a connected graph")
    if h.vertex_count == 2:
        return True
    if h.vertex_count < 2 or not is_tree(h):
        return False
    adjacency = h.adjacency
    core = {x for x, row in enumerate(adjacency) if len(row) >= 2}
    return all(sum(1 for v, _ in adjacency[x] if v in core) <= 2 for x in core)


def _tree_path(h: Graph, source: int, target: int) -> Tuple[int, ...]:
    parent = {source: source}
    frontier = [source]
    while frontier and target not in parent:
        nxt = []
        for u in frontier:
            for v in sorted(w for w, _ in h.adjacency[u]):
                if v not in parent:
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def _spine_decomposition(h: Graph, spine: Tuple[int, ...]) -> Optional[GalaxyDecomposition]:
    n = len(spine)
    on_spine = set(spine)
    pendants: Dict[int, Tuple[int, ...]] = {}
    for position in range(2, n):
        x = spine[position - 1]
        block = tuple(sorted(v for v, _ in h.adjacency[x] if v not in on_spine))
        if any(len(h.adjacency[y]) != 1 for y in block):
            return None
        pendants[position] = block
    if n + sum(len(block) for block in pendants.values()) != h.vertex_count:
        return None
    return GalaxyDecomposition(
        kind=GalaxyKind.SPINE, n=n,
        pendant_counts=tuple(len(pendants[p]) for p in range(2, n)),
        spine=spine, pendants=pendants,
    )


def decompose_galaxy(h: Graph) -> GalaxyDecomposition:
    """Canonical witness decomposition; the spine is a longest path of h"""
    if h.vertex_count < 2 or not is_galaxy(h):
        raise NotAGalaxy("graph is not a galaxy", vertices=h.vertex_count, edges=h.edge_count)
    if h.vertex_count == 2:
        return GalaxyDecomposition(
            kind=GalaxyKind.K2, n=2, pendant_counts=(), spine=(0, 1), pendants={}
        )
    ecc = eccentricities(h)
    diam = max(ecc)
    first = min(x for x, e in enumerate(ecc) if e == diam)
    dist = bfs_distances(h, first)
    last = min(y for y, d in enumerate(dist) if d == diam)
    decomposition = _spine_decomposition(h, _tree_path(h, first, last))
    if decomposition is None:
        raise NotAGalaxy("longest path is not a spine")
    counts = decomposition.pendant_counts
    if canonical_pendant_counts(counts) != counts:
        n = decomposition.n
        decomposition = GalaxyDecomposition(
            kind=GalaxyKind.SPINE, n=n, pendant_counts=counts[::-1],
            spine=decomposition.spine[::-1],
            pendants={n + 1 - p: decomposition.pendants[p] for p in range(n - 1, 1, -1)},
        )
    return decomposition


def galaxy_labeling(h: Graph, decomposition: Optional[GalaxyDecomposition] = None) -> Labeling:
    """
    Bijective labeling with U(h, f) = V(h).

    Walks the spine with a counter: the entering spine edge, then the pendant
    edges of x_i, then the leaving spine edge, so every internal spine vertex
    sees one consecutive block and every other vertex a single label.
    """
    if decomposition is None:
        decomposition = decompose_galaxy(h)
    elif decomposition.vertex_total() != h.vertex_count:
        raise NotAGalaxy("decomposition does not cover the graph")
    labels = [0] * h.edge_count
    counter = 1
    spine = decomposition.spine
    try:
        labels[h.edge_index(spine[0], spine[1])] = counter
        counter += 1
        for position in range(2, decomposition.n):
            x = spine[position - 1]
            for y in decomposition.pendants.get(position, ()):
                labels[h.edge_index(x, y)] = counter
                counter += 1
            labels[h.edge_index(x, spine[position])] = counter
            counter += 1
    except NotAnEdge as exc:
        raise NotAGalaxy(f"decomposition does not match the graph: {exc}") from exc
    if counter != h.edge_count + 1:
        raise NotAGalaxy("decomposition leaves edges unlabeled")
    return Labeling(labels=tuple(labels))
