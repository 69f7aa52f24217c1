"""
Host Graph Representation

This module implements the undirected simple graphs every other module works
on: construction from edge lists, structural queries (degrees, distances,
diameter, peripheral vertices, components, forest tests, induced subgraphs)
and the two interchange formats (graph6 short form and edge-list text).

Vertices are dense 0-based indices. Edges carry stable indices equal to their
insertion order; labelings are arrays keyed by those indices.
"""

from collections import deque
from pathlib import Path
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeListSyntax,
    EmptyEdgeSet,
    InvalidVertex,
    LoopEdge,
    MalformedHeader,
    NotAnEdge,
    TruncatedBits,
    Unreachable,
)

Edge = Tuple[int, int]
VertexSet = Tuple[int, ...]

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62


class Graph(BaseModel):
    """Undirected simple graph with indexed vertices and edges"""

    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(ge=0)
    edges: Tuple[Edge, ...] = ()

    # per vertex: ((neighbor, edge index), ...) in edge order
    _adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = PrivateAttr(default=())
    _edge_lookup: Dict[Edge, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context: Any) -> None:
        rows: List[List[Tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        lookup: Dict[Edge, int] = {}
        for index, (u, v) in enumerate(self.edges):
            if u == v:
                raise LoopEdge(f"edge {index} is a loop at vertex {u}", edge=index, vertex=u)
            for w in (u, v):
                if not 0 <= w < self.vertex_count:
                    raise InvalidVertex(
                        f"edge {index} uses vertex {w} outside [0, {self.vertex_count})",
                        edge=index, vertex=w,
                    )
            key = (u, v) if u < v else (v, u)
            if key in lookup:
                raise DuplicateEdge(
                    f"edge {index} repeats edge {lookup[key]} {key}", edge=index, first=lookup[key]
                )
            lookup[key] = index
            rows[u].append((v, index))
            rows[v].append((u, index))
        self._adjacency = tuple(tuple(row) for row in rows)
        self._edge_lookup = lookup

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        return self._adjacency

    def check_vertex(self, x: int) -> None:
        if not 0 <= x < self.vertex_count:
            raise InvalidVertex(f"vertex {x} outside [0, {self.vertex_count})", vertex=x)

    def degree(self, x: int) -> int:
        self.check_vertex(x)
        return len(self._adjacency[x])

    def neighbors(self, x: int) -> VertexSet:
        """I_G(x), sorted"""
        self.check_vertex(x)
        return tuple(sorted(v for v, _ in self._adjacency[x]))

    def incident_edges(self, x: int) -> Tuple[int, ...]:
        """J_G(x) as edge indices"""
        self.check_vertex(x)
        return tuple(e for _, e in self._adjacency[x])

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._edge_lookup

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_lookup[key]
        except KeyError:
            raise NotAnEdge(f"({u}, {v}) is not an edge", u=u, v=v) from None

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edges={list(self.edges)})"


class InducedSubgraph(NamedTuple):
    """A derived graph plus the maps from its indices back to the host"""
    graph: Graph
    vertex_map: Tuple[int, ...]  # new vertex -> host vertex
    edge_map: Tuple[int, ...]    # new edge -> host edge


# Construction

def from_edge_list(pairs: Iterable[Sequence[int]], require_connected: bool = True) -> Graph:
    """Build a host graph; edge index = position in `pairs`"""
    edges = [(int(u), int(v)) for u, v in pairs]
    if not edges:
        raise EmptyEdgeSet("a host graph needs at least one edge")
    for index, (u, v) in enumerate(edges):
        if u < 0 or v < 0:
            raise InvalidVertex(f"edge {index} has a negative endpoint", edge=index)
    g = Graph(vertex_count=1 + max(max(u, v) for u, v in edges), edges=tuple(edges))
    if require_connected and not is_connected(g):
        raise Disconnected(
            f"host graph has {len(components(g))} components", components=len(components(g))
        )
    return g


def empty_graph() -> Graph:
    return Graph(vertex_count=0, edges=())


def complete_graph(n: int) -> Graph:
    return from_edge_list([(i, j) for j in range(n) for i in range(j)])


def path_graph(n: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list([(0, i) for i in range(1, leaves + 1)])


# Degrees

def degrees(g: Graph) -> Tuple[int, ...]:
    return tuple(len(row) for row in g.adjacency)


def leaves(g: Graph) -> VertexSet:
    """V'(G): vertices of degree exactly 1"""
    return tuple(x for x, row in enumerate(g.adjacency) if len(row) == 1)


def core_vertices(g: Graph) -> VertexSet:
    """V''(G): vertices of degree at least 2"""
    return tuple(x for x, row in enumerate(g.adjacency) if len(row) >= 2)


def max_degree(g: Graph) -> int:
    """Δ(G)"""
    return max((len(row) for row in g.adjacency), default=0)


# Distances

def bfs_distances(g: Graph, source: int) -> List[int]:
    """Distances from source; -1 marks unreachable vertices"""
    g.check_vertex(source)
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        for v, _ in adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(g: Graph, x: int, y: int) -> int:
    """d_G(x, y)"""
    g.check_vertex(y)
    d = bfs_distances(g, x)[y]
    if d < 0:
        raise Unreachable(f"no path between {x} and {y}", x=x, y=y)
    return d


def eccentricities(g: Graph) -> Tuple[int, ...]:
    result = []
    for x in range(g.vertex_count):
        dist = bfs_distances(g, x)
        if min(dist) < 0:
            y = dist.index(-1)
            raise Unreachable(f"no path between {x} and {y}", x=x, y=y)
        result.append(max(dist))
    return tuple(result)


def diameter_and_peripherals(g: Graph) -> Tuple[int, VertexSet]:
    """diam(G) and every vertex realizing it against some other vertex"""
    if g.vertex_count == 0:
        raise InvalidVertex("the empty graph has no diameter")
    ecc = eccentricities(g)
    diam = max(ecc)
    return diam, tuple(x for x, e in enumerate(ecc) if e == diam)


# Components and subgraphs

def components(g: Graph) -> List[VertexSet]:
    """Connected components, each sorted, ordered by least member"""
    seen = [False] * g.vertex_count
    result: List[VertexSet] = []
    adjacency = g.adjacency
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, _ in adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    members.append(v)
                    queue.append(v)
        result.append(tuple(sorted(members)))
    return result


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    """Every component has |E| = |V| - 1"""
    return g.edge_count == g.vertex_count - len(components(g))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.vertex_count - 1


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    """Subgraph on `s` with every host edge whose ends both lie in `s`"""
    vertex_map = tuple(sorted(set(s)))
    for x in vertex_map:
        g.check_vertex(x)
    position = {x: i for i, x in enumerate(vertex_map)}
    edges: List[Edge] = []
    edge_map: List[int] = []
    for index, (u, v) in enumerate(g.edges):
        if u in position and v in position:
            edges.append((position[u], position[v]))
            edge_map.append(index)
    return InducedSubgraph(
        Graph(vertex_count=len(vertex_map), edges=tuple(edges)), vertex_map, tuple(edge_map)
    )


def component_subgraphs(g: Graph) -> List[InducedSubgraph]:
    return [induced_subgraph(g, members) for members in components(g)]


# graph6

def _graph6_payload(text: Union[str, bytes]) -> str:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def parse_graph6(text: Union[str, bytes], require_connected: bool = False) -> Graph:
    """Decode a short-form graph6 record (n <= 62)"""
    s = _graph6_payload(text)
    if not s:
        raise MalformedHeader("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedHeader(f"character {ch!r} outside the graph6 range", character=ch)
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise MalformedHeader("long-form graph6 headers (n > 62) are not supported")
    bit_count = n * (n - 1) // 2
    byte_count = (bit_count + 5) // 6
    data = s[1:]
    if len(data) < byte_count:
        raise TruncatedBits(
            f"expected {byte_count} data bytes for n={n}, found {len(data)}",
            expected=byte_count, found=len(data),
        )
    if len(data) > byte_count:
        raise MalformedHeader(f"{len(data) - byte_count} trailing bytes after the bit field")
    bits: List[int] = []
    for ch in data:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise MalformedHeader("nonzero padding bits")
    edges: List[Edge] = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    g = Graph(vertex_count=n, edges=tuple(edges))
    if require_connected and not is_connected(g):
        raise Disconnected("graph6 record describes a disconnected graph")
    return g


def serialize_graph6(g: Graph) -> str:
    """Encode as a short-form graph6 record without header or newline"""
    n = g.vertex_count
    if n > GRAPH6_MAX_ORDER:
        raise MalformedHeader(f"graph6 short form holds at most {GRAPH6_MAX_ORDER} vertices")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


# Edge-list text

def parse_edge_list(text: str, require_connected: bool = True) -> Graph:
    """One "u v" pair per line; '#' starts a comment; blank lines are ignored"""
    pairs: List[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListSyntax(f"line {lineno}: expected two vertex indices", line=lineno)
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListSyntax(f"line {lineno}: non-integer vertex", line=lineno) from None
    return from_edge_list(pairs, require_connected=require_connected)


def read_edge_list(path: Union[str, Path], require_connected: bool = True) -> Graph:
    return parse_edge_list(Path(path).read_text(), require_connected=require_connected)


def format_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
