"""
Host Corpus

Named small hosts used by the CLI (`--host NAME`) and the acceptance runs,
plus the desk corpus of every connected graph on at most seven vertices
taken from the networkx graph atlas.
"""

from typing import Callable, Dict, Iterator, List, Sequence

import networkx as nx

from .errors import InvalidInput
from .graph import Edge, Graph, complete_graph, cycle_graph, from_edge_list, path_graph, star_graph


def from_networkx(h: nx.Graph) -> Graph:
    """Host graph from a networkx graph on nodes 0..n-1, edges sorted"""
    mapping = {node: i for i, node in enumerate(sorted(h.nodes()))}
    edges = sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in h.edges())
    return from_edge_list(edges)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def _edges(pairs: Sequence[Edge]) -> Callable[[], Graph]:
    return lambda: from_edge_list(pairs)


NAMED_HOSTS: Dict[str, Callable[[], Graph]] = {
    "k2": lambda: complete_graph(2),
    "p3": lambda: path_graph(3),
    "p4": lambda: path_graph(4),
    "p5": lambda: path_graph(5),
    "p6": lambda: path_graph(6),
    "c3": lambda: cycle_graph(3),
    "c4": lambda: cycle_graph(4),
    "c5": lambda: cycle_graph(5),
    "c6": lambda: cycle_graph(6),
    "k4": lambda: complete_graph(4),
    "k5": lambda: complete_graph(5),
    "k6": lambda: complete_graph(6),
    "star3": lambda: star_graph(3),
    "star4": lambda: star_graph(4),
    "prism3": lambda: from_networkx(nx.circular_ladder_graph(3)),
    "petersen": lambda: from_networkx(nx.petersen_graph()),
    # three legs of length two around vertex 0
    "spider3": _edges([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
    "paw": _edges([(0, 1), (1, 2), (0, 2), (2, 3)]),
    "diamond": _edges([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "bull": _edges([(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
}

# hosts without leaves
LEAFLESS_HOSTS = ("c3", "c4", "c5", "c6", "k4", "prism3")


def named_host(name: str) -> Graph:
    try:
        return NAMED_HOSTS[name.lower()]()
    except KeyError:
        raise InvalidInput(
            f"unknown host {name!r}; choose from {', '.join(sorted(NAMED_HOSTS))}", host=name
        ) from None


def desk_corpus(min_vertices: int = 2, max_vertices: int = 7, max_edges: int = 8) -> List[Graph]:
    """Connected atlas graphs in atlas order (by order, then size, then degree sequence)"""
    hosts = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if not min_vertices <= n <= max_vertices:
            continue
        if h.number_of_edges() == 0 or h.number_of_edges() > max_edges or not nx.is_connected(h):
            continue
        hosts.append(from_networkx(h))
    return hosts


def trees(order: int) -> Iterator[Graph]:
    """Every tree on `order` vertices up to isomorphism"""
    if order < 2:
        return
    for h in nx.nonisomorphic_trees(order):
        yield from_networkx(h)
