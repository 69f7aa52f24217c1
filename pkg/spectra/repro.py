"""
Reproduction Files and Counterexample Reduction

A reproduction file is two lines: the graph6 string of the host and the
labeling as CSV in edge-index order. The verdict that made the labeling
interesting is written next to it as JSON.
"""

import json
from pathlib import Path
from typing import Callable, List, Optional, Tuple, Union

from loguru import logger

from .classify import check_theorem
from .errors import InvalidInput, SpectraError
from .graph import Graph, from_edge_list, parse_graph6, serialize_graph6
from .labeling import Labeling
from .models.verdict import Overall, TheoremVerdict

Predicate = Callable[[Graph, Tuple[int, ...]], bool]


def write_reproduction(
    directory: Union[str, Path],
    g: Graph,
    labels: Tuple[int, ...],
    verdict: TheoremVerdict,
    index: int = 0,
) -> Path:
    """Write violation_<index>.txt and its verdict JSON; returns the .txt path"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    stem = f"violation_{index:04d}"
    path = directory / f"{stem}.txt"
    record = serialize_graph6(g)
    # graph6 fixes its own edge order; re-key the labels to match it
    by_edge = {(min(u, v), max(u, v)): label for (u, v), label in zip(g.edges, labels)}
    ordered = tuple(by_edge[edge] for edge in parse_graph6(record).edges)
    path.write_text(f"{record}\n{Labeling(labels=ordered).to_csv()}\n", encoding="utf-8")
    (directory / f"{stem}.json").write_text(
        json.dumps(verdict.to_json_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    logger.info("wrote reproduction {}", path)
    return path


def read_reproduction(path: Union[str, Path]) -> Tuple[Graph, Labeling]:
    lines = [
        line.strip()
        for line in Path(path).read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if len(lines) != 2:
        raise InvalidInput(f"{path}: expected a graph6 line and a labeling line", lines=len(lines))
    g = parse_graph6(lines[0])
    labeling = Labeling.from_csv(lines[1])
    if len(labeling) != g.edge_count:
        raise InvalidInput(
            f"{path}: {len(labeling)} labels for {g.edge_count} edges",
            labels=len(labeling), edges=g.edge_count,
        )
    return g, labeling


def is_violation(g: Graph, labels: Tuple[int, ...]) -> bool:
    return check_theorem(g, labels).overall is Overall.VIOLATION


def _rank(values: List[int]) -> Tuple[int, ...]:
    order = {value: rank for rank, value in enumerate(sorted(values), start=1)}
    return tuple(order[value] for value in values)


def _without_edge(g: Graph, labels: Tuple[int, ...], index: int) -> Optional[Tuple[Graph, Tuple[int, ...]]]:
    kept = [(edge, label) for i, (edge, label) in enumerate(zip(g.edges, labels)) if i != index]
    if not kept:
        return None
    used = sorted({x for edge, _ in kept for x in edge})
    renumber = {x: i for i, x in enumerate(used)}
    try:
        smaller = from_edge_list([(renumber[u], renumber[v]) for (u, v), _ in kept])
    except SpectraError:
        return None
    return smaller, _rank([label for _, label in kept])


def reduce_counterexample(
    g: Graph,
    labels: Tuple[int, ...],
    predicate: Optional[Predicate] = None,
) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Greedily delete edges while `predicate` still holds.

    The host stays connected, isolated vertices are dropped and the remaining
    labels are replaced by their ranks so the labeling stays bijective. The
    result is one-edge minimal: removing any single edge breaks the predicate
    or the host.
    """
    predicate = predicate or is_violation
    labels = tuple(labels)
    if not predicate(g, labels):
        raise InvalidInput("the predicate does not hold for the starting labeling")
    index = 0
    since_last = 0
    while since_last < g.edge_count:
        candidate = _without_edge(g, labels, index)
        if candidate is not None and predicate(*candidate):
            g, labels = candidate
            since_last = 0
            logger.debug("reduced to {} edges", g.edge_count)
        else:
            index += 1
            since_last += 1
        if index >= g.edge_count:
            index = 0
    return g, labels
