"""
Maximizing |U(G,f)|

Simulated annealing over bijective labelings with a swap neighborhood:
a move exchanges the labels of two edges, so bijectivity is preserved by
construction, and only the at most four endpoints of the two edges can
change their interval status. The exact maximum is available at desk scale
through the exhaustive enumerator.
"""

import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field
from tqdm import tqdm

from .base import BaseAlgorithm
from .config import get_algorithm_config
from .enumeration import for_each_labeling
from .galaxy import galaxy_labeling, is_galaxy
from .graph import Graph, is_connected
from .labeling import Labeling, shuffled_labels

MIN_TEMPERATURE = 1e-9


class SearchConfig(BaseModel):
    """Annealing schedule and budget; every field is reproducible from the seed"""
    budget: int = Field(100_000, ge=1)  # move evaluations per restart
    restarts: int = Field(5, ge=1)
    seed: int = 0
    initial_temperature: float = Field(2.0, gt=0)
    decay: float = Field(0.999, gt=0, le=1)
    workers: int = Field(1, ge=1)

    @classmethod
    def from_settings(cls, **overrides: Any) -> "SearchConfig":
        config = get_algorithm_config("search")
        config.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**config)


class RestartTrace(BaseModel):
    restart: int
    start: str  # identity, random or galaxy
    initial_U: int
    best_U: int
    evaluations: int
    accepted: int
    improvements: List[Tuple[int, int]] = Field(default_factory=list)  # (evaluation, best so far)
    best_labels: Tuple[int, ...]


class SearchResult(BaseModel):
    labeling: Labeling
    best_U_size: int
    vertex_count: int
    is_galaxy: bool
    falsifying: bool = False  # |U| = |V| on a non-galaxy host
    traces: List[RestartTrace] = Field(default_factory=list)

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "labels": self.labeling.to_csv(),
            "best_U_size": self.best_U_size,
            "vertex_count": self.vertex_count,
            "is_galaxy": self.is_galaxy,
            "falsifying": self.falsifying,
            "restarts": [trace.model_dump(mode="json") for trace in self.traces],
        }


class IntervalTracker:
    """Interval flags of every vertex under a mutable labeling"""

    def __init__(self, g: Graph, labels: Sequence[int]):
        self.graph = g
        self.labels = list(labels)
        self.flags = [self._is_interval(x) for x in range(g.vertex_count)]
        self.size = sum(self.flags)

    def _is_interval(self, x: int) -> bool:
        row = self.graph.adjacency[x]
        if not row:
            return False
        values = [self.labels[e] for _, e in row]
        return max(values) - min(values) + 1 == len(values)

    def swap(self, i: int, j: int) -> int:
        """Exchange the labels of edges i and j; returns the change in |U|"""
        labels = self.labels
        labels[i], labels[j] = labels[j], labels[i]
        touched = set(self.graph.edges[i]) | set(self.graph.edges[j])
        delta = 0
        for x in touched:
            flag = self._is_interval(x)
            if flag != self.flags[x]:
                delta += 1 if flag else -1
                self.flags[x] = flag
        self.size += delta
        return delta


def _initial_labels(g: Graph, restart: int, restarts: int, galaxy: bool, rng: np.random.Generator) -> Tuple[str, List[int]]:
    if galaxy and restart == min(1, restarts - 1):
        return "galaxy", list(galaxy_labeling(g).labels)
    if restart == 0:
        return "identity", list(range(1, g.edge_count + 1))
    return "random", shuffled_labels(g.edge_count, rng)


def _anneal(job: Tuple[Graph, SearchConfig, int, bool]) -> RestartTrace:
    g, cfg, restart, galaxy = job
    rng = np.random.default_rng([cfg.seed, restart])
    start, labels = _initial_labels(g, restart, cfg.restarts, galaxy, rng)
    tracker = IntervalTracker(g, labels)
    best, best_labels = tracker.size, tuple(tracker.labels)
    trace = RestartTrace(
        restart=restart, start=start, initial_U=best, best_U=best,
        evaluations=0, accepted=0, best_labels=best_labels,
    )
    m = g.edge_count
    target = g.vertex_count
    temperature = cfg.initial_temperature
    evaluations = accepted = 0
    while m >= 2 and evaluations < cfg.budget and best < target:
        i = int(rng.integers(0, m))
        j = int(rng.integers(0, m - 1))
        if j >= i:
            j += 1
        delta = tracker.swap(i, j)
        evaluations += 1
        if delta >= 0 or rng.random() < math.exp(delta / temperature):
            accepted += 1
            temperature = max(temperature * cfg.decay, MIN_TEMPERATURE)
            if tracker.size > best:
                best, best_labels = tracker.size, tuple(tracker.labels)
                trace.improvements.append((evaluations, best))
        else:
            tracker.swap(i, j)
    trace.best_U = best
    trace.best_labels = best_labels
    trace.evaluations = evaluations
    trace.accepted = accepted
    return trace


class LocalSearch(BaseAlgorithm):
    """Annealed swap search for a labeling with many interval vertices"""

    algorithm_id = "local_search_max_U"

    def validate_input(self, data: Dict[str, Any]) -> bool:
        return isinstance(data.get("graph"), Graph) and isinstance(data.get("config"), SearchConfig)

    def process(self, data: Dict[str, Any]) -> SearchResult:
        g: Graph = data["graph"]
        cfg: SearchConfig = data["config"]
        galaxy = g.vertex_count >= 2 and is_connected(g) and is_galaxy(g)
        jobs = [(g, cfg, r, galaxy) for r in range(cfg.restarts)]
        progress = bool(data.get("progress") or self.settings.SHOW_PROGRESS)
        if cfg.workers > 1 and cfg.restarts > 1:
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                traces = list(pool.map(_anneal, jobs))
        else:
            traces = [_anneal(job) for job in tqdm(jobs, unit="restart", file=sys.stderr, disable=not progress)]

        # reduce by (|U| desc, labels asc) so the winner does not depend on scheduling
        winner = min(traces, key=lambda t: (-t.best_U, t.best_labels))
        self.metrics.labelings_checked += sum(t.evaluations for t in traces)
        falsifying = winner.best_U == g.vertex_count and not galaxy
        if falsifying:
            self.log_warning(
                "FALSIFYING EVENT: full interval labeling on a non-galaxy host",
                {"edges": list(g.edges), "labels": list(winner.best_labels)},
            )
        self.logger.info(
            "best |U| = {} of {} vertices after {} restarts", winner.best_U, g.vertex_count, cfg.restarts
        )
        return SearchResult(
            labeling=Labeling(labels=winner.best_labels),
            best_U_size=winner.best_U,
            vertex_count=g.vertex_count,
            is_galaxy=galaxy,
            falsifying=falsifying,
            traces=traces,
        )


def local_search_max_U(g: Graph, cfg: Optional[SearchConfig] = None, progress: bool = False) -> SearchResult:
    return LocalSearch().execute({"graph": g, "config": cfg or SearchConfig.from_settings(), "progress": progress})


def exact_max_U(g: Graph, allow_long_runtime: bool = False) -> int:
    """Exact maximum of |U| over all bijective labelings"""
    best = [0]
    target = g.vertex_count

    def consume(labels: Tuple[int, ...], weight: int) -> None:
        if best[0] == target:
            return
        tracker = IntervalTracker(g, labels)
        if tracker.size > best[0]:
            best[0] = tracker.size

    for_each_labeling(g, consume, prune_complement=True, allow_long_runtime=allow_long_runtime)
    return best[0]
