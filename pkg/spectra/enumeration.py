"""
Exhaustive and Sampled Verification

This module turns the set of all bijective labelings of a host into an
iteration space. Labelings are visited in lexicographic order of the label
array; work is split into shards by fixing the label of the first edge, and
complement pruning visits one labeling of every {f, complement(f)} pair with
weight 2 (complementing preserves every interval spectrum).

Every visited labeling is checked against the structure theorem and the
per-labeling lemma checks, and the results are aggregated into LabelingStats.
"""

import math
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from loguru import logger
from tqdm import tqdm

from .base import BaseAlgorithm
from .classify import check_lemma_adjacent_overlap, check_lemma_neighbor_bound, check_theorem
from .config import DEFAULT_MAX_EDGES, SpectraSettings, get_settings
from .errors import InvalidInput, TooManyEdges
from .galaxy import galaxy_labeling, is_galaxy
from .graph import Graph, is_connected
from .labeling import Labeling, interval_flags, random_labeling
from .models.stats import LabelingStats
from .models.verdict import Overall, TheoremVerdict

Labels = Tuple[int, ...]
Consumer = Callable[[Labels, int], None]

PROGRESS_CHUNK = 1000


def count_labelings(g: Graph) -> int:
    """|E|! bijective labelings"""
    return math.factorial(g.edge_count)


def check_edge_guard(g: Graph, allow_long_runtime: bool = False, settings: Optional[SpectraSettings] = None) -> None:
    """Refuse factorial work past MAX_EDGES unless explicitly acknowledged"""
    settings = settings or get_settings()
    limit = settings.MAX_EDGES
    if limit > DEFAULT_MAX_EDGES:
        logger.warning(
            "enumeration guard raised to {} edges ({}! labelings) by configuration",
            limit, limit,
        )
    if g.edge_count > limit and not allow_long_runtime:
        raise TooManyEdges(
            f"{g.edge_count} edges exceeds the enumeration guard of {limit}",
            edges=g.edge_count, limit=limit,
        )


def _is_representative(labels: Labels, top: int) -> bool:
    # keep f iff f < complement(f) lexicographically
    for value in labels:
        mirrored = top - value
        if value != mirrored:
            return value < mirrored
    return True


def iter_labelings(
    m: int,
    prune_complement: bool = False,
    first_label: Optional[int] = None,
) -> Iterator[Tuple[Labels, int]]:
    """(labels, weight) over bijections onto [1, m] in lexicographic order"""
    if first_label is None:
        space: Iterator[Labels] = permutations(range(1, m + 1))
    else:
        if not 1 <= first_label <= m:
            raise InvalidInput(f"first label {first_label} outside [1, {m}]", first_label=first_label)
        rest = [value for value in range(1, m + 1) if value != first_label]
        space = ((first_label,) + tail for tail in permutations(rest))
    if not prune_complement or m < 2:
        for labels in space:
            yield labels, 1
        return
    top = m + 1
    for labels in space:
        if _is_representative(labels, top):
            yield labels, 2


def for_each_labeling(
    g: Graph,
    consumer: Consumer,
    prune_complement: bool = False,
    first_label: Optional[int] = None,
    allow_long_runtime: bool = False,
) -> int:
    """Feed every bijective labeling to `consumer(labels, weight)`; returns the visit count"""
    check_edge_guard(g, allow_long_runtime)
    visits = 0
    for labels, weight in iter_labelings(g.edge_count, prune_complement, first_label):
        consumer(labels, weight)
        visits += 1
    return visits


def _component_degree(g: Graph, flags: List[bool]) -> int:
    best = 0
    for x, row in enumerate(g.adjacency):
        if flags[x]:
            best = max(best, sum(1 for v, _ in row if flags[v]))
    return best


def evaluate_labeling(g: Graph, labels: Labels) -> Tuple[TheoremVerdict, int, int]:
    """Verdict, largest degree inside G^(f,int) and lemma failure count for one labeling"""
    verdict = check_theorem(g, labels)
    if verdict.overall is Overall.VACUOUS:
        return verdict, 0, 0
    flags = interval_flags(g, labels)
    failures = len(check_lemma_adjacent_overlap(g, labels).failures)
    failures += len(check_lemma_neighbor_bound(g, labels).failures)
    return verdict, _component_degree(g, flags), failures


def _record(stats: LabelingStats, g: Graph, labels: Labels, weight: int) -> None:
    verdict, degree, failures = evaluate_labeling(g, labels)
    stats.record(
        labels, verdict, g.vertex_count, weight=weight,
        component_degree=degree, lemma_failures=failures,
    )


def _run_shard(job: Tuple[Graph, Optional[int], bool, int]) -> LabelingStats:
    g, first_label, prune_complement, cap = job
    stats = LabelingStats(violation_cap=cap)
    for labels, weight in iter_labelings(g.edge_count, prune_complement, first_label):
        _record(stats, g, labels, weight)
    return stats


class ExhaustiveVerifier(BaseAlgorithm):
    """Check the structure theorem on every bijective labeling of a host"""

    algorithm_id = "exhaustive_verify"

    def validate_input(self, data: Dict[str, Any]) -> bool:
        return isinstance(data.get("graph"), Graph) and data["graph"].edge_count >= 1

    def process(self, data: Dict[str, Any]) -> LabelingStats:
        g: Graph = data["graph"]
        prune = bool(data.get("prune_complement", False))
        shards = int(data.get("shards") or self.settings.SHARDS)
        progress = data.get("progress")
        if progress is None:
            progress = self.settings.SHOW_PROGRESS
        check_edge_guard(g, bool(data.get("allow_long_runtime", False)), self.settings)

        cap = self.settings.VIOLATION_CAP
        m = g.edge_count
        self.logger.info(
            "verifying {} labelings of a host with {} vertices and {} edges (prune={}, shards={})",
            count_labelings(g), g.vertex_count, m, prune, shards,
        )
        if shards <= 1 or m < 2:
            stats = self._sequential(g, prune, cap, progress)
        else:
            stats = self._sharded(g, prune, cap, shards, progress)

        self.metrics.labelings_checked += stats.visits
        if stats.violation_count:
            self.log_warning(
                "structure theorem violated",
                {"violations": stats.violation_count, "first": list(stats.violations[0].labels)},
            )
        return stats

    def _sequential(self, g: Graph, prune: bool, cap: int, progress: bool) -> LabelingStats:
        stats = LabelingStats(violation_cap=cap)
        total = count_labelings(g) // (2 if prune and g.edge_count >= 2 else 1)
        with tqdm(total=total, unit="labeling", file=sys.stderr, disable=not progress) as bar:
            pending = 0
            for labels, weight in iter_labelings(g.edge_count, prune):
                _record(stats, g, labels, weight)
                pending += 1
                if pending == PROGRESS_CHUNK:
                    bar.update(pending)
                    pending = 0
            bar.update(pending)
        return stats

    def _sharded(self, g: Graph, prune: bool, cap: int, shards: int, progress: bool) -> LabelingStats:
        jobs = [(g, first, prune, cap) for first in range(1, g.edge_count + 1)]
        merged = LabelingStats(violation_cap=cap)
        with ProcessPoolExecutor(max_workers=shards) as pool:
            with tqdm(total=len(jobs), unit="shard", file=sys.stderr, disable=not progress) as bar:
                for shard_stats in pool.map(_run_shard, jobs):
                    merged = merged.merge(shard_stats)
                    bar.update(1)
        return merged


class SampledVerifier(BaseAlgorithm):
    """Check the structure theorem on seeded random labelings"""

    algorithm_id = "sampled_verify"

    def validate_input(self, data: Dict[str, Any]) -> bool:
        g = data.get("graph")
        return isinstance(g, Graph) and g.edge_count >= 1 and int(data.get("samples", 0)) >= 1

    def process(self, data: Dict[str, Any]) -> LabelingStats:
        g: Graph = data["graph"]
        samples = int(data["samples"])
        seed = int(data["seed"])
        stats = LabelingStats(violation_cap=self.settings.VIOLATION_CAP)
        progress = bool(data.get("progress") or self.settings.SHOW_PROGRESS)
        for i in tqdm(range(samples), unit="sample", file=sys.stderr, disable=not progress):
            _record(stats, g, random_labeling(g, seed + i).labels, 1)
        self.metrics.labelings_checked += samples
        if stats.violation_count:
            self.log_warning("structure theorem violated", {"violations": stats.violation_count, "seed": seed})
        return stats


def exhaustive_verify(
    g: Graph,
    prune_complement: bool = False,
    shards: Optional[int] = None,
    allow_long_runtime: bool = False,
    progress: Optional[bool] = None,
) -> LabelingStats:
    return ExhaustiveVerifier().execute({
        "graph": g,
        "prune_complement": prune_complement,
        "shards": shards,
        "allow_long_runtime": allow_long_runtime,
        "progress": progress,
    })


def sampled_verify(g: Graph, samples: Optional[int] = None, seed: Optional[int] = None) -> LabelingStats:
    """Sample i uses random_labeling(g, seed + i)"""
    settings = get_settings()
    if samples is not None and samples < 1:
        raise InvalidInput("samples must be at least 1", samples=samples)
    return SampledVerifier().execute({
        "graph": g,
        "samples": settings.SAMPLES if samples is None else samples,
        "seed": settings.DEFAULT_SEED if seed is None else seed,
    })


def has_full_interval_labeling(g: Graph, allow_long_runtime: bool = False) -> Tuple[bool, Optional[Labeling]]:
    """
    Decide whether some labeling gives every vertex an interval spectrum.

    Galaxies take the constructive branch; everything else is searched
    exhaustively. A hit on a non-galaxy contradicts the characterization and
    is logged at error level.
    """
    if g.vertex_count >= 2 and is_connected(g) and is_galaxy(g):
        return True, galaxy_labeling(g)
    check_edge_guard(g, allow_long_runtime)
    for labels, _ in iter_labelings(g.edge_count, prune_complement=True):
        if all(interval_flags(g, labels)):
            logger.error(
                "FALSIFYING EVENT: non-galaxy host {} has a full interval labeling {}",
                list(g.edges), list(labels),
            )
            return True, Labeling(labels=labels)
    return False, None
