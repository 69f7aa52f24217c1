"""
Acceptance runner: executes every desk-scale acceptance criterion against
the library and writes ACCEPTANCE_RESULTS.md.

    python -m spectra.test.realtest.run_acceptance [--samples N] [--shards K] [--out-dir DIR]
"""
import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

import numpy as np
from loguru import logger
from tqdm import tqdm

from spectra.base import configure_logging
from spectra.corpus import LEAFLESS_HOSTS, desk_corpus, named_host
from spectra.enumeration import exhaustive_verify, has_full_interval_labeling, iter_labelings, sampled_verify
from spectra.galaxy import build_galaxy, galaxy_labeling, is_galaxy, iter_pendant_sequences
from spectra.gradient import check_edge_cover_uniqueness, check_maximal_uniqueness
from spectra.graph import complete_graph, serialize_graph6
from spectra.labeling import complement_labeling, interval_vertices, shuffled_labels
from spectra.optimize import SearchConfig, exact_max_U, local_search_max_U
from spectra.test.realtest.report_generator import AcceptanceReport, save_report

GOLDEN = Path(__file__).parent.parent / "data" / "golden" / "k4_histogram.json"


def _result(checked: int, failures: List[str], started: float, **details: Any) -> Dict[str, Any]:
    return {
        'passed': not failures,
        'checked': checked,
        'failures': failures,
        'elapsed': time.perf_counter() - started,
        'details': details,
    }


def run_theorem_suite(shards: int, **_) -> Dict[str, Any]:
    started = time.perf_counter()
    hosts = desk_corpus(2, 6, max_edges=8)
    failures, labelings, lemma_failures = [], 0, 0
    for g in tqdm(hosts, desc="theorem", file=sys.stderr):
        stats = exhaustive_verify(g, prune_complement=True, shards=shards)
        labelings += stats.total_labelings
        lemma_failures += stats.lemma_failures
        if stats.violation_count or stats.lemma_failures:
            failures.append(f"{serialize_graph6(g)}: {stats.violation_count} violations, {stats.lemma_failures} lemma failures")
    return _result(len(hosts), failures, started, labelings=labelings, lemma_failures=lemma_failures)


def run_complete_hosts(samples: int, **_) -> Dict[str, Any]:
    started = time.perf_counter()
    failures = []
    golden = json.loads(GOLDEN.read_text())
    stats = exhaustive_verify(complete_graph(4))
    if stats.to_json_dict()["histogram_of_U_size"] != golden["histogram_of_U_size"]:
        failures.append(f"K4 histogram {stats.to_json_dict()['histogram_of_U_size']} differs from golden")
    largest = {"K4": stats.max_component_vertices}
    for n in (5, 6):
        sampled = sampled_verify(complete_graph(n), samples=samples, seed=0)
        largest[f"K{n}"] = sampled.max_component_vertices
    failures.extend(f"{name}: component on {size} vertices" for name, size in largest.items() if size > 2)
    return _result(len(largest), failures, started, **{f"largest_component_{k}": v for k, v in largest.items()})


def run_galaxy_characterization(**_) -> Dict[str, Any]:
    started = time.perf_counter()
    failures, galaxies, others = [], 0, 0
    for a in iter_pendant_sequences(9):
        g, decomposition = build_galaxy(a)
        galaxies += 1
        if len(interval_vertices(g, galaxy_labeling(g, decomposition))) != g.vertex_count:
            failures.append(f"T[{list(a)}] labeling misses vertices")
    for g in desk_corpus(2, 7, max_edges=7):
        if is_galaxy(g):
            continue
        others += 1
        found, labeling = has_full_interval_labeling(g)
        if found:
            failures.append(f"{serialize_graph6(g)} has full interval labeling {labeling.to_csv()}")
    return _result(galaxies + others, failures, started, galaxies=galaxies, non_galaxies=others)


def run_leafless_hosts(samples: int, **_) -> Dict[str, Any]:
    started = time.perf_counter()
    failures, details = [], {}
    for name in LEAFLESS_HOSTS:
        g = named_host(name)
        stats = exhaustive_verify(g) if g.edge_count <= 8 else sampled_verify(g, samples=samples, seed=0)
        details[f"max_degree_{name}"] = stats.max_component_degree
        if stats.max_component_degree > 2 or stats.violation_count:
            failures.append(f"{name}: component degree {stats.max_component_degree}")
    return _result(len(LEAFLESS_HOSTS), failures, started, **details)


def run_petersen_lemmas(samples: int, **_) -> Dict[str, Any]:
    started = time.perf_counter()
    stats = sampled_verify(named_host("petersen"), samples=samples, seed=0)
    failures = [f"{stats.lemma_failures} lemma failures"] if stats.lemma_failures else []
    if stats.violation_count:
        failures.append(f"{stats.violation_count} violations")
    return _result(stats.total_labelings, failures, started, max_U=stats.max_U, empty_U=stats.empty_U_count)


def run_gradient_uniqueness(**_) -> Dict[str, Any]:
    started = time.perf_counter()
    failures, checked = [], 0
    for g in tqdm(desk_corpus(2, 6, max_edges=7), desc="gradient", file=sys.stderr):
        for labels, _ in iter_labelings(g.edge_count):
            checked += 1
            for report in (check_maximal_uniqueness(g, labels), check_edge_cover_uniqueness(g, labels)):
                if not report.passed:
                    failures.append(f"{serialize_graph6(g)} {labels}: {report.name}")
    return _result(checked, failures, started)


def run_complement_symmetry(samples: int, **_) -> Dict[str, Any]:
    started = time.perf_counter()
    hosts = desk_corpus(2, 7, max_edges=12)
    rng = np.random.default_rng(0)
    failures = []
    for _ in range(samples):
        g = hosts[int(rng.integers(len(hosts)))]
        labels = tuple(shuffled_labels(g.edge_count, rng))
        if interval_vertices(g, labels) != interval_vertices(g, complement_labeling(g, labels)):
            failures.append(f"{serialize_graph6(g)} {labels}")
    for g in desk_corpus(2, 6, max_edges=7):
        full, pruned = exhaustive_verify(g), exhaustive_verify(g, prune_complement=True)
        if full.histogram_of_U_size != pruned.histogram_of_U_size:
            failures.append(f"{serialize_graph6(g)}: pruned histogram differs")
    return _result(samples, failures, started)


def run_recognition_oracle(**_) -> Dict[str, Any]:
    import networkx as nx

    from spectra.corpus import to_networkx

    started = time.perf_counter()
    built = [to_networkx(build_galaxy(a)[0]) for a in iter_pendant_sequences(8)]
    built.append(nx.path_graph(2))
    failures, checked = [], 0
    for g in desk_corpus(2, 7, max_edges=21):
        checked += 1
        h = to_networkx(g)
        expected = any(nx.is_isomorphic(h, t) for t in built if t.number_of_nodes() == g.vertex_count)
        if is_galaxy(g) != expected:
            failures.append(f"{serialize_graph6(g)}: recognizer says {is_galaxy(g)}")
    return _result(checked, failures, started)


def run_search_calibration(**_) -> Dict[str, Any]:
    started = time.perf_counter()
    cfg = SearchConfig(budget=100_000, restarts=5, seed=0)
    failures, gaps = [], 0
    hosts = desk_corpus(2, 6, max_edges=8)
    for g in tqdm(hosts, desc="search", file=sys.stderr):
        best, exact = local_search_max_U(g, cfg).best_U_size, exact_max_U(g)
        if best != exact:
            gaps += 1
            failures.append(f"{serialize_graph6(g)}: search {best}, exact {exact}")
    return _result(len(hosts), failures, started, gaps=gaps)


CRITERIA: List[Tuple[str, Callable[..., Dict[str, Any]]]] = [
    ("Theorem over the desk corpus", run_theorem_suite),
    ("Complete hosts", run_complete_hosts),
    ("Galaxy characterization", run_galaxy_characterization),
    ("Leafless hosts", run_leafless_hosts),
    ("Petersen lemma suite", run_petersen_lemmas),
    ("Gradient path uniqueness", run_gradient_uniqueness),
    ("Complement symmetry", run_complement_symmetry),
    ("Galaxy recognition oracle", run_recognition_oracle),
    ("Search calibration", run_search_calibration),
]


def main(argv=None) -> int:
    """Run every criterion and save the markdown report"""
    parser = argparse.ArgumentParser(description="Run the acceptance criteria")
    parser.add_argument("--samples", type=int, default=10_000)
    parser.add_argument("--shards", type=int, default=1)
    parser.add_argument("--out-dir", type=Path)
    args = parser.parse_args(argv)
    configure_logging("INFO")

    report = AcceptanceReport()
    for title, runner in CRITERIA:
        logger.info("running: {}", title)
        try:
            content = runner(samples=args.samples, shards=args.shards)
        except Exception as e:
            logger.exception("criterion failed to run: {}", title)
            content = {'passed': False, 'checked': 0, 'failures': [f"crashed: {e}"], 'elapsed': 0.0}
        report.add_section(title, content)

    path = save_report(report.generate(), args.out_dir)
    logger.info("report saved to {}", path)
    return 0 if report.passed else 2


if __name__ == "__main__":
    sys.exit(main())
