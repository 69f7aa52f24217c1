"""
Toolkit Interface

This module provides a unified interface over the toolkit's operations. The
CLI is a thin argument parser on top of it: loading hosts and labelings,
running analysis, verification, search and galaxy tooling, and shaping the
results into JSON-ready dictionaries.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from .classify import check_theorem, lemma_suite
from .config import SpectraSettings, get_settings
from .corpus import named_host
from .enumeration import exhaustive_verify, has_full_interval_labeling, sampled_verify
from .errors import EmptyEdgeSet, InvalidInput, TruncatedOutput
from .galaxy import build_galaxy, decompose_galaxy, galaxy_labeling, is_galaxy
from .gradient import (
    check_edge_cover_uniqueness,
    check_maximal_uniqueness,
    enumerate_gradient_paths,
    maximal_gradient_paths,
)
from .graph import Graph, format_edge_list, is_connected, parse_graph6, read_edge_list, serialize_graph6
from .labeling import Labeling, interval_vertices, spectra, validate_labeling
from .models.report import AnalysisReport
from .models.stats import LabelingStats
from .models.verdict import Overall
from .optimize import SearchConfig, exact_max_U, local_search_max_U
from .repro import write_reproduction


class SpectraInterface:
    """Interface for loading inputs and executing toolkit operations"""

    def __init__(self, settings: Optional[SpectraSettings] = None):
        self.settings = settings or get_settings()

    # Inputs

    def load_graph(
        self,
        graph6: Optional[str] = None,
        edges: Optional[str] = None,
        host: Optional[str] = None,
    ) -> Graph:
        """Exactly one of a graph6 string, an edge-list file or a named host"""
        sources = [s for s in (graph6, edges, host) if s is not None]
        if len(sources) != 1:
            raise InvalidInput("give exactly one of --graph6, --edges or --host")
        if graph6 is not None:
            g = parse_graph6(graph6, require_connected=True)
            if g.edge_count == 0:
                raise EmptyEdgeSet("a host graph needs at least one edge")
            return g
        if edges is not None:
            return read_edge_list(edges)
        return named_host(host)

    def load_labeling(
        self,
        g: Graph,
        labels: Optional[str] = None,
        labels_file: Optional[str] = None,
    ) -> Labeling:
        if (labels is None) == (labels_file is None):
            raise InvalidInput("give exactly one of --labels or --labels-file")
        text = labels if labels is not None else Path(labels_file).read_text(encoding="utf-8")
        return validate_labeling(g, Labeling.from_csv(text))

    # Operations

    def analyze(
        self,
        g: Graph,
        f: Labeling,
        gradient: bool = False,
        max_paths: Optional[int] = None,
    ) -> AnalysisReport:
        verdict = check_theorem(g, f)
        lemmas = lemma_suite(g, f)
        report = AnalysisReport(
            schema_version=self.settings.SCHEMA_VERSION,
            graph6=serialize_graph6(g),
            edges=list(g.edges),
            labels=f.labels,
            interval_vertices=interval_vertices(g, f),
            spectra=spectra(g, f),
            verdict=verdict,
            lemmas=lemmas,
        )
        if not verdict.lambda_member:
            return report
        report.lemmas.extend([check_maximal_uniqueness(g, f), check_edge_cover_uniqueness(g, f)])
        if gradient:
            limit = max_paths if max_paths is not None else self.settings.GRADIENT_MAX_PATHS
            try:
                report.gradient_paths = enumerate_gradient_paths(g, f, max_count=limit)
            except TruncatedOutput as exc:
                logger.warning("gradient path listing truncated at {}", limit)
                report.gradient_paths = exc.partial
                report.gradient_truncated = True
            report.maximal_paths = maximal_gradient_paths(g, f)
        return report

    def verify(
        self,
        g: Graph,
        exhaustive: bool = False,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        prune: bool = False,
        shards: Optional[int] = None,
        allow_long_runtime: bool = False,
        progress: Optional[bool] = None,
        repro_dir: Optional[str] = None,
    ) -> Tuple[LabelingStats, List[Path]]:
        if exhaustive:
            stats = exhaustive_verify(
                g, prune_complement=prune, shards=shards,
                allow_long_runtime=allow_long_runtime, progress=progress,
            )
        else:
            stats = sampled_verify(g, samples=samples, seed=seed)
        written: List[Path] = []
        if repro_dir is not None:
            for index, record in enumerate(stats.violations):
                written.append(write_reproduction(repro_dir, g, record.labels, record.verdict, index))
        return stats, written

    def search(self, g: Graph, cfg: SearchConfig, exact: bool = False, progress: bool = False) -> Dict[str, Any]:
        result = local_search_max_U(g, cfg, progress=progress)
        data = result.to_json_dict()
        if exact:
            best = exact_max_U(g)
            data["exact_max_U"] = best
            data["gap"] = best - result.best_U_size
        return data

    def galaxy_build(self, a: Sequence[int]) -> str:
        g, decomposition = build_galaxy(a)
        comment = f"graph6: {serialize_graph6(g)}"
        logger.debug("built T[{}] with spine {}", list(decomposition.pendant_counts), decomposition.spine)
        return format_edge_list(g, comment=comment)

    def galaxy_check(self, g: Graph, exhaustive: bool = False) -> Dict[str, Any]:
        galaxy = is_connected(g) and is_galaxy(g)
        data: Dict[str, Any] = {"is_galaxy": galaxy}
        if galaxy:
            decomposition = decompose_galaxy(g)
            data["decomposition"] = decomposition.model_dump(mode="json")
        if exhaustive:
            found, labeling = has_full_interval_labeling(g)
            data["full_interval_labeling"] = labeling.to_csv() if found and labeling else None
            data["falsifying"] = found and not galaxy
        return data

    def galaxy_label(self, g: Graph) -> Labeling:
        return galaxy_labeling(g)

    @staticmethod
    def exit_code_for(report: AnalysisReport) -> int:
        """2 when the verdict or any lemma check fails, else 0"""
        if report.verdict.overall is Overall.VIOLATION:
            return 2
        if any(not lemma.passed for lemma in report.lemmas):
            return 2
        return 0
