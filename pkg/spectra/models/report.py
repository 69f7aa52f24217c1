"""
Analysis Report Model

Everything `analyze` prints for one (graph, labeling) pair. The JSON form is
schema-versioned and self-contained: the graph6 string and the label CSV are
enough to reproduce it.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .paths import GradientPath
from .verdict import LemmaReport, TheoremVerdict


class AnalysisReport(BaseModel):
    schema_version: int = 1
    graph6: str
    edges: List[Tuple[int, int]]
    labels: Tuple[int, ...]
    interval_vertices: Tuple[int, ...]
    spectra: List[Tuple[int, ...]]
    verdict: TheoremVerdict
    gradient_paths: Optional[List[GradientPath]] = None
    gradient_truncated: bool = False
    maximal_paths: Optional[List[GradientPath]] = None
    lemmas: List[LemmaReport] = Field(default_factory=list)

    def to_json_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": self.schema_version,
            "graph": {"graph6": self.graph6, "edges": [list(e) for e in self.edges]},
            "labels": list(self.labels),
            "interval_vertices": list(self.interval_vertices),
            "spectra": [list(s) for s in self.spectra],
            "verdict": self.verdict.to_json_dict(),
            "lemmas": [report.summary() for report in self.lemmas],
        }
        if self.gradient_paths is not None:
            data["gradient_paths"] = [p.to_json_dict() for p in self.gradient_paths]
            data["gradient_truncated"] = self.gradient_truncated
        if self.maximal_paths is not None:
            data["maximal_paths"] = [p.to_json_dict() for p in self.maximal_paths]
        return data
