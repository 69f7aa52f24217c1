"""
Labeling Statistics Models

Aggregates over an iteration space of labelings. Merging is associative and
commutative so shard results combine in any order.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .verdict import Overall, TheoremVerdict


class ViolationRecord(BaseModel):
    """Everything needed to reproduce one failing labeling"""
    labels: Tuple[int, ...]
    verdict: TheoremVerdict


class LabelingStats(BaseModel):
    """Aggregated verification results over many labelings"""
    total_labelings: int = 0
    visits: int = 0  # labelings actually evaluated (fewer than total under pruning)
    histogram_of_U_size: Dict[int, int] = Field(default_factory=dict)
    empty_U_count: int = 0
    full_interval_count: int = 0
    max_U: int = 0
    max_component_degree: int = 0
    max_component_vertices: int = 0
    lemma_failures: int = 0
    violation_count: int = 0
    violations: List[ViolationRecord] = Field(default_factory=list)
    violation_cap: int = 100
    first_full_interval: Optional[Tuple[int, ...]] = None

    @property
    def violations_dropped(self) -> int:
        return self.violation_count - len(self.violations)

    def record(
        self,
        labels: Tuple[int, ...],
        verdict: TheoremVerdict,
        vertex_count: int,
        weight: int = 1,
        component_degree: int = 0,
        lemma_failures: int = 0,
    ) -> None:
        u_size = verdict.interval_vertex_total
        self.total_labelings += weight
        self.visits += 1
        self.histogram_of_U_size[u_size] = self.histogram_of_U_size.get(u_size, 0) + weight
        if u_size == 0:
            self.empty_U_count += weight
        if u_size == vertex_count:
            self.full_interval_count += weight
            if self.first_full_interval is None:
                self.first_full_interval = tuple(labels)
        self.max_U = max(self.max_U, u_size)
        self.max_component_degree = max(self.max_component_degree, component_degree)
        if verdict.components:
            largest = max(len(c.host_vertices) for c in verdict.components)
            self.max_component_vertices = max(self.max_component_vertices, largest)
        self.lemma_failures += lemma_failures * weight
        if verdict.overall is Overall.VIOLATION:
            self.violation_count += weight
            if len(self.violations) < self.violation_cap:
                self.violations.append(ViolationRecord(labels=tuple(labels), verdict=verdict))

    def merge(self, other: "LabelingStats") -> "LabelingStats":
        histogram = dict(self.histogram_of_U_size)
        for size, count in other.histogram_of_U_size.items():
            histogram[size] = histogram.get(size, 0) + count
        cap = max(self.violation_cap, other.violation_cap)
        violations = sorted(self.violations + other.violations, key=lambda r: r.labels)[:cap]
        firsts = [f for f in (self.first_full_interval, other.first_full_interval) if f is not None]
        return LabelingStats(
            total_labelings=self.total_labelings + other.total_labelings,
            visits=self.visits + other.visits,
            histogram_of_U_size=dict(sorted(histogram.items())),
            empty_U_count=self.empty_U_count + other.empty_U_count,
            full_interval_count=self.full_interval_count + other.full_interval_count,
            max_U=max(self.max_U, other.max_U),
            max_component_degree=max(self.max_component_degree, other.max_component_degree),
            max_component_vertices=max(self.max_component_vertices, other.max_component_vertices),
            lemma_failures=self.lemma_failures + other.lemma_failures,
            violation_count=self.violation_count + other.violation_count,
            violations=violations,
            violation_cap=cap,
            first_full_interval=min(firsts) if firsts else None,
        )

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "total": self.total_labelings,
            "visits": self.visits,
            "histogram_of_U_size": {str(k): v for k, v in sorted(self.histogram_of_U_size.items())},
            "empty_U_count": self.empty_U_count,
            "full_interval_count": self.full_interval_count,
            "max_U": self.max_U,
            "max_component_degree": self.max_component_degree,
            "max_component_vertices": self.max_component_vertices,
            "lemma_failures": self.lemma_failures,
            "violations": self.violation_count,
            "violations_stored": len(self.violations),
            "violations_dropped": self.violations_dropped,
        }
