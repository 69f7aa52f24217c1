"""
Verdict Models

This module defines the data models produced by the classification of
G^(f,int): one class per connected component, the assembled verdict and the
lemma check reports.
"""

from enum import Enum
from typing import Annotated, Any, Dict, List, Literal, Tuple, Union

from pydantic import BaseModel, Field


class Direction(str, Enum):
    """Orientation of a label chain"""
    ASCENDING = "ascending"
    DESCENDING = "descending"


class ViolationReason(str, Enum):
    """Stable vocabulary for machine-readable counterexample reports"""
    NOT_GALAXY = "not_galaxy"
    TOO_MANY_BAD_LEAVES = "too_many_bad_leaves"
    BAD_LEAF_NOT_PERIPHERAL = "bad_leaf_not_peripheral"
    PAIR_NOT_DIAMETRAL = "pair_not_diametral"


class Overall(str, Enum):
    HOLDS = "holds"
    VACUOUS = "vacuous"
    VIOLATION = "violation"


class IsolatedVertex(BaseModel):
    """H is K1; its vertex may or may not be a host leaf"""
    kind: Literal["k1"] = "k1"
    vertex: int
    is_host_leaf: bool


class GalaxyCaseA(BaseModel):
    """Every leaf of H is a host leaf"""
    kind: Literal["galaxy_a"] = "galaxy_a"


class GalaxyCaseB(BaseModel):
    """Exactly one leaf of H is not a host leaf, and it is peripheral in H"""
    kind: Literal["galaxy_b"] = "galaxy_b"
    bad_leaf: int


class GalaxyCaseC(BaseModel):
    """Exactly two leaves of H are not host leaves, at distance diam(H)"""
    kind: Literal["galaxy_c"] = "galaxy_c"
    bad_pair: Tuple[int, int]
    pair_distance: int


class Violation(BaseModel):
    """A component that fits none of the admissible shapes"""
    kind: Literal["violation"] = "violation"
    reason: ViolationReason
    witness: Dict[str, Any] = Field(default_factory=dict)


ComponentClass = Annotated[
    Union[IsolatedVertex, GalaxyCaseA, GalaxyCaseB, GalaxyCaseC, Violation],
    Field(discriminator="kind"),
]


class ComponentVerdict(BaseModel):
    host_vertices: Tuple[int, ...]
    classification: ComponentClass

    def to_json_dict(self) -> Dict[str, Any]:
        detail = self.classification.model_dump(mode="json", exclude={"kind"})
        return {
            "host_vertices": list(self.host_vertices),
            "class": self.classification.kind,
            "detail": detail,
        }


class TheoremVerdict(BaseModel):
    """Outcome of checking one labeling against the structure theorem"""
    lambda_member: bool
    is_forest: bool
    components: List[ComponentVerdict] = Field(default_factory=list)
    overall: Overall

    @property
    def interval_vertex_total(self) -> int:
        return sum(len(c.host_vertices) for c in self.components)

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "lambda_member": self.lambda_member,
            "is_forest": self.is_forest,
            "overall": self.overall.value,
            "components": [c.to_json_dict() for c in self.components],
        }


class LemmaReport(BaseModel):
    """Result of one per-labeling claim check; failures are expected to stay empty"""
    name: str
    checked: int = 0
    failures: List[Dict[str, Any]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": len(self.failures),
            "passed": self.passed,
        }
