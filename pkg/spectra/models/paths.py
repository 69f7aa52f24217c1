"""
Gradient Path Models
"""

from typing import Any, Dict, Tuple

from pydantic import BaseModel, ConfigDict

from .verdict import Direction


class GradientPath(BaseModel):
    """A simple path in G^(f,int) whose labels chain max-to-min (or min-to-max)"""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    direction: Direction
    edge_labels: Tuple[int, ...]
    tie_rule: bool = False  # both induced spectra were singletons

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def reversed(self) -> "GradientPath":
        flipped = (
            Direction.DESCENDING if self.direction is Direction.ASCENDING else Direction.ASCENDING
        )
        return GradientPath(
            vertices=self.vertices[::-1], direction=flipped,
            edge_labels=self.edge_labels[::-1], tie_rule=self.tie_rule,
        )

    def ascending(self) -> "GradientPath":
        """The Ascending representative of the pair {P, reverse(P)}"""
        return self if self.direction is Direction.ASCENDING else self.reversed()

    def to_json_dict(self) -> Dict[str, Any]:
        data = {
            "vertices": list(self.vertices),
            "labels": list(self.edge_labels),
            "direction": self.direction.value,
        }
        if self.tie_rule:
            data["tie_rule"] = True
        return data
