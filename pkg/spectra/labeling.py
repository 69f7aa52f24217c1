"""
Edge Labelings and Vertex Spectra

This module implements injective edge labelings, the spectrum of a vertex
(the set of labels on its incident edges), interval detection, the set of
interval-spectrum vertices U(G, f) and the subgraph G^(f,int) it induces.

Two labeling modes are supported: bijective onto [1, |E|] (the default, and
the only mode that is ever enumerated) and general injective into
[1, MAX_LABEL], accepted on input.
"""

from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from .config import get_settings
from .errors import (
    EmptySpectrum,
    InvalidInput,
    LabelCountMismatch,
    LabelOutOfRange,
    NonInjective,
    NotBijective,
)
from .graph import Graph, InducedSubgraph, VertexSet, induced_subgraph

Spectrum = Tuple[int, ...]


class Labeling(BaseModel):
    """Injective edge labeling stored in edge-index order"""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[int, ...]

    @field_validator("labels")
    @classmethod
    def _check_injective(cls, labels: Tuple[int, ...]) -> Tuple[int, ...]:
        ceiling = get_settings().MAX_LABEL
        for position, value in enumerate(labels):
            if not 1 <= value <= ceiling:
                raise LabelOutOfRange(
                    f"label {value} at edge {position} outside [1, {ceiling}]",
                    edge=position, label=value,
                )
        if len(set(labels)) != len(labels):
            seen = {}
            for position, value in enumerate(labels):
                if value in seen:
                    raise NonInjective(
                        f"label {value} used on edges {seen[value]} and {position}",
                        label=value, edges=[seen[value], position],
                    )
                seen[value] = position
        return labels

    @classmethod
    def from_csv(cls, text: str) -> "Labeling":
        fields = [field.strip() for field in text.strip().split(",")]
        labels = []
        for position, field in enumerate(fields):
            if not field:
                raise InvalidInput(f"empty label field at position {position} in {text.strip()!r}", position=position)
            try:
                labels.append(int(field))
            except ValueError:
                raise InvalidInput(f"label {field!r} at position {position} is not an integer", position=position) from None
        return cls(labels=tuple(labels))

    def to_csv(self) -> str:
        return ",".join(str(value) for value in self.labels)

    @property
    def is_bijective(self) -> bool:
        return sorted(self.labels) == list(range(1, len(self.labels) + 1))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, edge: int) -> int:
        return self.labels[edge]


LabelInput = Union[Labeling, Sequence[int]]


def as_labels(f: LabelInput) -> Tuple[int, ...]:
    """Plain label tuple from either a Labeling or a raw sequence"""
    if isinstance(f, Labeling):
        return f.labels
    return tuple(f)


def validate_labeling(g: Graph, f: LabelInput, bijective: bool = False) -> Labeling:
    """Check length, injectivity and (optionally) bijectivity against a graph"""
    labeling = f if isinstance(f, Labeling) else Labeling(labels=tuple(f))
    if len(labeling) != g.edge_count:
        raise LabelCountMismatch(
            f"labeling has {len(labeling)} labels for {g.edge_count} edges",
            labels=len(labeling), edges=g.edge_count,
        )
    if bijective and not labeling.is_bijective:
        raise NotBijective(f"labels are not a bijection onto [1, {g.edge_count}]")
    return labeling


def least(a: Spectrum) -> int:
    """l(A)"""
    if not a:
        raise EmptySpectrum("the empty set has no least element")
    return a[0]


def greatest(a: Spectrum) -> int:
    """L(A)"""
    if not a:
        raise EmptySpectrum("the empty set has no greatest element")
    return a[-1]


def is_interval(a: Spectrum) -> bool:
    """|A| = L(A) - l(A) + 1 for a sorted, duplicate-free A"""
    if not a:
        raise EmptySpectrum("interval test on an empty spectrum")
    return len(a) == a[-1] - a[0] + 1


def spectrum(g: Graph, f: LabelInput, x: int) -> Spectrum:
    """f[J_G(x)], sorted"""
    labels = as_labels(f)
    return tuple(sorted(labels[e] for e in g.incident_edges(x)))


def spectra(g: Graph, f: LabelInput) -> List[Spectrum]:
    labels = as_labels(f)
    return [tuple(sorted(labels[e] for _, e in row)) for row in g.adjacency]


def interval_flags(g: Graph, labels: Sequence[int]) -> List[bool]:
    """Per-vertex interval test without materializing sorted spectra"""
    flags = []
    for row in g.adjacency:
        if not row:
            flags.append(False)
            continue
        values = [labels[e] for _, e in row]
        flags.append(max(values) - min(values) + 1 == len(values))
    return flags


def interval_vertices(g: Graph, f: LabelInput) -> VertexSet:
    """U(G, f)"""
    labels = as_labels(f)
    return tuple(x for x, flag in enumerate(interval_flags(g, labels)) if flag)


def in_lambda(g: Graph, f: LabelInput) -> bool:
    """f belongs to λ(G) iff U(G, f) is nonempty"""
    return any(interval_flags(g, as_labels(f)))


def interval_induced_subgraph(g: Graph, f: LabelInput) -> InducedSubgraph:
    """G^(f,int); the empty graph when f is not in λ(G)"""
    return induced_subgraph(g, interval_vertices(g, f))


def induced_spectrum(g: Graph, labels: Sequence[int], members: Iterable[int], x: int) -> Spectrum:
    """Spectrum of x inside the subgraph induced by `members`"""
    inside = members if isinstance(members, (set, frozenset)) else set(members)
    return tuple(sorted(labels[e] for v, e in g.adjacency[x] if v in inside))


def complement_labeling(g: Graph, f: LabelInput) -> Labeling:
    """f'(e) = |E| + 1 - f(e) for a bijective f"""
    labeling = validate_labeling(g, f, bijective=True)
    top = g.edge_count + 1
    return Labeling(labels=tuple(top - value for value in labeling.labels))


def shuffled_labels(m: int, rng: np.random.Generator) -> List[int]:
    """Fisher-Yates over [1, m] driven by `rng`"""
    labels = list(range(1, m + 1))
    for i in range(m - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        labels[i], labels[j] = labels[j], labels[i]
    return labels


def random_labeling(g: Graph, seed: int) -> Labeling:
    """Uniform random bijection onto [1, |E|], deterministic per seed (PCG64)"""
    rng = np.random.Generator(np.random.PCG64(seed))
    return Labeling(labels=tuple(shuffled_labels(g.edge_count, rng)))
