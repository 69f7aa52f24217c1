from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings

from spectra.errors import (
    EmptySpectrum,
    InvalidInput,
    InvalidVertex,
    LabelCountMismatch,
    LabelOutOfRange,
    NonInjective,
    NotBijective,
)
from spectra.graph import star_graph
from spectra.labeling import (
    Labeling,
    complement_labeling,
    greatest,
    in_lambda,
    induced_spectrum,
    interval_induced_subgraph,
    interval_vertices,
    is_interval,
    least,
    random_labeling,
    spectra,
    spectrum,
    validate_labeling,
)
from spectra.test.strategies import labeled_graphs


class TestIntervals:
    @pytest.mark.parametrize("a, expected", [
        ((5,), True),
        ((3, 4, 5), True),
        ((1, 3), False),
        ((1, 2, 4), False),
    ])
    def test_is_interval(self, a, expected):
        assert is_interval(a) is expected

    def test_empty_set(self):
        with pytest.raises(EmptySpectrum):
            is_interval(())
        with pytest.raises(EmptySpectrum):
            least(())
        with pytest.raises(EmptySpectrum):
            greatest(())

    def test_least_and_greatest(self):
        assert least((2, 4, 9)) == 2
        assert greatest((2, 4, 9)) == 9


class TestLabelingModel:
    def test_csv(self):
        labeling = Labeling.from_csv(" 3, 1,2 \n")
        assert labeling.labels == (3, 1, 2)
        assert labeling.to_csv() == "3,1,2"
        assert labeling.is_bijective

    @pytest.mark.parametrize("text", ["1,,2", "1,2,", ",1", "", "1,x,2"])
    def test_csv_rejects_empty_or_bad_fields(self, text):
        with pytest.raises(InvalidInput):
            Labeling.from_csv(text)

    def test_non_injective(self):
        with pytest.raises(NonInjective) as excinfo:
            Labeling(labels=(1, 1, 2))
        assert excinfo.value.context["edges"] == [0, 1]

    def test_out_of_range(self):
        with pytest.raises(LabelOutOfRange):
            Labeling(labels=(0, 1))

    def test_injective_but_not_bijective(self, k3):
        labeling = validate_labeling(k3, (1, 2, 7))
        assert not labeling.is_bijective
        with pytest.raises(NotBijective):
            validate_labeling(k3, (1, 2, 7), bijective=True)

    def test_length_mismatch(self, k3):
        with pytest.raises(LabelCountMismatch):
            validate_labeling(k3, (1, 2))


class TestSpectra:
    def test_triangle(self, k3):
        labels = (1, 2, 3)
        assert spectrum(k3, labels, 0) == (1, 3)
        assert spectrum(k3, labels, 1) == (1, 2)
        assert spectra(k3, labels) == [(1, 3), (1, 2), (2, 3)]
        assert interval_vertices(k3, labels) == (1, 2)

    def test_invalid_vertex(self, k3):
        with pytest.raises(InvalidVertex):
            spectrum(k3, (1, 2, 3), 5)

    def test_cycle_with_no_interval_vertex(self, c5):
        labels = (1, 3, 5, 2, 4)
        assert interval_vertices(c5, labels) == ()
        assert not in_lambda(c5, labels)
        assert interval_induced_subgraph(c5, labels).graph.vertex_count == 0

    def test_path_all_interval(self, p4):
        assert interval_vertices(p4, (1, 2, 3)) == (0, 1, 2, 3)

    def test_star_whole(self):
        g = star_graph(3)
        assert interval_vertices(g, (2, 3, 1)) == (0, 1, 2, 3)

    def test_interval_subgraph_of_triangle(self, k3):
        sub = interval_induced_subgraph(k3, (1, 2, 3))
        assert sub.vertex_map == (1, 2)
        assert sub.graph.edges == ((0, 1),)

    def test_induced_spectrum(self, p4):
        # U = {0, 1, 3}; edge (1, 2) leaves U
        assert induced_spectrum(p4, (2, 1, 3), {0, 1, 3}, 1) == (2,)

    def test_large_injective_labels(self, p4):
        assert interval_vertices(p4, (100, 101, 500)) == (0, 1, 3)


class TestComplement:
    def test_triangle(self, k3):
        assert complement_labeling(k3, (1, 2, 3)).labels == (3, 2, 1)

    def test_requires_bijection(self, k3):
        with pytest.raises(NotBijective):
            complement_labeling(k3, (1, 2, 9))

    @settings(max_examples=100, deadline=None)
    @given(labeled_graphs())
    def test_complement_preserves_interval_vertices(self, case):
        g, labels = case
        assert interval_vertices(g, labels) == interval_vertices(g, complement_labeling(g, labels))


class TestRandomLabeling:
    def test_deterministic_per_seed(self, k4):
        assert random_labeling(k4, 7) == random_labeling(k4, 7)

    def test_bijective(self, k4):
        for seed in range(20):
            assert random_labeling(k4, seed).is_bijective

    def test_seeds_differ(self, k4):
        assert len({random_labeling(k4, seed).labels for seed in range(20)}) > 1

    def test_uniform_over_bijections(self, k3):
        seeds = 10_000
        counts = Counter(random_labeling(k3, seed).labels for seed in range(seeds))
        assert set(counts) == set(permutations((1, 2, 3)))
        for labels, count in counts.items():
            assert abs(count / seeds - 1 / 6) <= 0.02, labels
