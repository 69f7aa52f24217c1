from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from spectra.corpus import named_host
from spectra.errors import InvalidPath, NotAnEdge, NotInLambda, TruncatedOutput
from spectra.gradient import (
    check_edge_cover_uniqueness,
    check_maximal_uniqueness,
    containing_maximal_path,
    enumerate_gradient_paths,
    is_gradient_path,
    is_trivial_gradient_path,
    maximal_gradient_paths,
)
from spectra.graph import complete_graph
from spectra.labeling import interval_vertices
from spectra.models.paths import GradientPath
from spectra.models.verdict import Direction
from spectra.test.strategies import labeled_graphs

P4_PATHS = [
    (0, 1), (0, 1, 2), (0, 1, 2, 3), (1, 0), (1, 2), (1, 2, 3),
    (2, 1), (2, 1, 0), (2, 3), (3, 2), (3, 2, 1), (3, 2, 1, 0),
]


def _oracle_paths(g, labels):
    """Every gradient path by brute force over simple paths of G^(f,int)"""
    members = set(interval_vertices(g, labels))
    label = {frozenset(e): labels[i] for i, e in enumerate(g.edges)}
    h = nx.Graph()
    h.add_nodes_from(members)
    h.add_edges_from(e for e in g.edges if set(e) <= members)
    spec = {x: sorted(label[frozenset((x, y))] for y in h.neighbors(x)) for x in members}
    found = set()
    for source in members:
        for target in members:
            if source == target:
                continue
            for path in nx.all_simple_paths(h, source, target):
                steps = [(label[frozenset((u, v))], u, v) for u, v in zip(path, path[1:])]
                up = all(c == spec[u][-1] == spec[v][0] for c, u, v in steps)
                down = all(c == spec[u][0] == spec[v][-1] for c, u, v in steps)
                if up and down:
                    assert len(path) == 2
                    found.add(tuple(path))
                elif up or down:
                    found.add(tuple(path))
    return found


class TestTrivialPaths:
    def test_path_pair_ascends(self, p4):
        assert is_trivial_gradient_path(p4, (1, 2, 3), 1, 2) is Direction.ASCENDING
        assert is_trivial_gradient_path(p4, (1, 2, 3), 2, 1) is Direction.DESCENDING

    def test_tie_rule_on_singleton_spectra(self, k3):
        assert is_trivial_gradient_path(k3, (1, 2, 3), 1, 2) is Direction.ASCENDING
        assert is_trivial_gradient_path(k3, (1, 2, 3), 2, 1) is Direction.DESCENDING

    def test_pair_outside_u(self, k3):
        assert is_trivial_gradient_path(k3, (1, 2, 3), 0, 1) is None

    def test_not_an_edge(self, p4):
        with pytest.raises(NotAnEdge):
            is_trivial_gradient_path(p4, (1, 2, 3), 0, 2)


class TestEnumeration:
    def test_path_lists_every_subpath_both_ways(self, p4):
        paths = enumerate_gradient_paths(p4, (1, 2, 3))
        assert [p.vertices for p in paths] == P4_PATHS
        ascending = [p for p in paths if p.direction is Direction.ASCENDING]
        assert len(ascending) == 6
        assert paths[2].edge_labels == (1, 2, 3)

    def test_k2_component_gives_one_path_per_direction(self, k3):
        paths = enumerate_gradient_paths(k3, (1, 2, 3))
        assert [(p.vertices, p.direction) for p in paths] == [
            ((1, 2), Direction.ASCENDING), ((2, 1), Direction.DESCENDING),
        ]
        assert all(p.tie_rule for p in paths)

    def test_reversal_duality(self, p5):
        paths = {(p.vertices, p.direction) for p in enumerate_gradient_paths(p5, (1, 2, 3, 4))}
        for vertices, direction in paths:
            flipped = Direction.DESCENDING if direction is Direction.ASCENDING else Direction.ASCENDING
            assert (vertices[::-1], flipped) in paths

    def test_truncation_keeps_prefix(self, p4):
        with pytest.raises(TruncatedOutput) as excinfo:
            enumerate_gradient_paths(p4, (1, 2, 3), max_count=5)
        assert [p.vertices for p in excinfo.value.partial] == P4_PATHS[:5]

    def test_exact_bound_is_not_truncation(self, p4):
        assert len(enumerate_gradient_paths(p4, (1, 2, 3), max_count=12)) == 12

    def test_not_in_lambda(self, c5):
        with pytest.raises(NotInLambda):
            enumerate_gradient_paths(c5, (1, 3, 5, 2, 4))

    def test_complete_host_without_interval_vertices(self, k4):
        assert interval_vertices(k4, (1, 2, 4, 5, 3, 6)) == ()
        with pytest.raises(NotInLambda):
            enumerate_gradient_paths(k4, (1, 2, 4, 5, 3, 6))

    @settings(max_examples=100, deadline=None)
    @given(labeled_graphs(max_vertices=6, max_edges=8))
    def test_matches_brute_force(self, case):
        g, labels = case
        if not interval_vertices(g, labels):
            with pytest.raises(NotInLambda):
                enumerate_gradient_paths(g, labels)
            return
        found = {p.vertices for p in enumerate_gradient_paths(g, labels)}
        assert found == _oracle_paths(g, labels)


class TestDefinitionCheck:
    def test_accepts_full_path(self, p4):
        path = is_gradient_path(p4, (1, 2, 3), (0, 1, 2, 3))
        assert path.direction is Direction.ASCENDING

    @pytest.mark.parametrize("vertices", [(0,), (0, 2), (0, 1, 0), (1, 0, 2)])
    def test_rejects(self, p4, vertices):
        assert is_gradient_path(p4, (1, 2, 3), vertices) is None


class TestMaximalPaths:
    def test_path(self, p4):
        assert [p.vertices for p in maximal_gradient_paths(p4, (1, 2, 3))] == [(0, 1, 2, 3)]

    def test_triangle(self, k3):
        [path] = maximal_gradient_paths(k3, (1, 2, 3))
        assert path.vertices == (1, 2)
        assert path.tie_rule

    def test_path_with_gap(self, p4):
        assert [p.vertices for p in maximal_gradient_paths(p4, (2, 1, 3))] == [(0, 1)]

    def test_container_oriented_like_query(self, p4):
        labels = (1, 2, 3)
        up = GradientPath(vertices=(1, 2), direction=Direction.ASCENDING, edge_labels=(2,))
        assert containing_maximal_path(p4, labels, up).vertices == (0, 1, 2, 3)
        assert containing_maximal_path(p4, labels, up.reversed()).vertices == (3, 2, 1, 0)

    def test_container_of_edge_between_inner_vertices(self, p5):
        p = GradientPath(vertices=(1, 2), direction=Direction.ASCENDING, edge_labels=(2,))
        assert containing_maximal_path(p5, (1, 2, 3, 4), p).vertices == (0, 1, 2, 3, 4)

    def test_invalid_query(self, p4):
        bogus = GradientPath(vertices=(0, 2), direction=Direction.ASCENDING, edge_labels=(1,))
        with pytest.raises(InvalidPath):
            containing_maximal_path(p4, (1, 2, 3), bogus)

    def test_wrong_direction_is_invalid(self, p4):
        wrong = GradientPath(vertices=(1, 2), direction=Direction.DESCENDING, edge_labels=(2,))
        with pytest.raises(InvalidPath):
            containing_maximal_path(p4, (1, 2, 3), wrong)

    @settings(max_examples=100, deadline=None)
    @given(labeled_graphs(max_vertices=6, max_edges=8))
    def test_maximal_by_subset_definition(self, case):
        g, labels = case
        oracle = _oracle_paths(g, labels)
        if not oracle:
            return
        vertex_sets = {frozenset(p) for p in oracle}
        expected = {s for s in vertex_sets if not any(s < t for t in vertex_sets)}
        found = {p.vertex_set for p in maximal_gradient_paths(g, labels)}
        assert found == expected


class TestUniqueness:
    def test_edge_cover_on_path(self, p5):
        report = check_edge_cover_uniqueness(p5, (1, 2, 3, 4))
        assert report.checked == 2
        assert report.passed

    def test_vacuous_when_u_empty(self, c5):
        assert check_maximal_uniqueness(c5, (1, 3, 5, 2, 4)).checked == 0

    @pytest.mark.parametrize("name", ["p4", "star3", "paw", "c4", "c5", "bull"])
    def test_every_labeling_of_small_hosts(self, name):
        g = named_host(name)
        for labels in permutations(range(1, g.edge_count + 1)):
            assert check_maximal_uniqueness(g, labels).passed, labels
            assert check_edge_cover_uniqueness(g, labels).passed, labels

    def test_k4_every_labeling(self):
        g = complete_graph(4)
        for labels in permutations(range(1, 7)):
            assert check_maximal_uniqueness(g, labels).passed
