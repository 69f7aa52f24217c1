import json

import pytest

from spectra.classify import check_theorem
from spectra.errors import InvalidInput
from spectra.graph import complete_graph, from_edge_list, is_forest, serialize_graph6
from spectra.repro import read_reproduction, reduce_counterexample, write_reproduction


class TestReproductionFiles:
    def test_round_trip(self, tmp_path, k3):
        verdict = check_theorem(k3, (1, 2, 3))
        path = write_reproduction(tmp_path, k3, (1, 2, 3), verdict, index=4)
        assert path.name == "violation_0004.txt"
        g, labeling = read_reproduction(path)
        assert serialize_graph6(g) == "Bw"
        assert check_theorem(g, labeling) == verdict
        saved = json.loads((tmp_path / "violation_0004.json").read_text())
        assert saved["overall"] == "holds"

    def test_labels_follow_graph6_edge_order(self, tmp_path, k3):
        # k3 lists e12 before e02; graph6 lists e02 first
        path = write_reproduction(tmp_path, k3, (1, 2, 3), check_theorem(k3, (1, 2, 3)))
        assert path.read_text().splitlines() == ["Bw", "1,3,2"]

    def test_rejects_wrong_label_count(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("Bw\n1,2\n")
        with pytest.raises(InvalidInput):
            read_reproduction(path)

    def test_rejects_missing_line(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("# only a comment\nBw\n")
        with pytest.raises(InvalidInput):
            read_reproduction(path)


class TestReduction:
    def test_reduces_to_a_cycle(self):
        g = complete_graph(5)

        def has_cycle(h, labels):
            return not is_forest(h)

        small, labels = reduce_counterexample(g, tuple(range(1, 11)), has_cycle)
        assert small.edge_count == small.vertex_count
        assert all(small.degree(x) == 2 for x in range(small.vertex_count))
        assert sorted(labels) == list(range(1, small.edge_count + 1))

    def test_keeps_labels_in_rank_order(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 3)])

        def middle_is_interval(h, labels):
            return h.vertex_count >= 3 and check_theorem(h, labels).lambda_member

        small, labels = reduce_counterexample(g, (3, 1, 2), middle_is_interval)
        assert small.edge_count == 2
        assert sorted(labels) == [1, 2]

    def test_predicate_must_hold_initially(self, k3):
        with pytest.raises(InvalidInput):
            reduce_counterexample(k3, (1, 2, 3))
