"""Tests for exact window search and lower-bound certification."""

import pytest

from spackd.engine.catalog import chi
from spackd.engine.search import WindowSearch, certify_lower_bound, search_window
from spackd.engine.verifier import verify_explicit
from spackd.graph.distance_graph import DistanceGraphSpec
from spackd.ir.schema import SearchOutcome, SearchStatus
from spackd.parser.sequence import parse_sequence
from spackd.utils.errors import InvalidArgumentError, NotConnectedError, SpackdError

from .helpers import coprime_pairs

G34 = DistanceGraphSpec(3, 4)


class TestSearchWindow:
    """Satisfiability on [0, N)."""

    def test_single_color_no_edges(self, ones):
        outcome = search_window(ones, G34, 1, 2)
        assert outcome.status is SearchStatus.SAT
        assert outcome.witness == {0: 1, 1: 1}

    def test_single_color_with_edge(self, ones):
        assert search_window(ones, G34, 1, 5).status is SearchStatus.UNSAT

    def test_odd_cycle_needs_three(self, ones):
        assert search_window(ones, G34, 2, 8).status is SearchStatus.UNSAT
        assert search_window(ones, G34, 3, 8).status is SearchStatus.SAT

    def test_pairs_three_colors_unsat(self, pairs):
        outcome = search_window(pairs, G34, 3, 40)
        assert outcome.status is SearchStatus.UNSAT
        assert outcome.witness is None
        assert outcome.nodes_explored > 0

    def test_pairs_four_colors_sat(self, pairs):
        outcome = search_window(pairs, G34, 4, 40)
        assert outcome.status is SearchStatus.SAT
        assert sorted(outcome.witness) == list(range(40))
        assert verify_explicit(outcome.witness, G34, pairs).is_valid

    @pytest.mark.parametrize(
        "seq_text, k, t, window",
        [("1^inf", 3, 4, 8), ("1,1,2^inf", 3, 4, 40), ("2^inf", 2, 3, 12)],
    )
    def test_unsat_is_monotone_in_colors(self, seq_text, k, t, window):
        seq, spec = parse_sequence(seq_text), DistanceGraphSpec(k, t)
        top = chi(seq, k, t).value
        statuses = [
            search_window(seq, spec, colors, window).status for colors in range(1, top + 1)
        ]
        assert SearchStatus.TIMEOUT not in statuses
        unsat = [status is SearchStatus.UNSAT for status in statuses]
        assert unsat == sorted(unsat, reverse=True)
        assert unsat[0]
        assert statuses[-1] is SearchStatus.SAT

    def test_budget_timeout(self, pairs):
        outcome = search_window(pairs, G34, 3, 40, node_budget=5)
        assert outcome.status is SearchStatus.TIMEOUT
        assert outcome.nodes_explored == 5
        assert outcome.witness is None

    def test_deterministic(self, packing):
        first = search_window(packing, DistanceGraphSpec(3, 5), 5, 24)
        second = search_window(packing, DistanceGraphSpec(3, 5), 5, 24)
        assert first == second

    def test_vertex_zero_takes_first_color(self, pairs):
        outcome = search_window(pairs, G34, 4, 12)
        assert outcome.witness[0] == 1

    def test_not_connected(self, ones):
        with pytest.raises(NotConnectedError):
            search_window(ones, DistanceGraphSpec(2, 4), 2, 4)

    def test_json(self, ones):
        outcome = search_window(ones, G34, 1, 2)
        assert outcome.to_dict() == {
            "status": "sat",
            "window": 2,
            "nodes": outcome.nodes_explored,
            "witness": [{"n": 0, "color": 1}, {"n": 1, "color": 1}],
        }
        assert SearchOutcome.from_dict(outcome.to_dict()) == outcome


class TestParallelSearch:
    """Split search must match the sequential one."""

    @pytest.mark.parametrize(
        "seq_text, k, t, colors, window",
        [
            ("1^2,2^inf", 3, 4, 3, 40),
            ("1^2,2^inf", 3, 4, 4, 40),
            ("1,2^inf", 3, 4, 4, 28),
        ],
    )
    def test_matches_sequential(self, seq_text, k, t, colors, window):
        seq, spec = parse_sequence(seq_text), DistanceGraphSpec(k, t)
        sequential = search_window(seq, spec, colors, window)
        parallel = search_window(seq, spec, colors, window, workers=2, split_depth=4)
        assert parallel == sequential

    def test_timeout_matches_sequential(self, pairs):
        sequential = search_window(pairs, G34, 3, 40, node_budget=50)
        parallel = search_window(pairs, G34, 3, 40, node_budget=50, workers=2, split_depth=3)
        assert parallel == sequential


class TestSplit:
    def test_prefixes_are_consistent(self, pairs):
        planner = WindowSearch(pairs, G34, 4, 20)
        plan = planner.split(3)
        assert plan.branches
        for branch in plan.branches:
            assert len(branch.prefix) == 3
            assert WindowSearch(pairs, G34, 4, 20).replay(branch.prefix)
        assert sum(b.lead for b in plan.branches) + plan.trailing == planner.nodes


class TestCertifyLowerBound:
    """Lower bounds by growing windows."""

    def test_pairs(self, pairs):
        certificate = certify_lower_bound(pairs, G34, 4)
        assert certificate.certified
        assert certificate.window in certificate.windows_tried
        assert certificate.windows_tried[0] == 14

    def test_packing_needs_five(self, packing):
        assert certify_lower_bound(packing, G34, 5).certified

    def test_inconclusive_when_colorable(self, pairs):
        certificate = certify_lower_bound(pairs, G34, 5, max_factor=4)
        assert certificate.status == "inconclusive"
        assert certificate.window is None
        assert certificate.windows_tried == [14, 28]

    def test_inconclusive_on_budget(self, pairs):
        certificate = certify_lower_bound(pairs, G34, 4, node_budget=3)
        assert not certificate.certified
        assert certificate.nodes <= 3

    def test_target_too_small(self, ones):
        with pytest.raises(InvalidArgumentError):
            certify_lower_bound(ones, G34, 1)

    @pytest.mark.parametrize("colors, window", [(0, 10), (2, 0)])
    def test_bad_arguments_are_spackd_errors(self, ones, colors, window):
        with pytest.raises(SpackdError):
            search_window(ones, G34, colors, window)

    @pytest.mark.slow
    def test_distance2_k3_t5(self, twos):
        assert certify_lower_bound(twos, DistanceGraphSpec(3, 5), 6).certified

    @pytest.mark.slow
    def test_chi_colors_suffice(self):
        for seq_text in ("1^2,2^inf", "1,2^inf", "2^inf"):
            seq = parse_sequence(seq_text)
            for k, t in coprime_pairs(12, min_k=3, min_t=4):
                value = chi(seq, k, t).value
                outcome = search_window(seq, DistanceGraphSpec(k, t), value, 4 * (k + t))
                assert outcome.status is SearchStatus.SAT, (seq_text, k, t)

    @pytest.mark.slow
    @pytest.mark.parametrize("seq_text", ["1^2,2^inf", "1,2^inf", "2^inf"])
    def test_certifies_chi_up_to_t10(self, seq_text):
        seq = parse_sequence(seq_text)
        for k, t in coprime_pairs(10, min_k=3, min_t=4):
            value = chi(seq, k, t).value
            certificate = certify_lower_bound(seq, DistanceGraphSpec(k, t), value)
            assert certificate.certified, (seq_text, k, t)
