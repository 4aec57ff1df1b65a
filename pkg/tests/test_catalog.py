"""Tests for closed-form chromatic numbers and catalog colorings."""

import pytest

from spackd.engine.catalog import (
    CYCLE_6,
    DIAGONAL_2,
    LONG_12,
    PACKING_FAMILIES,
    PARITY,
    catalog_coloring,
    chi,
    chi_reduced,
    coloring_for_range,
    select_family_index,
)
from spackd.engine.verifier import verify_explicit, verify_schema
from spackd.graph.distance_graph import DistanceGraphSpec
from spackd.parser.sequence import parse_sequence
from spackd.utils.errors import (
    ConstructiveOutOfScopeError,
    NotConnectedError,
    UnsupportedSequenceError,
)

from .helpers import coprime_pairs

ORDERED_SEQUENCES = ("1^inf", "1^3,2^inf", "1^2,2^inf", "1,2^inf", "2^inf")


class TestChi:
    """Closed forms for the four sequence shapes."""

    @pytest.mark.parametrize(
        "seq_text, k, t, expected",
        [
            ("1^inf", 3, 5, 2),
            ("1^inf", 3, 4, 3),
            ("1^5,2^inf", 3, 4, 3),
            ("1^2,2^inf", 3, 4, 4),
            ("1^2,2^inf", 3, 5, 2),
            ("1,2^inf", 3, 4, 5),
            ("1,2^inf", 2, 3, 6),
            ("2^inf", 2, 3, 7),
            ("2^inf", 4, 7, 5),
            ("2^inf", 3, 4, 5),
            ("2^inf", 3, 5, 6),
            ("2^inf", 4, 5, 6),
        ],
    )
    def test_values(self, seq_text, k, t, expected):
        assert chi(parse_sequence(seq_text), k, t).value == expected

    def test_source_and_constructive(self, pairs):
        result = chi(pairs, 3, 4)
        assert result.source == "(1^2,2^inf): k+t odd"
        assert result.constructive
        assert not chi(pairs, 2, 3).constructive
        assert result.to_dict() == {
            "value": 4,
            "source": "(1^2,2^inf): k+t odd",
            "constructive": True,
        }

    def test_other_sequence(self):
        with pytest.raises(UnsupportedSequenceError):
            chi(parse_sequence("1,3^inf"), 3, 4)

    def test_not_connected(self, ones):
        with pytest.raises(NotConnectedError):
            chi(ones, 2, 4)

    def test_reduction(self, packing):
        result, g = chi_reduced(packing, 6, 10)
        assert g == 2
        assert result.value == chi(packing, 3, 5).value

    def test_reduction_connected(self, twos):
        result, g = chi_reduced(twos, 4, 7)
        assert g == 1
        assert result.value == 5

    @pytest.mark.parametrize("seq_text", ["1^inf", "1^2,2^inf", "1,2^inf", "2^inf"])
    def test_reduction_invariance(self, seq_text):
        seq = parse_sequence(seq_text)
        for k, t in coprime_pairs(14)[:50]:
            result, g = chi_reduced(seq, 2 * k, 2 * t)
            assert g == 2
            assert result.value == chi(seq, k, t).value

    def test_monotone_in_sequence(self):
        seqs = [parse_sequence(text) for text in ORDERED_SEQUENCES]
        for k, t in coprime_pairs(15):
            values = [chi(seq, k, t).value for seq in seqs]
            assert values == sorted(values), (k, t)


class TestFamilySelection:
    def test_index(self):
        assert select_family_index(4, 5) == 0
        assert select_family_index(3, 4) == 1
        assert select_family_index(7, 13) == 5

    def test_every_pair_admitted(self):
        for k, t in coprime_pairs(40, min_k=3, min_t=12):
            family = PACKING_FAMILIES[select_family_index(k, t)]
            assert family.admits(k, t)
            assert t >= family.min_t


class TestCatalogColoring:
    """Optimal schemas."""

    def test_family_for_large_t(self, packing):
        assert catalog_coloring(packing, 7, 13) == PACKING_FAMILIES[5].instantiate(13, 7)

    def test_long_pattern_for_k3_t5(self, twos):
        schema = catalog_coloring(twos, 3, 5)
        assert set(schema.columns) == {"A"}
        assert schema.patterns["A"] == LONG_12
        assert schema.shifts == (3,) * 5

    def test_diagonal_five_coloring(self, twos):
        schema = catalog_coloring(twos, 4, 7)
        assert schema.patterns["A"] == DIAGONAL_2
        assert schema.shifts == (2,) * 7

    def test_six_colors_use_one_cycle(self, twos):
        schema = catalog_coloring(twos, 4, 5)
        assert {schema.patterns[name] for name in schema.columns} == {CYCLE_6}
        assert schema.shifts == (2,) * 5

    def test_parity(self, ones):
        schema = catalog_coloring(ones, 3, 5)
        assert schema.patterns["A"] == PARITY

    def test_odd_cycle(self, ones):
        schema = catalog_coloring(ones, 3, 4)
        assert schema.num_colors() == 3
        assert verify_schema(schema, ones).is_valid

    def test_small_k_out_of_scope(self, ones):
        with pytest.raises(ConstructiveOutOfScopeError):
            catalog_coloring(ones, 2, 3)

    @pytest.mark.parametrize("seq_text", ["1^inf", "1,1,2^inf", "1,2^inf", "2^inf"])
    def test_sweep_to_60(self, seq_text):
        seq = parse_sequence(seq_text)
        for k, t in coprime_pairs(60, min_k=3, min_t=4):
            schema = catalog_coloring(seq, k, t)
            assert verify_schema(schema, seq).is_valid, (seq_text, k, t)
            assert schema.num_colors() == chi(seq, k, t).value, (seq_text, k, t)


class TestColoringForRange:
    def test_parity_range(self, ones):
        assert coloring_for_range(ones, 3, 5, 0, 5) == {0: 1, 1: 2, 2: 1, 3: 2, 4: 1, 5: 2}

    def test_empty_range(self, ones):
        assert coloring_for_range(ones, 3, 5, 4, 3) == {}

    def test_range_verifies(self, packing):
        assignment = coloring_for_range(packing, 4, 9, -100, 100)
        assert len(assignment) == 201
        assert verify_explicit(assignment, DistanceGraphSpec(4, 9), packing).is_valid
