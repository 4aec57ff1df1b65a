"""Tests for torus grid enumeration."""

import pytest

from spackd.engine.torus import enumerate_torus, torus_graph
from spackd.ir.schema import TorusColoring
from spackd.parser.sequence import parse_sequence
from spackd.utils.errors import InvalidArgumentError, TorusSizeError


class TestTorusGraph:
    def test_degree(self):
        graph = torus_graph(5, 4)
        assert graph.number_of_nodes() == 20
        assert all(degree == 4 for _, degree in graph.degree())


class TestEnumerateTorus:
    """5-colorings with (2^inf) are diagonal."""

    def test_five_colors_all_diagonal(self):
        colorings = enumerate_torus(5, 5, 5)
        assert colorings
        assert all(coloring.diagonal_shifts() for coloring in colorings)

    def test_four_colors_impossible(self):
        assert enumerate_torus(4, 5, 5) == []

    def test_small_torus_too_dense(self):
        assert enumerate_torus(5, 3, 3) == []

    def test_canonical_representatives(self):
        full = enumerate_torus(5, 5, 5)
        canonical = enumerate_torus(5, 5, 5, canonical=True)
        assert set(c.cells for c in canonical) <= set(c.cells for c in full)
        # Every coloring uses all five colors, so each class has 5! relabelings
        assert len(full) == 120 * len(canonical)

    def test_lexicographic_first(self):
        first = enumerate_torus(5, 5, 5, canonical=True)[0]
        assert first.color(0, 0) == 1
        assert first.color(1, 0) == 2

    def test_packing_sequence(self):
        colorings = enumerate_torus(3, 4, 4, seq=parse_sequence("1^inf"), canonical=True)
        assert colorings
        assert all(max(max(col) for col in c.cells) <= 3 for c in colorings)

    def test_side_too_small(self):
        with pytest.raises(TorusSizeError):
            enumerate_torus(5, 2, 5)

    def test_state_cap(self):
        with pytest.raises(TorusSizeError):
            enumerate_torus(5, 40, 40)
        with pytest.raises(TorusSizeError):
            enumerate_torus(5, 5, 5, state_cap=100)

    def test_no_colors(self):
        with pytest.raises(InvalidArgumentError):
            enumerate_torus(0, 3, 3)


class TestTorusColoring:
    def test_diagonal_shift(self):
        cells = tuple(tuple((2 * i + j) % 5 + 1 for j in range(5)) for i in range(5))
        coloring = TorusColoring(5, 5, cells)
        assert coloring.has_diagonal_shift(2)
        assert coloring.diagonal_shifts() == [2]
        data = coloring.to_dict()
        assert data["width"] == 5
        assert data["diagonal_shifts"] == [2]
        assert data["cells"][1][0] == 3
