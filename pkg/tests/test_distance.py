"""Tests for exact, BFS and grid distances."""

import random

import pytest

from spackd.graph.distance import ball_offsets, bfs_distance, exact_distance, grid_distance
from spackd.graph.distance_graph import DistanceGraphSpec, GridPoint, int_to_point
from spackd.utils.errors import GridOverflowError, NotConnectedError

from .helpers import coprime_pairs


class TestExactDistance:
    """Closed-form distance from the two candidate jump counts."""

    def test_examples(self):
        spec = DistanceGraphSpec(3, 4)
        assert exact_distance(0, 1, spec) == 2
        assert exact_distance(0, 7, spec) == 2
        assert exact_distance(0, 3, spec) == 1
        assert exact_distance(5, 5, spec) == 0

    def test_k1_is_ordinary_path_shortcut(self):
        spec = DistanceGraphSpec(1, 2)
        assert exact_distance(0, 5, spec) == 3
        assert exact_distance(0, -6, spec) == 3

    def test_symmetric_and_translation_invariant(self):
        spec = DistanceGraphSpec(5, 8)
        for a in range(-20, 20):
            for b in range(-20, 20):
                d = exact_distance(a, b, spec)
                assert d == exact_distance(b, a, spec)
                assert d == exact_distance(a + 13, b + 13, spec)

    def test_triangle_inequality(self):
        spec = DistanceGraphSpec(4, 7)
        rng = random.Random(7)
        for _ in range(500):
            a, b, c = (rng.randint(-60, 60) for _ in range(3))
            assert exact_distance(a, c, spec) <= exact_distance(a, b, spec) + exact_distance(
                b, c, spec
            )

    def test_large_values(self):
        spec = DistanceGraphSpec(3, 4)
        # 10^12 = 250000000000 * 4
        assert exact_distance(0, 10**12, spec) == 250_000_000_000

    def test_overflow(self):
        spec = DistanceGraphSpec(3, 4)
        with pytest.raises(GridOverflowError):
            exact_distance(-(2**63), 2**63 - 1, spec)

    def test_needs_connected(self):
        with pytest.raises(NotConnectedError):
            exact_distance(0, 2, DistanceGraphSpec(2, 4))


class TestBfsAgreement:
    """exact_distance agrees with breadth-first search."""

    @pytest.mark.parametrize("k,t", coprime_pairs(12))
    def test_matches_bfs(self, k, t):
        spec = DistanceGraphSpec(k, t)
        for delta in range(-4 * t, 4 * t + 1):
            assert exact_distance(0, delta, spec) == bfs_distance(0, delta, spec), delta

    def test_bfs_offset_endpoints(self):
        spec = DistanceGraphSpec(3, 7)
        assert bfs_distance(100, 110, spec) == exact_distance(100, 110, spec)


class TestGridDistance:
    """Three-term grid distance through the seam."""

    def test_wrap_term(self):
        spec = DistanceGraphSpec(3, 4)
        assert grid_distance(GridPoint(0, 0), GridPoint(3, -2), spec) == 2
        assert grid_distance(GridPoint(0, 0), GridPoint(1, 0), spec) == 1

    @pytest.mark.parametrize("k,t", coprime_pairs(12, min_t=3))
    def test_upper_bound_and_exact_when_small(self, k, t):
        spec = DistanceGraphSpec(k, t)
        points = [GridPoint(i, j) for i in range(t) for j in range(-2, 3)]
        for p in points:
            for q in points:
                g = grid_distance(p, q, spec)
                e = exact_distance(p.j * t + p.i * k, q.j * t + q.i * k, spec)
                assert g >= e
                if g <= 2 or e <= 2:
                    assert g == e

    def test_accepts_column_t(self):
        spec = DistanceGraphSpec(3, 4)
        assert grid_distance(GridPoint(4, -3), GridPoint(0, 0), spec) == 0


class TestLocality:
    """Vertices within distance 2 are at most two columns apart (cyclically)."""

    def test_random_pairs(self):
        rng = random.Random(2024)
        pairs = coprime_pairs(20, min_t=3)
        for _ in range(2000):
            k, t = rng.choice(pairs)
            spec = DistanceGraphSpec(k, t)
            a = rng.randint(-500, 500)
            b = a + rng.choice(list(ball_offsets(spec, 2)))
            p, q = int_to_point(a, spec), int_to_point(b, spec)
            gap = abs(p.i - q.i)
            assert min(gap, t - gap) <= 2


class TestBallOffsets:
    def test_radius_one(self):
        assert ball_offsets(DistanceGraphSpec(3, 4), 1) == {3: 1, 4: 1}

    def test_radius_two(self):
        offsets = ball_offsets(DistanceGraphSpec(3, 4), 2)
        assert offsets == {1: 2, 3: 1, 4: 1, 6: 2, 7: 2, 8: 2}
