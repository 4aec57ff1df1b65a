"""
Distance graphs G(k, t): the grid embedding and exact distances.
"""

from .distance import ball_offsets, bfs_distance, exact_distance, grid_distance
from .distance_graph import (
    DistanceGraphSpec,
    GridPoint,
    int_to_point,
    lift,
    neighbors,
    point_to_int,
    reduce_spec,
)

__all__ = [
    "DistanceGraphSpec",
    "GridPoint",
    "reduce_spec",
    "neighbors",
    "int_to_point",
    "point_to_int",
    "lift",
    "exact_distance",
    "bfs_distance",
    "grid_distance",
    "ball_offsets",
]
