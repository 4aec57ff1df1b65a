"""
spackd - S-packing colorings of integer distance graphs G(k, t).

G(k, t) has vertex set Z with n adjacent to n +- k and n +- t. For a
non-decreasing sequence S = (s_1, s_2, ...) an S-packing coloring gives
color i only to vertices pairwise more than s_i apart. spackd computes the
least number of colors for the sequences (1^inf), (1^c, 2^inf) and (2^inf),
builds matching periodic colorings, verifies them, and searches finite
windows exactly.
"""

__version__ = "0.1.0"

from .config import SpackdConfig
from .engine import (
    ColoringSchema,
    Pattern,
    SchemaFamily,
    catalog_coloring,
    certify_lower_bound,
    chi,
    coloring_for_range,
    enumerate_torus,
    search_window,
    verify_explicit,
    verify_family,
    verify_schema,
)
from .graph import DistanceGraphSpec, GridPoint, exact_distance, reduce_spec
from .parser import PackingSequence, classify, parse_sequence
from .render import render_matrix

__all__ = [
    "SpackdConfig",
    "DistanceGraphSpec",
    "GridPoint",
    "reduce_spec",
    "exact_distance",
    "PackingSequence",
    "parse_sequence",
    "classify",
    "Pattern",
    "ColoringSchema",
    "SchemaFamily",
    "verify_schema",
    "verify_explicit",
    "verify_family",
    "chi",
    "catalog_coloring",
    "coloring_for_range",
    "search_window",
    "certify_lower_bound",
    "enumerate_torus",
    "render_matrix",
]
