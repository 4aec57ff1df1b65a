"""
Coloring engine: schemas, verification, the construction catalog and exact search.
"""

from .catalog import (
    DISTANCE2_FAMILIES,
    PACKING_FAMILIES,
    catalog_coloring,
    chi,
    chi_reduced,
    coloring_for_range,
    select_family_index,
)
from .patterns import (
    ColoringSchema,
    CongruenceCheck,
    Pattern,
    SchemaFamily,
    shift_constraints_ok,
)
from .search import WindowSearch, certify_lower_bound, search_window
from .torus import enumerate_torus
from .verifier import verify_explicit, verify_family, verify_layout, verify_schema

__all__ = [
    "Pattern",
    "ColoringSchema",
    "CongruenceCheck",
    "SchemaFamily",
    "shift_constraints_ok",
    "verify_schema",
    "verify_explicit",
    "verify_family",
    "verify_layout",
    "chi",
    "chi_reduced",
    "catalog_coloring",
    "coloring_for_range",
    "select_family_index",
    "PACKING_FAMILIES",
    "DISTANCE2_FAMILIES",
    "WindowSearch",
    "search_window",
    "certify_lower_bound",
    "enumerate_torus",
]
