"""
Serializable result records.
"""

from .schema import (
    ChiResult,
    LowerBoundCertificate,
    SearchOutcome,
    SearchStatus,
    TorusColoring,
    VerificationReport,
    Violation,
    ViolationKind,
)

__all__ = [
    "ChiResult",
    "LowerBoundCertificate",
    "SearchOutcome",
    "SearchStatus",
    "TorusColoring",
    "VerificationReport",
    "Violation",
    "ViolationKind",
]
