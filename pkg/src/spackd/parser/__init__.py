"""
Text formats: packing sequences, certificates and assignments.
"""

from .sequence import (
    Classification,
    PackingSequence,
    SequenceClass,
    classify,
    parse_sequence,
)

__all__ = [
    "PackingSequence",
    "SequenceClass",
    "Classification",
    "classify",
    "parse_sequence",
]
