"""
Packing sequences S = (s_1, s_2, ...).

A sequence is a finite non-decreasing prefix followed by an infinite tail
repeating one value. The text form is a comma-separated list of terms:

    INT         a single element
    INT^INT     an element repeated a finite number of times
    INT^inf     the infinite tail (exactly one, last)

"1,1,2^inf", "1^2,2^inf" and "(1, 1, 2^∞)" all describe the same sequence.
"""

import re
from dataclasses import dataclass
from enum import Enum

from ..utils.errors import MalformedSequenceError, SequenceIndexError

_TERM = re.compile(r"^(\d{1,18})(?:\^(\d{1,18}|inf|∞))?$")

# The finite prefix is stored expanded
MAX_PREFIX = 10_000


@dataclass(frozen=True)
class PackingSequence:
    """
    Non-decreasing sequence given by a finite prefix and a constant tail.

    Trailing prefix elements equal to the tail are folded into the tail, so
    equal sequences compare equal whatever text they were parsed from.
    """
    prefix: tuple[int, ...]
    tail: int

    def __post_init__(self):
        prefix = tuple(self.prefix)
        values = prefix + (self.tail,)
        if any(v < 1 for v in values):
            raise MalformedSequenceError(f"sequence elements must be >= 1: {values}")
        if any(a > b for a, b in zip(values, values[1:])):
            raise MalformedSequenceError(f"sequence must be non-decreasing: {values}")
        while prefix and prefix[-1] == self.tail:
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)

    def s_at(self, i: int) -> int:
        """The 1-based element s_i."""
        if i < 1:
            raise SequenceIndexError(f"sequence index must be >= 1, got {i}")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.tail

    def radii(self, num_colors: int) -> tuple[int, ...]:
        """(s_1, ..., s_L)."""
        return tuple(self.s_at(i) for i in range(1, num_colors + 1))

    def color_classes(self, num_colors: int) -> list[range]:
        """Maximal runs of colors 1..L sharing the same s_i."""
        classes = []
        start = 1
        for c in range(2, num_colors + 2):
            if c > num_colors or self.s_at(c) != self.s_at(start):
                classes.append(range(start, c))
                start = c
        return classes

    def format(self) -> str:
        """Canonical text form, e.g. "1^2,2^inf"."""
        terms = []
        i = 0
        while i < len(self.prefix):
            value = self.prefix[i]
            run = 1
            while i + run < len(self.prefix) and self.prefix[i + run] == value:
                run += 1
            terms.append(str(value) if run == 1 else f"{value}^{run}")
            i += run
        terms.append(f"{self.tail}^inf")
        return ",".join(terms)

    def __str__(self) -> str:
        return self.format()


def parse_sequence(text: str) -> PackingSequence:
    """
    Parse the text form of a packing sequence.

    Raises:
        MalformedSequenceError: On any grammar or ordering violation
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    terms = [term.strip().replace(" ", "") for term in body.split(",")]
    if not terms or any(not term for term in terms):
        raise MalformedSequenceError(f"empty term in sequence {text!r}")

    prefix: list[int] = []
    tail = None
    for position, term in enumerate(terms):
        match = _TERM.match(term)
        if not match:
            raise MalformedSequenceError(f"cannot parse term {term!r} in {text!r}")
        value, exponent = int(match.group(1)), match.group(2)
        if exponent in ("inf", "∞"):
            if position != len(terms) - 1:
                raise MalformedSequenceError(f"infinite term must come last in {text!r}")
            tail = value
            continue
        count = 1 if exponent is None else int(exponent)
        if count < 1:
            raise MalformedSequenceError(f"repeat count must be >= 1 in {term!r}")
        if len(prefix) + count > MAX_PREFIX:
            raise MalformedSequenceError(
                f"finite prefix longer than {MAX_PREFIX} elements in {text!r}"
            )
        prefix.extend([value] * count)

    if tail is None:
        raise MalformedSequenceError(f"sequence {text!r} has no infinite tail (INT^inf)")
    return PackingSequence(tuple(prefix), tail)


class SequenceClass(Enum):
    """The sequence shapes with closed-form chromatic numbers."""
    ALL_ONES = "all-ones"
    ONES_THEN_TWOS = "ones-then-twos"
    ALL_TWOS = "all-twos"
    OTHER = "other"


@dataclass(frozen=True)
class Classification:
    kind: SequenceClass
    ones: int = 0


def classify(seq: PackingSequence) -> Classification:
    """
    Sort a sequence into (1^inf), (1^c, 2^inf) with c >= 1, (2^inf) or other.

    After normalization a tail of 2 leaves only ones in the prefix.
    """
    if seq.tail == 1:
        return Classification(SequenceClass.ALL_ONES)
    if seq.tail == 2:
        if not seq.prefix:
            return Classification(SequenceClass.ALL_TWOS)
        return Classification(SequenceClass.ONES_THEN_TWOS, ones=len(seq.prefix))
    return Classification(SequenceClass.OTHER)
