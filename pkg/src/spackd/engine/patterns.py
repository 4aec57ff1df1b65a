"""
Periodic column patterns and coloring schemas on the shifted grid.

A schema assigns each column B_0..B_{t-1} a pattern (a finite color word
repeated along the column) and a shift p_x. The reference row of column x
is r(x) = -(p_0 + ... + p_{x-1}); the color of (x, j) is

    P_x[(r(x) - j) mod d_x]

so patterns read downward from the reference point. Column B_t is not
stored: it is B_0 moved down by k rows, which is consistent exactly when
p_0 + ... + p_{t-1} = k (mod d_0).
"""

import math
import operator
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from ..graph.distance_graph import (
    DistanceGraphSpec,
    GridPoint,
    int_to_point,
    lift,
)
from ..utils.errors import (
    CertificateError,
    FamilyTooSmallError,
    InvalidColorError,
    InvalidPointError,
    UnsupportedFamilyError,
    WrongFamilyError,
)


@dataclass(frozen=True)
class Pattern:
    """A finite word of colors, repeated periodically along a column."""
    colors: tuple[int, ...]

    def __post_init__(self):
        try:
            colors = tuple(operator.index(c) for c in self.colors)
        except TypeError as e:
            raise CertificateError(f"colors must be integers, got {self.colors}") from e
        if not colors:
            raise CertificateError("pattern must contain at least one color")
        if min(colors) < 1:
            raise InvalidColorError(f"colors must be >= 1, got {colors}")
        object.__setattr__(self, "colors", colors)

    def __len__(self) -> int:
        return len(self.colors)

    def at(self, offset: int) -> int:
        return self.colors[offset % len(self.colors)]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.colors) + "]"


@dataclass(frozen=True)
class CongruenceCheck:
    """
    Closing condition B_t = B_0 moved down by k.

    Attributes:
        ok: Both conditions hold
        same_pattern: Column t carries the pattern of column 0 (always true
                      for stored schemas, kept for reporting)
        total: Sum of all shifts
        modulus: Length of B_0's pattern
        k: Required residue of total
    """
    ok: bool
    same_pattern: bool
    total: int
    modulus: int
    k: int

    @property
    def detail(self) -> str:
        relation = "=" if self.ok else "!="
        return (
            f"sum of shifts {self.total} {relation} k={self.k} (mod {self.modulus}): "
            f"{self.total % self.modulus} vs {self.k % self.modulus}"
        )


@dataclass(frozen=True)
class ColoringSchema:
    """
    A periodic coloring of a connected G(k, t) given column by column.

    Attributes:
        spec: The distance graph
        patterns: Named patterns
        columns: Pattern name of B_0..B_{t-1}
        shifts: p_0..p_{t-1}, each in [0, d_max)
    """
    spec: DistanceGraphSpec
    patterns: Mapping[str, Pattern]
    columns: tuple[str, ...]
    shifts: tuple[int, ...]
    _refs: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.spec.require_connected()
        patterns = {
            name: p if isinstance(p, Pattern) else Pattern(tuple(p))
            for name, p in self.patterns.items()
        }
        columns = tuple(self.columns)
        try:
            shifts = tuple(operator.index(s) for s in self.shifts)
        except TypeError as e:
            raise CertificateError(f"shifts must be integers, got {self.shifts}") from e
        t = self.spec.t
        if len(columns) != t or len(shifts) != t:
            raise CertificateError(
                f"need {t} columns and {t} shifts, got {len(columns)} and {len(shifts)}"
            )
        unknown = sorted(set(columns) - set(patterns))
        if unknown:
            raise CertificateError(f"unknown pattern names in columns: {unknown}")
        d_max = max(len(patterns[name]) for name in set(columns))
        bad = [s for s in shifts if not 0 <= s < d_max]
        if bad:
            raise CertificateError(f"shifts must lie in [0, {d_max}), got {bad}")

        refs = [0]
        for s in shifts:
            refs.append(refs[-1] - s)
        object.__setattr__(self, "patterns", patterns)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "_refs", tuple(refs))

    @property
    def t(self) -> int:
        return self.spec.t

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def period(self) -> int:
        """Common period of all columns (lcm of the used pattern lengths)."""
        return math.lcm(*(len(self.patterns[name]) for name in set(self.columns)))

    def pattern_of(self, x: int) -> Pattern:
        """Pattern of column x in [0, t]; column t repeats column 0."""
        if not 0 <= x <= self.t:
            raise InvalidPointError(f"column {x} outside [0, {self.t}]")
        return self.patterns[self.columns[x % self.t]]

    def reference_row(self, x: int) -> int:
        """r(x) = -(p_0 + ... + p_{x-1}) for x in [0, t]."""
        if not 0 <= x <= self.t:
            raise InvalidPointError(f"column {x} outside [0, {self.t}]")
        return self._refs[x]

    def color_at(self, p: GridPoint) -> int:
        """Color of grid point p (0 <= p.i <= t)."""
        pattern = self.pattern_of(p.i)
        return pattern.at(self._refs[p.i] - p.j)

    def color_of_int(self, n: int) -> int:
        return self.color_at(int_to_point(n, self.spec))

    def column_colors(self, x: int, rows: np.ndarray) -> np.ndarray:
        """
        Colors of plane column x (any integer) at the given rows.

        Columns outside [0, t-1] are folded back with (x, j) ~ (x - t, j + k),
        which agrees with the stored columns only for congruent schemas.
        """
        base = lift(x, 0, self.spec)
        pattern = self.patterns[self.columns[base.i]].as_array()
        offsets = (self._refs[base.i] - (np.asarray(rows, dtype=np.int64) + base.j)) % len(pattern)
        return pattern[offsets]

    def congruence_check(self) -> CongruenceCheck:
        """Check that column t (B_0 moved down k rows) closes the strip."""
        d = len(self.pattern_of(0))
        total = sum(self.shifts)
        same = self.pattern_of(self.t) == self.pattern_of(0)
        return CongruenceCheck(
            ok=same and (total - self.k) % d == 0,
            same_pattern=same,
            total=total,
            modulus=d,
            k=self.k,
        )

    def colors_used(self) -> list[int]:
        return sorted({c for name in set(self.columns) for c in self.patterns[name].colors})

    def num_colors(self) -> int:
        return max(self.colors_used())

    def describe(self) -> str:
        """
        Compact column notation, closing pattern included.

        The schema for (1^2, 2^inf) on G(4, 7) reads
        "[1,2]_{p_0=0} [3,4,2,1]_{p_1=2} [3,4,2,1]_{p_2=0} [1,2]_{p_{3->6}=1} [1,2]".
        """
        parts = []
        x = 0
        while x < self.t:
            end = x
            while (
                end + 1 < self.t
                and self.columns[end + 1] == self.columns[x]
                and self.shifts[end + 1] == self.shifts[x]
            ):
                end += 1
            pattern = self.patterns[self.columns[x]]
            index = str(x) if end == x else f"{{{x}->{end}}}"
            parts.append(f"{pattern}_{{p_{index}={self.shifts[x]}}}")
            x = end + 1
        parts.append(str(self.pattern_of(self.t)))
        return " ".join(parts)


def shift_constraints_ok(shifts: Sequence[int], d: int) -> bool:
    """
    Local (2^inf) conditions for one pattern of d distinct colors in every column.

    Neighbouring columns need p_i mod d outside {0, 1, d-1}; columns two apart
    need p_i + p_{i+1} != 0 (mod d), including the pair (p_{t-1}, p_0) across
    the seam. The closing congruence is not part of this check.
    """
    if d < 3:
        return False
    if any(p % d in (0, 1, d - 1) for p in shifts):
        return False
    return all((a + b) % d for a, b in zip(shifts, list(shifts[1:]) + list(shifts[:1])))


@dataclass(frozen=True)
class SchemaFamily:
    """
    A parametric schema: fixed head columns, then one (pattern, shift) pair repeated.

    Attributes:
        name: Family label, e.g. "c_2"
        patterns: Named patterns
        head: (pattern name, shift) of B_0..B_{h-1}
        tail: Repeated block filling B_h..B_{t-1}; only single-pair blocks are supported
        min_t: Smallest t the family is defined for
        modulus: M; residues are taken modulo M
        residues: Admissible (t mod M, k mod M) pairs
    """
    name: str
    patterns: Mapping[str, Pattern]
    head: tuple[tuple[str, int], ...]
    tail: tuple[tuple[str, int], ...]
    min_t: int
    modulus: int
    residues: frozenset[tuple[int, int]]

    @property
    def closing_pattern(self) -> str:
        """Pattern name of B_0."""
        return self.head[0][0] if self.head else self.tail[0][0]

    def tail_pair(self) -> tuple[str, int]:
        if len(self.tail) != 1:
            raise UnsupportedFamilyError(
                f"family {self.name}: tail block of {len(self.tail)} columns is not uniform"
            )
        return self.tail[0]

    def admits(self, k: int, t: int) -> bool:
        return (t % self.modulus, k % self.modulus) in self.residues

    def instantiate(self, t: int, k: int) -> ColoringSchema:
        """
        Concrete schema for G(k, t): head, then the tail pair repeated t - h times.

        Raises:
            FamilyTooSmallError: t below min_t
            NotConnectedError: gcd(k, t) != 1
            WrongFamilyError: (t, k) outside the admissible residues
        """
        if t < self.min_t:
            raise FamilyTooSmallError(f"family {self.name} needs t >= {self.min_t}, got {t}")
        spec = DistanceGraphSpec(k, t)
        spec.require_connected()
        if not self.admits(k, t):
            raise WrongFamilyError(
                f"family {self.name} does not cover (k, t) = ({k}, {t}) "
                f"(residues mod {self.modulus}: t={t % self.modulus}, k={k % self.modulus})"
            )
        tail_name, tail_shift = self.tail_pair()
        repeat = t - len(self.head)
        return ColoringSchema(
            spec=spec,
            patterns=self.patterns,
            columns=tuple(name for name, _ in self.head) + (tail_name,) * repeat,
            shifts=tuple(shift for _, shift in self.head) + (tail_shift,) * repeat,
        )


def residues_from_congruence(
    patterns: Mapping[str, Pattern],
    head: tuple[tuple[str, int], ...],
    tail: tuple[str, int],
) -> frozenset[tuple[int, int]]:
    """
    Residue pairs (t mod d, k mod d) for which head + tail^(t-h) closes.

    The shift sum is sum(head) + tail_shift * (t - h), which modulo d only
    depends on t mod d.
    """
    d = len(patterns[head[0][0] if head else tail[0]])
    head_sum = sum(shift for _, shift in head)
    return frozenset(
        (ell, (head_sum + tail[1] * (ell - len(head))) % d) for ell in range(d)
    )
