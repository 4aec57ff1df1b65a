"""
Integer distance graphs G(k, t) and their shifted-grid embedding.

The vertex set is Z and n is adjacent to n - t, n - k, n + k and n + t.
A connected G(k, t) (gcd(k, t) = 1) is drawn on the strip {0..t} x Z:
point (i, j) stands for the integer j*t + i*k. Column t duplicates column 0
shifted by k rows, i.e. (0, j) and (t, j - k) are the same integer.

All values here are immutable; the functions are pure.
"""

import math
from dataclasses import dataclass

from ..utils.errors import GridOverflowError, InvalidPointError, InvalidSpecError, NotConnectedError

# Integers are kept inside the signed 64-bit range so that certificates stay
# portable to fixed-width consumers.
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    """Return value unchanged, or raise GridOverflowError outside int64."""
    if value < INT64_MIN or value > INT64_MAX:
        raise GridOverflowError(f"integer {value} outside the signed 64-bit range")
    return value


@dataclass(frozen=True)
class DistanceGraphSpec:
    """
    The distance pair (k, t) of G(k, t).

    Attributes:
        k: Smaller jump (k >= 1)
        t: Larger jump (t > k)
    """
    k: int
    t: int

    def __post_init__(self):
        if self.k <= 0 or self.k >= self.t:
            raise InvalidSpecError(f"need 1 <= k < t, got k={self.k}, t={self.t}")

    @property
    def connected(self) -> bool:
        return math.gcd(self.k, self.t) == 1

    def require_connected(self) -> None:
        if not self.connected:
            raise NotConnectedError(
                f"G({self.k},{self.t}) is not connected (gcd={math.gcd(self.k, self.t)})"
            )

    @property
    def k_inverse(self) -> int:
        """k^-1 modulo t."""
        self.require_connected()
        return pow(self.k, -1, self.t)

    def __str__(self) -> str:
        return f"G({self.k},{self.t})"


@dataclass(frozen=True)
class GridPoint:
    """
    Point (i, j) of the shifted grid: column i, row j.

    Canonical points have 0 <= i <= t-1; column t is an alias of column 0.
    """
    i: int
    j: int

    def canonical(self, spec: DistanceGraphSpec) -> "GridPoint":
        """Map column t onto column 0; reject columns outside [0, t]."""
        if not 0 <= self.i <= spec.t:
            raise InvalidPointError(f"column {self.i} outside [0, {spec.t}]")
        if self.i == spec.t:
            return GridPoint(0, self.j + spec.k)
        return self

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def lift(i: int, j: int, spec: DistanceGraphSpec) -> GridPoint:
    """
    Canonical representative of an arbitrary plane point (i, j).

    The plane Z^2 covers G(k, t); (i, j) and (i - t, j + k) name the same
    integer, so any column can be folded into [0, t-1].
    """
    q, column = divmod(i, spec.t)
    return GridPoint(column, j + q * spec.k)


def reduce_spec(k: int, t: int) -> tuple[DistanceGraphSpec, int]:
    """
    Split (k, t) into its connected component type and scale.

    Every component of G(k, t) is a copy of G(k/g, t/g) with g = gcd(k, t).

    Returns:
        (reduced spec, g)
    """
    if k <= 0 or k >= t:
        raise InvalidSpecError(f"need 1 <= k < t, got k={k}, t={t}")
    g = math.gcd(k, t)
    return DistanceGraphSpec(k // g, t // g), g


def neighbors(n: int, spec: DistanceGraphSpec) -> frozenset[int]:
    """The four neighbours {n-t, n-k, n+k, n+t}."""
    return frozenset((n - spec.t, n - spec.k, n + spec.k, n + spec.t))


def int_to_point(n: int, spec: DistanceGraphSpec) -> GridPoint:
    """Canonical grid point of integer n (requires gcd(k, t) = 1)."""
    i = (n * spec.k_inverse) % spec.t
    j, remainder = divmod(n - i * spec.k, spec.t)
    assert remainder == 0
    return GridPoint(i, j)


def point_to_int(p: GridPoint, spec: DistanceGraphSpec) -> int:
    """The integer j*t + i*k represented by p (0 <= p.i <= t)."""
    if not 0 <= p.i <= spec.t:
        raise InvalidPointError(f"column {p.i} outside [0, {spec.t}]")
    return checked(p.j * spec.t + p.i * spec.k)
