"""
Validity checks for S-packing colorings.

verify_schema decides a periodic schema on the whole infinite graph by
scanning one period of the lifted plane; verify_explicit checks a finite
assignment pair by pair with exact distances; verify_family proves a
parametric family for every admissible t from finitely many three-column
windows.

The grid checks only cover sequences with elements in {1, 2}: two vertices
at graph distance <= 2 are then at most two columns apart.
"""

import logging
import math
from collections.abc import Mapping

import numpy as np

from ..graph.distance import ball_offsets, exact_distance
from ..graph.distance_graph import DistanceGraphSpec, GridPoint, lift, point_to_int
from ..ir.schema import VerificationReport, Violation, ViolationKind
from ..parser.sequence import PackingSequence
from ..utils.errors import InvalidColorError, UnsupportedFamilyError, UnsupportedSequenceError
from .patterns import ColoringSchema, Pattern, SchemaFamily

logger = logging.getLogger(__name__)

GRID_RADIUS_LIMIT = 2


def forward_offsets(radius: int) -> list[tuple[int, int]]:
    """Plane offsets (dx, dy) with 0 < |dx| + |dy| <= radius and (dx, dy) > (0, 0)."""
    return [
        (dx, dy)
        for dx in range(0, radius + 1)
        for dy in range(-(radius - dx), radius - dx + 1)
        if dx > 0 or dy > 0
    ]


def _require_small_radii(seq: PackingSequence) -> None:
    if seq.tail > GRID_RADIUS_LIMIT:
        raise UnsupportedSequenceError(
            f"grid verification needs elements in {{1, 2}}, got {seq}"
        )


def _radius_table(seq: PackingSequence, num_colors: int) -> np.ndarray:
    return np.asarray([0] + list(seq.radii(num_colors)), dtype=np.int64)


def _first_conflict(
    grid: np.ndarray, margin: int, width: int, height: int, radii: np.ndarray, radius: int
) -> tuple[int, int, int, int] | None:
    """
    First (x, j, dx, dy) with grid[x, j] == grid[x+dx, j+dy] and L1 <= s(color).

    grid holds `margin` extra rows above and below the `height` scanned rows
    and enough extra columns on the right. Ties break on (x, j) and then on
    the offset order.
    """
    base = grid[:width, margin:margin + height]
    best = None
    for index, (dx, dy) in enumerate(forward_offsets(radius)):
        other = grid[dx:dx + width, margin + dy:margin + dy + height]
        hits = np.argwhere((base == other) & (radii[base] >= dx + abs(dy)))
        if hits.size:
            x, j = (int(v) for v in hits[0])
            candidate = (x, j, index, dx, dy)
            if best is None or candidate[:3] < best[:3]:
                best = candidate
    if best is None:
        return None
    x, j, _, dx, dy = best
    return x, j, dx, dy


def verify_schema(schema: ColoringSchema, seq: PackingSequence) -> VerificationReport:
    """
    Decide whether a schema is an S-packing coloring of the infinite G(k, t).

    The closing congruence is checked first. Then every color class is
    scanned over one period (the lcm of all pattern lengths) in columns
    0..t-1, pairing each point with the points up to two columns to its
    right; columns t and t+1 are folded back onto 0 and 1.

    Raises:
        UnsupportedSequenceError: Some sequence element exceeds 2
    """
    _require_small_radii(seq)
    spec = schema.spec

    congruence = schema.congruence_check()
    if not congruence.same_pattern:
        return VerificationReport.invalid(
            Violation(ViolationKind.PATTERN_MISMATCH, detail="column t does not repeat column 0")
        )
    if not congruence.ok:
        logger.debug("Congruence failed: %s", congruence.detail)
        return VerificationReport.invalid(
            Violation(
                ViolationKind.CONGRUENCE,
                required=congruence.k % congruence.modulus,
                actual=congruence.total % congruence.modulus,
                detail=congruence.detail,
            )
        )

    num_colors = schema.num_colors()
    radius = max(seq.radii(num_colors))
    height = schema.period
    rows = np.arange(-radius, height + radius)
    grid = np.stack([schema.column_colors(x, rows) for x in range(spec.t + radius)])
    radii = _radius_table(seq, num_colors)

    conflict = _first_conflict(grid, radius, spec.t, height, radii, radius)
    if conflict is None:
        return VerificationReport.valid()

    x, j, dx, dy = conflict
    p = GridPoint(x, j)
    q = lift(x + dx, j + dy, spec)
    a, b = point_to_int(p, spec), point_to_int(q, spec)
    color = schema.color_at(p)
    kind = ViolationKind.WRAP if x + dx >= spec.t else ViolationKind.PAIR_TOO_CLOSE
    logger.debug("Schema conflict %s between %s and %s", kind.value, p, q)
    return VerificationReport.invalid(
        Violation(
            kind,
            a=a,
            b=b,
            color=color,
            required=seq.s_at(color) + 1,
            actual=exact_distance(a, b, spec),
            points=((p.i, p.j), (q.i, q.j)),
        )
    )


def verify_explicit(
    assignment: Mapping[int, int], spec: DistanceGraphSpec, seq: PackingSequence
) -> VerificationReport:
    """
    Check a finite assignment n -> color for all pairs inside its domain.

    Pairs are visited by increasing vertex and then increasing offset, so the
    reported violation is the first in that order.

    Raises:
        InvalidColorError: Some color is below 1
        NotConnectedError: gcd(k, t) != 1
    """
    spec.require_connected()
    if not assignment:
        return VerificationReport.valid()
    bad = sorted(c for c in set(assignment.values()) if c < 1)
    if bad:
        raise InvalidColorError(f"colors must be >= 1, got {bad}")

    radius = max(seq.s_at(c) for c in set(assignment.values()))
    offsets = ball_offsets(spec, radius)
    for n in sorted(assignment):
        color = assignment[n]
        s = seq.s_at(color)
        for delta, distance in offsets.items():
            if distance > s:
                continue
            if assignment.get(n + delta) == color:
                return VerificationReport.invalid(
                    Violation(
                        ViolationKind.PAIR_TOO_CLOSE,
                        a=n,
                        b=n + delta,
                        color=color,
                        required=s + 1,
                        actual=distance,
                    )
                )
    return VerificationReport.valid()


def verify_layout(
    names: tuple[str, str, str],
    patterns: Mapping[str, Pattern],
    shifts: tuple[int, int],
    seq: PackingSequence,
) -> VerificationReport:
    """
    Check one three-column window in the plane.

    Columns carry the named patterns with reference rows 0, -p and -p-q.
    Only pairs whose points both lie in the window are checked; points are
    reported as plane coordinates.
    """
    _require_small_radii(seq)
    p, q = shifts
    refs = (0, -p, -p - q)
    used = [patterns[name] for name in names]
    num_colors = max(max(pattern.colors) for pattern in used)
    radius = max(seq.radii(num_colors))
    height = math.lcm(*(len(pattern) for pattern in used))
    rows = np.arange(-radius, height + radius)

    columns = [pattern.as_array()[(ref - rows) % len(pattern)] for pattern, ref in zip(used, refs)]
    # Padding columns never match a color
    padding = np.zeros((radius, rows.size), dtype=np.int64)
    grid = np.vstack([np.stack(columns), padding])
    radii = _radius_table(seq, num_colors)

    conflict = _first_conflict(grid, radius, len(names), height, radii, radius)
    if conflict is None:
        return VerificationReport.valid()
    x, j, dx, dy = conflict
    color = int(grid[x, radius + j])
    return VerificationReport.invalid(
        Violation(
            ViolationKind.PAIR_TOO_CLOSE,
            color=color,
            required=seq.s_at(color) + 1,
            actual=dx + abs(dy),
            points=((x, j), (x + dx, j + dy)),
            detail=f"layout {' '.join(names)} shifts ({p}, {q})",
        )
    )


def family_layouts(family: SchemaFamily) -> list[tuple[tuple[str, str, str], tuple[int, int]]]:
    """
    Distinct three-column windows of the cyclic column sequence B_0..B_{t-1}.

    Windows of head + tail^r repeat from r = 3 on, so r from the family
    minimum up to 3 covers every t.
    """
    tail = family.tail_pair()
    r_min = max(1, family.min_t - len(family.head))
    layouts: dict[tuple[tuple[str, str, str], tuple[int, int]], None] = {}
    for r in range(r_min, max(r_min, 3) + 1):
        cols = list(family.head) + [tail] * r
        for i in range(len(cols)):
            (a, p), (b, q), (c, _) = cols[i], cols[(i + 1) % len(cols)], cols[(i + 2) % len(cols)]
            layouts.setdefault(((a, b, c), (p, q)), None)
    return list(layouts)


def verify_family(family: SchemaFamily, seq: PackingSequence) -> VerificationReport:
    """
    Prove a family valid for every admissible (k, t) with t >= min_t.

    The closing congruence is checked symbolically for each admissible
    residue pair, then each distinct three-column window is scanned. With
    elements in {1, 2} conflicts never span more than two columns, so the
    windows cover every pair.

    Raises:
        UnsupportedSequenceError: Some sequence element exceeds 2
        UnsupportedFamilyError: Non-uniform tail, or a modulus that is not a
            multiple of B_0's pattern length
    """
    _require_small_radii(seq)
    tail_name, tail_shift = family.tail_pair()
    d = len(family.patterns[family.closing_pattern])
    if family.modulus % d:
        raise UnsupportedFamilyError(
            f"family {family.name}: modulus {family.modulus} is not a multiple of {d}"
        )

    h = len(family.head)
    head_sum = sum(shift for _, shift in family.head)
    for ell, m in sorted(family.residues):
        total = head_sum + tail_shift * (ell - h)
        if (total - m) % d:
            return VerificationReport.invalid(
                Violation(
                    ViolationKind.CONGRUENCE,
                    required=m % d,
                    actual=total % d,
                    detail=f"family {family.name} at t={ell}, k={m} (mod {family.modulus})",
                )
            )

    for names, shifts in family_layouts(family):
        report = verify_layout(names, family.patterns, shifts, seq)
        logger.debug("Family %s layout %s %s: %s", family.name, names, shifts, report.verdict)
        if not report.is_valid:
            return report
    return VerificationReport.valid()
