"""
Closed-form S-packing chromatic numbers and the matching colorings.

chi() covers the four sequence shapes (1^inf), (1^c, 2^inf) for c = 1, 2
and c >= 3, and (2^inf), for every connected G(k, t). catalog_coloring()
builds an optimal periodic schema for 3 <= k < t.

Schema families c_0..c_5 (for (1, 2^inf)) and q_0..q_5 (for (2^inf)) are
picked by n = (k - 2t) mod 6.
"""

import logging

from ..graph.distance_graph import DistanceGraphSpec, reduce_spec
from ..ir.schema import ChiResult
from ..parser.sequence import PackingSequence, SequenceClass, classify
from ..utils.errors import ConstructiveOutOfScopeError, UnsupportedSequenceError
from .patterns import ColoringSchema, Pattern, SchemaFamily, residues_from_congruence

logger = logging.getLogger(__name__)

# Smallest k with a construction
MIN_CONSTRUCTIVE_K = 3

PARITY = Pattern((1, 2))
PAIR_SWAP = Pattern((3, 4, 2, 1))

# (1, 2^inf) patterns
PACK_A = Pattern((1, 2, 3, 1, 4, 5))
PACK_B = Pattern((4, 1, 5, 2, 1, 3))
PACK_C = Pattern((1, 2, 1, 3, 1, 4, 1, 5))
PACK_D = Pattern((4, 3, 5, 4, 2, 5, 3, 2))
CYCLE_5 = Pattern((1, 2, 3, 4, 5))
LONG_16 = Pattern((1, 2, 1, 3) * 2 + (1, 4, 1, 5) * 2)

# (2^inf) patterns
DIAGONAL_2 = Pattern((1, 3, 5, 2, 4))
DIAGONAL_3 = Pattern((1, 3, 5, 4, 2))
CYCLE_6 = Pattern((1, 2, 3, 4, 5, 6))
LONG_12 = Pattern((1, 2, 3, 4, 5, 1, 6, 3, 2, 5, 4, 6))


def select_family_index(k: int, t: int) -> int:
    """n = (m - 2l) mod 6 with m = k mod 6 and l = t mod 6."""
    return ((k % 6) - 2 * (t % 6)) % 6


def _packing_family(n: int) -> SchemaFamily:
    head = (("A", 0), ("B", 5)) * n
    patterns = {"A": PACK_A, "B": PACK_B}
    return SchemaFamily(
        name=f"c_{n}",
        patterns=patterns,
        head=head,
        tail=(("A", 2),),
        min_t=max(4, len(head) + 1),
        modulus=6,
        residues=residues_from_congruence(patterns, head, ("A", 2)),
    )


_DISTANCE2_HEADS = {
    0: (),
    1: (3,),
    2: (3, 2, 3),
    3: (3, 2, 3, 2, 3),
    4: (3, 4, 3),
    5: (3, 4, 3, 2, 3),
}


def _distance2_family(n: int) -> SchemaFamily:
    head = tuple(("P", shift) for shift in _DISTANCE2_HEADS[n])
    patterns = {"P": CYCLE_6}
    return SchemaFamily(
        name=f"q_{n}",
        patterns=patterns,
        head=head,
        tail=(("P", 2),),
        min_t=max(4, len(head) + 1),
        modulus=6,
        residues=residues_from_congruence(patterns, head, ("P", 2)),
    )


PACKING_FAMILIES: tuple[SchemaFamily, ...] = tuple(_packing_family(n) for n in range(6))
DISTANCE2_FAMILIES: tuple[SchemaFamily, ...] = tuple(_distance2_family(n) for n in range(6))


def _chi_value(seq: PackingSequence, k: int, t: int) -> tuple[int, str]:
    cls = classify(seq)
    odd = (k + t) % 2 == 1
    if cls.kind is SequenceClass.ALL_ONES or (
        cls.kind is SequenceClass.ONES_THEN_TWOS and cls.ones >= 3
    ):
        return (3, "(1^inf): k+t odd") if odd else (2, "(1^inf): k+t even")
    if cls.kind is SequenceClass.ONES_THEN_TWOS and cls.ones == 2:
        return (4, "(1^2,2^inf): k+t odd") if odd else (2, "(1^2,2^inf): k+t even")
    if cls.kind is SequenceClass.ONES_THEN_TWOS:
        if (k, t) == (2, 3):
            return 6, "(1,2^inf): k=2, t=3"
        return 5, "(1,2^inf): k != 2 or t != 3"
    if cls.kind is SequenceClass.ALL_TWOS:
        if (k, t) == (2, 3):
            return 7, "(2^inf): k=2, t=3"
        tr, kr = t % 5, k % 5
        if (tr in (1, 4) and kr in (2, 3)) or (tr in (2, 3) and kr in (1, 4)):
            return 5, "(2^inf): diagonal residues mod 5"
        return 6, "(2^inf): otherwise"
    raise UnsupportedSequenceError(f"no closed form for sequence {seq}")


def chi(seq: PackingSequence, k: int, t: int) -> ChiResult:
    """
    S-packing chromatic number of a connected G(k, t).

    Raises:
        UnsupportedSequenceError: seq is not one of the four handled shapes
        NotConnectedError: gcd(k, t) != 1
    """
    DistanceGraphSpec(k, t).require_connected()
    value, source = _chi_value(seq, k, t)
    return ChiResult(value=value, source=source, constructive=k >= MIN_CONSTRUCTIVE_K)


def chi_reduced(seq: PackingSequence, k: int, t: int) -> tuple[ChiResult, int]:
    """chi of the component type of G(k, t); also returns g = gcd(k, t)."""
    spec, g = reduce_spec(k, t)
    return chi(seq, spec.k, spec.t), g


# Concrete (1, 2^inf) schemas below t = 12: an int selects family c_n,
# otherwise (pattern names, shifts) over PACK_C/PACK_D or a single pattern.
_SINGLE = "single"

_PACKING_TABLE: dict[tuple[int, int], object] = {
    (3, 4): 1,
    (4, 5): 0,
    (3, 5): (_SINGLE, LONG_16, 7),
    (5, 6): ("CD", "0,1,3,3,3,3"),
    (3, 7): 1,
    (4, 7): 2,
    (5, 7): 3,
    (6, 7): (_SINGLE, CYCLE_5, 3),
    (3, 8): ("CD", "0,1,3,3,3,3,3,3"),
    (5, 8): 1,
    (7, 8): 3,
    (4, 9): ("CDCDCDCCC", "0,1,0,1,0,1,3,3,3"),
    (5, 9): (_SINGLE, PACK_C, 5),
    (7, 9): 1,
    (8, 9): 2,
    (3, 10): 1,
    (7, 10): ("CDCDCDCCCC", "0,1,0,1,0,1,3,3,3,3"),
    (9, 10): 1,
    (3, 11): (_SINGLE, CYCLE_5, 3),
    (4, 11): 0,
    (5, 11): 1,
    (6, 11): 2,
    (7, 11): 3,
    (8, 11): (_SINGLE, CYCLE_5, 3),
    (9, 11): 5,
    (10, 11): 0,
}


def _single_pattern_schema(spec: DistanceGraphSpec, pattern: Pattern, shift: int) -> ColoringSchema:
    return ColoringSchema(spec, {"A": pattern}, ("A",) * spec.t, (shift,) * spec.t)


def _cd_schema(spec: DistanceGraphSpec, names: str, shifts: str) -> ColoringSchema:
    shift_values = tuple(int(s) for s in shifts.split(","))
    # "CD" abbreviates C D followed by C for the remaining columns
    columns = tuple(names.ljust(spec.t, "C"))
    return ColoringSchema(spec, {"C": PACK_C, "D": PACK_D}, columns, shift_values)


def _packing_schema(spec: DistanceGraphSpec) -> ColoringSchema:
    k, t = spec.k, spec.t
    entry = _PACKING_TABLE.get((k, t), select_family_index(k, t) if t >= 12 else None)
    if entry is None:
        raise ConstructiveOutOfScopeError(f"no (1,2^inf) construction for {spec}")
    if isinstance(entry, int):
        return PACKING_FAMILIES[entry].instantiate(t, k)
    if entry[0] == _SINGLE:
        _, pattern, shift = entry
        return _single_pattern_schema(spec, pattern, shift)
    names, shifts = entry
    return _cd_schema(spec, names, shifts)


def _distance2_schema(spec: DistanceGraphSpec, num_colors: int) -> ColoringSchema:
    k, t = spec.k, spec.t
    if num_colors == 5:
        two = (2 * t - k) % 5 == 0
        three = (3 * t - k) % 5 == 0
        assert two != three, f"exactly one diagonal 5-coloring must close for {spec}"
        if two:
            return _single_pattern_schema(spec, DIAGONAL_2, 2)
        return _single_pattern_schema(spec, DIAGONAL_3, 3)
    if (k, t) == (3, 5):
        return _single_pattern_schema(spec, LONG_12, 3)
    return DISTANCE2_FAMILIES[select_family_index(k, t)].instantiate(t, k)


def _odd_cycle_schema(spec: DistanceGraphSpec) -> ColoringSchema:
    """
    3-coloring through the odd cycle Z_{k+t}.

    n = jt + ik is congruent to k(i - j) mod k+t, and grid neighbours change
    i - j by one, so coloring phase i - j along 1,2,1,2,...,1,2,3 is proper.
    """
    d = spec.k + spec.t
    cycle = Pattern((1, 2) * ((d - 1) // 2) + (3,))
    return _single_pattern_schema(spec, cycle, d - 1)


def _pair_swap_schema(spec: DistanceGraphSpec) -> ColoringSchema:
    """(1^2, 2^inf) with k+t odd: [1,2]_0 [3,4,2,1]_2 [3,4,2,1]_0 [1,2]_1..."""
    t = spec.t
    return ColoringSchema(
        spec,
        {"A": PARITY, "B": PAIR_SWAP},
        ("A", "B", "B") + ("A",) * (t - 3),
        (0, 2, 0) + (1,) * (t - 3),
    )


def catalog_coloring(seq: PackingSequence, k: int, t: int) -> ColoringSchema:
    """
    Optimal periodic S-packing coloring of G(k, t), 3 <= k < t.

    The schema uses exactly chi(seq, k, t) colors.

    Raises:
        ConstructiveOutOfScopeError: k < 3
        UnsupportedSequenceError: seq is not one of the four handled shapes
        NotConnectedError: gcd(k, t) != 1
    """
    result = chi(seq, k, t)
    if not result.constructive:
        raise ConstructiveOutOfScopeError(
            f"no construction for k={k} < {MIN_CONSTRUCTIVE_K}; chi={result.value} from the table"
        )
    spec = DistanceGraphSpec(k, t)
    cls = classify(seq)

    if result.value == 2:
        schema = _single_pattern_schema(spec, PARITY, 1)
    elif result.value == 3:
        schema = _odd_cycle_schema(spec)
    elif cls.kind is SequenceClass.ONES_THEN_TWOS and cls.ones == 2:
        schema = _pair_swap_schema(spec)
    elif cls.kind is SequenceClass.ONES_THEN_TWOS:
        schema = _packing_schema(spec)
    else:
        schema = _distance2_schema(spec, result.value)

    logger.debug("catalog %s on %s: %s", seq, spec, schema.describe())
    return schema


def coloring_for_range(seq: PackingSequence, k: int, t: int, a: int, b: int) -> dict[int, int]:
    """Explicit assignment n -> color on [a, b] from the catalog schema (empty if a > b)."""
    schema = catalog_coloring(seq, k, t)
    return {n: schema.color_of_int(n) for n in range(a, b + 1)}
