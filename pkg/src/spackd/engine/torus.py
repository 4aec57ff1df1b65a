"""
Exhaustive S-packing colorings of the W x H torus grid.

A finite analogue of the rigidity of 5-colorings of Z^2 with (2^inf): on
the torus every such coloring is diagonal, i.e. constant along
(i, j) -> (i + 1, j - 2) or along (i, j) -> (i + 1, j - 3).
"""

import logging

import networkx as nx

from ..ir.schema import TorusColoring
from ..parser.sequence import PackingSequence, parse_sequence
from ..utils.errors import InvalidArgumentError, TorusSizeError

logger = logging.getLogger(__name__)

DEFAULT_STATE_CAP = 5000
MIN_SIDE = 3


def torus_graph(width: int, height: int) -> nx.Graph:
    """The W x H torus grid; nodes are (i, j) with 0 <= i < W, 0 <= j < H."""
    return nx.grid_2d_graph(width, height, periodic=True)


def enumerate_torus(
    num_colors: int,
    width: int,
    height: int,
    seq: PackingSequence | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
    canonical: bool = False,
) -> list[TorusColoring]:
    """
    All valid colorings of the torus grid with colors 1..L.

    Cells are colored row by row (j outer, i inner); the result is in
    lexicographic order of that color word. With canonical=True, colors with
    equal s_i are only introduced in increasing order, which keeps one
    representative per relabeling.

    Raises:
        TorusSizeError: A side below 3, or W * H * L above state_cap
    """
    seq = seq or parse_sequence("2^inf")
    if width < MIN_SIDE or height < MIN_SIDE:
        raise TorusSizeError(f"torus sides must be >= {MIN_SIDE}, got {width}x{height}")
    if num_colors < 1:
        raise InvalidArgumentError(f"num_colors must be >= 1, got {num_colors}")
    if width * height * num_colors > state_cap:
        raise TorusSizeError(
            f"state space {width}x{height}x{num_colors} exceeds cap {state_cap}"
        )

    radii = (0,) + seq.radii(num_colors)
    graph = torus_graph(width, height)
    cells = [(i, j) for j in range(height) for i in range(width)]
    index = {cell: n for n, cell in enumerate(cells)}

    # For each cell, the earlier cells within the largest radius and their distances
    earlier: list[list[tuple[int, int]]] = []
    for n, cell in enumerate(cells):
        lengths = nx.single_source_shortest_path_length(graph, cell, cutoff=max(radii))
        earlier.append(
            sorted((index[other], d) for other, d in lengths.items() if index[other] < n)
        )

    class_starts = {run.start for run in seq.color_classes(num_colors)}
    colors = [0] * len(cells)

    def candidates(pos: int) -> list[int]:
        used = set(colors[:pos]) if canonical else set()
        result = []
        for c in range(1, num_colors + 1):
            if canonical and c not in class_starts and c - 1 not in used:
                continue
            if all(colors[m] != c or d > radii[c] for m, d in earlier[pos]):
                result.append(c)
        return result

    found: list[TorusColoring] = []
    stack = [candidates(0)]
    while stack:
        pos = len(stack) - 1
        options = stack[-1]
        if not options:
            stack.pop()
            colors[pos] = 0
            continue
        colors[pos] = options.pop(0)
        if pos + 1 == len(cells):
            grid = tuple(
                tuple(colors[index[(i, j)]] for j in range(height)) for i in range(width)
            )
            found.append(TorusColoring(width, height, grid))
            continue
        stack.append(candidates(pos + 1))

    logger.info(
        "Torus %dx%d with %d colors: %d colorings", width, height, num_colors, len(found)
    )
    return found
