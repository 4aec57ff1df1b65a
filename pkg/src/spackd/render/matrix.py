"""
Text matrices of periodic colorings.

Columns are printed left to right, row j = 0 on top with j decreasing
downward. Colors are separated by single spaces and every row ends with a
newline. A reference cell (row r(x) of column x) is prefixed with `*` when
it is visible.
"""

from collections.abc import Sequence

import numpy as np

from ..engine.patterns import ColoringSchema, Pattern
from ..utils.errors import InvalidArgumentError


class MatrixRenderer:
    """
    Renders schema columns as plain-text matrices.
    """

    def __init__(self, highlight_refs: bool = True):
        self.highlight_refs = highlight_refs

    def render(self, schema: ColoringSchema, rows: int) -> str:
        """Matrix of columns B_0..B_t."""
        columns = [
            (schema.pattern_of(x), schema.reference_row(x)) for x in range(schema.t + 1)
        ]
        return self.render_columns(columns, rows)

    def render_columns(self, columns: Sequence[tuple[Pattern, int]], rows: int) -> str:
        """Matrix of arbitrary (pattern, reference row) columns."""
        if rows < 1:
            raise InvalidArgumentError(f"rows must be >= 1, got {rows}")
        js = -np.arange(rows, dtype=np.int64)
        grid = np.stack(
            [pattern.as_array()[(ref - js) % len(pattern)] for pattern, ref in columns], axis=1
        )
        refs = np.asarray([ref for _, ref in columns], dtype=np.int64)
        marked = np.equal.outer(js, refs) if self.highlight_refs else np.zeros_like(grid, bool)

        lines = []
        for row, marks in zip(grid, marked):
            lines.append(" ".join(f"*{c}" if m else str(c) for c, m in zip(row, marks)))
        return "".join(line + "\n" for line in lines)

    def render_layout(
        self,
        names: Sequence[str],
        patterns: dict[str, Pattern],
        shifts: tuple[int, int],
        rows: int,
    ) -> str:
        """
        Three-column window block: a header line of pattern names, then the rows.

        The first column has reference row 0, the next -p and the last -p-q.
        """
        p, q = shifts
        refs = (0, -p, -p - q)
        columns = [(patterns[name], ref) for name, ref in zip(names, refs)]
        return " ".join(names) + "\n" + self.render_columns(columns, rows)


def render_matrix(schema: ColoringSchema, rows: int, highlight_refs: bool = True) -> str:
    """Render columns B_0..B_t of a schema for rows 0, -1, ..., -(rows-1)."""
    return MatrixRenderer(highlight_refs).render(schema, rows)
