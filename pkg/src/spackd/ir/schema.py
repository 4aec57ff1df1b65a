"""
Result records shared by the engine and the CLI.

Every record converts to a JSON-serializable dict with to_dict(); search
outcomes are read back with from_dict(). Keys with no value are omitted.
"""

import json
from dataclasses import dataclass, field
from enum import Enum


class ViolationKind(str, Enum):
    PAIR_TOO_CLOSE = "pair-too-close"
    CONGRUENCE = "congruence"
    PATTERN_MISMATCH = "pattern-mismatch"
    WRAP = "wrap"


@dataclass
class Violation:
    """
    Why a coloring is not an S-packing coloring.

    Attributes:
        kind: Violation category
        a, b: Integer witnesses (two distinct vertices with the same color)
        color: The shared color
        required: Smallest admissible distance for that color (s_color + 1)
        actual: Distance between a and b
        points: Grid witnesses, when the check ran on the grid
        detail: Free-form explanation (congruence residues, window layout)
    """
    kind: ViolationKind
    a: int | None = None
    b: int | None = None
    color: int | None = None
    required: int | None = None
    actual: int | None = None
    points: tuple[tuple[int, int], tuple[int, int]] | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        """Convert to JSON-serializable dict."""
        result: dict = {"kind": self.kind.value}
        for key in ("a", "b", "color", "required", "actual"):
            value = getattr(self, key)
            if value is not None:
                result[key] = value
        if self.points is not None:
            result["points"] = [list(p) for p in self.points]
        if self.detail:
            result["detail"] = self.detail
        return result


@dataclass
class VerificationReport:
    """Verdict of a verifier run, with the first violation found."""
    violation: Violation | None = None

    @property
    def is_valid(self) -> bool:
        return self.violation is None

    @property
    def verdict(self) -> str:
        return "valid" if self.is_valid else "invalid"

    @classmethod
    def valid(cls) -> "VerificationReport":
        return cls()

    @classmethod
    def invalid(cls, violation: Violation) -> "VerificationReport":
        return cls(violation)

    def to_dict(self) -> dict:
        """{"verdict": "valid"} or the violation fields flattened next to the verdict."""
        result = {"verdict": self.verdict}
        if self.violation is not None:
            result.update(self.violation.to_dict())
        return result

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class ChiResult:
    """
    An S-packing chromatic number with its provenance.

    Attributes:
        value: chi_S(G(k, t))
        source: Which closed form produced the value
        constructive: True when the catalog can emit a matching coloring
    """
    value: int
    source: str
    constructive: bool

    def to_dict(self) -> dict:
        return {"value": self.value, "source": self.source, "constructive": self.constructive}


class SearchStatus(str, Enum):
    SAT = "sat"
    UNSAT = "unsat"
    TIMEOUT = "timeout"


@dataclass
class SearchOutcome:
    """
    Result of an exact window search on [0, window).

    A timeout never claims unsat; nodes_explored is then the full budget.
    """
    status: SearchStatus
    window: int
    nodes_explored: int
    witness: dict[int, int] | None = None

    def to_dict(self) -> dict:
        result = {
            "status": self.status.value,
            "window": self.window,
            "nodes": self.nodes_explored,
        }
        if self.witness is not None:
            result["witness"] = [{"n": n, "color": c} for n, c in sorted(self.witness.items())]
        return result

    @classmethod
    def from_dict(cls, data: dict) -> "SearchOutcome":
        witness = data.get("witness")
        return cls(
            status=SearchStatus(data["status"]),
            window=data["window"],
            nodes_explored=data["nodes"],
            witness={item["n"]: item["color"] for item in witness} if witness else None,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class LowerBoundCertificate:
    """
    Outcome of trying to prove chi_S >= target with growing windows.

    Attributes:
        status: "certified" when some window has no (target-1)-coloring,
                "inconclusive" otherwise
        target: The bound being certified
        window: The window that certified it (None when inconclusive)
        nodes: Total search nodes across all windows
        windows_tried: Every window size searched, in order
    """
    status: str
    target: int
    window: int | None = None
    nodes: int = 0
    windows_tried: list[int] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    def to_dict(self) -> dict:
        result = {
            "status": self.status,
            "target": self.target,
            "nodes": self.nodes,
            "windows_tried": list(self.windows_tried),
        }
        if self.window is not None:
            result["window"] = self.window
        return result


@dataclass
class TorusColoring:
    """
    A coloring of the W x H torus grid; cells[i][j] is the color of (i, j).
    """
    width: int
    height: int
    cells: tuple[tuple[int, ...], ...]

    def color(self, i: int, j: int) -> int:
        return self.cells[i % self.width][j % self.height]

    def has_diagonal_shift(self, shift: int) -> bool:
        """True if c(i + 1, j - shift) = c(i, j) everywhere."""
        return all(
            self.color(i + 1, j - shift) == self.color(i, j)
            for i in range(self.width)
            for j in range(self.height)
        )

    def diagonal_shifts(self) -> list[int]:
        """Shifts in {2, 3} for which the coloring is diagonal."""
        return [s for s in (2, 3) if self.has_diagonal_shift(s)]

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "cells": [list(column) for column in self.cells],
            "diagonal_shifts": self.diagonal_shifts(),
        }
