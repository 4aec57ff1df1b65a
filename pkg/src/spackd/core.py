"""
Orchestration used by the CLI: golden fixtures, the self-check and the
formula/construction agreement sweep.

Pipeline of a self-check:
    render fixture -> byte-compare with fixtures/*.txt -> verify -> sweep
"""

import logging
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .engine.catalog import PACKING_FAMILIES, catalog_coloring, chi
from .engine.patterns import ColoringSchema
from .engine.verifier import verify_family, verify_layout, verify_schema
from .ir.schema import VerificationReport
from .parser.sequence import PackingSequence, parse_sequence
from .render.matrix import MatrixRenderer

logger = logging.getLogger(__name__)

SWEEP_SEQUENCES = ("1^inf", "1^2,2^inf", "1,2^inf", "2^inf")

# Patterns A and B shared by the c_n families
LAYOUT_PATTERNS = PACKING_FAMILIES[0].patterns


@dataclass(frozen=True)
class Fixture:
    """
    A golden matrix.

    Schema fixtures are rendered from catalog_coloring(seq, k, t); layout
    fixtures are three-column windows of the c_n families.
    """
    name: str
    sequence: str
    rows: int
    k: int = 0
    t: int = 0
    layout: tuple[str, str, str] | None = None
    shifts: tuple[int, int] | None = None

    @property
    def seq(self) -> PackingSequence:
        return parse_sequence(self.sequence)

    def schema(self) -> ColoringSchema:
        return catalog_coloring(self.seq, self.k, self.t)

    def render(self, renderer: MatrixRenderer | None = None) -> str:
        renderer = renderer or MatrixRenderer()
        if self.layout is not None:
            return renderer.render_layout(self.layout, LAYOUT_PATTERNS, self.shifts, self.rows)
        return renderer.render(self.schema(), self.rows)

    def verify(self) -> VerificationReport:
        if self.layout is not None:
            return verify_layout(self.layout, LAYOUT_PATTERNS, self.shifts, self.seq)
        return verify_schema(self.schema(), self.seq)


FIXTURES: tuple[Fixture, ...] = (
    Fixture("pairs_k3_t4", "1^2,2^inf", 8, k=3, t=4),
    Fixture("packing_k3_t11", "1,2^inf", 9, k=3, t=11),
    Fixture("packing_k7_t10", "1,2^inf", 8, k=7, t=10),
    Fixture("packing_k4_t9", "1,2^inf", 8, k=4, t=9),
    Fixture("packing_k5_t9", "1,2^inf", 8, k=5, t=9),
    Fixture("packing_k3_t8", "1,2^inf", 8, k=3, t=8),
    Fixture("packing_k6_t7", "1,2^inf", 8, k=6, t=7),
    Fixture("packing_k5_t6", "1,2^inf", 8, k=5, t=6),
    Fixture("packing_k3_t5", "1,2^inf", 16, k=3, t=5),
    Fixture("distance2_k3_t5", "2^inf", 12, k=3, t=5),
    Fixture("layout_AAA", "1,2^inf", 8, layout=("A", "A", "A"), shifts=(2, 2)),
    Fixture("layout_AAB", "1,2^inf", 8, layout=("A", "A", "B"), shifts=(2, 0)),
    Fixture("layout_ABA", "1,2^inf", 8, layout=("A", "B", "A"), shifts=(0, 5)),
    Fixture("layout_BAA", "1,2^inf", 8, layout=("B", "A", "A"), shifts=(5, 2)),
    Fixture("layout_BAB", "1,2^inf", 8, layout=("B", "A", "B"), shifts=(5, 0)),
)


def get_fixture(name: str) -> Fixture:
    for fixture in FIXTURES:
        if fixture.name == name:
            return fixture
    raise KeyError(f"unknown fixture {name!r}")


def load_fixture_text(name: str, fixtures_dir: Path | None = None) -> str:
    """Golden text of a fixture, from the package or from fixtures_dir."""
    filename = f"{name}.txt"
    if fixtures_dir is not None:
        return (Path(fixtures_dir) / filename).read_text(encoding="utf-8")
    return resources.files("spackd").joinpath("fixtures", filename).read_text(encoding="utf-8")


@dataclass
class FixtureResult:
    name: str
    matched: bool
    verified: bool
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.matched and self.verified


def check_fixture(fixture: Fixture, fixtures_dir: Path | None = None) -> FixtureResult:
    """Render, byte-compare against the golden text, then verify."""
    try:
        expected = load_fixture_text(fixture.name, fixtures_dir)
    except FileNotFoundError:
        return FixtureResult(fixture.name, False, False, "fixture file missing")

    rendered = fixture.render()
    matched = rendered == expected
    message = ""
    if not matched:
        got, want = rendered.splitlines(), expected.splitlines()
        line = next(
            (i for i, (a, b) in enumerate(zip(got, want), start=1) if a != b),
            min(len(got), len(want)) + 1,
        )
        message = f"first difference at line {line}"

    report = fixture.verify()
    if not report.is_valid:
        message = (message + "; " if message else "") + f"verification: {report.to_json()}"
    logger.debug("Fixture %s: matched=%s valid=%s", fixture.name, matched, report.is_valid)
    return FixtureResult(fixture.name, matched, report.is_valid, message)


def agreement_sweep(max_t: int, min_t: int = 4) -> list[str]:
    """
    Check catalog constructions against the closed forms.

    For every coprime 3 <= k < t <= max_t and each sweep sequence, the
    catalog schema must verify and use exactly chi colors. The c_n families
    are also proven once with verify_family.

    Returns:
        Failure descriptions (empty when everything agrees)
    """
    failures = []
    packing = parse_sequence("1,2^inf")
    for family in PACKING_FAMILIES:
        report = verify_family(family, packing)
        if not report.is_valid:
            failures.append(f"family {family.name}: {report.to_json()}")

    for seq_text in SWEEP_SEQUENCES:
        seq = parse_sequence(seq_text)
        for t in range(min_t, max_t + 1):
            for k in range(3, t):
                if math.gcd(k, t) != 1:
                    continue
                schema = catalog_coloring(seq, k, t)
                report = verify_schema(schema, seq)
                expected = chi(seq, k, t).value
                if not report.is_valid:
                    failures.append(f"{seq_text} G({k},{t}): {report.to_json()}")
                elif schema.num_colors() != expected:
                    failures.append(
                        f"{seq_text} G({k},{t}): {schema.num_colors()} colors, chi={expected}"
                    )
    logger.info("Agreement sweep to t=%d: %d failures", max_t, len(failures))
    return failures


@dataclass
class SelfCheckSummary:
    fixtures: list[FixtureResult] = field(default_factory=list)
    sweep_failures: list[str] = field(default_factory=list)
    sweep_ran: bool = False

    @property
    def ok(self) -> bool:
        return all(result.ok for result in self.fixtures) and not self.sweep_failures


def run_selfcheck(
    fixtures_dir: Path | None = None, quick: bool = False, sweep_limit: int = 30
) -> SelfCheckSummary:
    """Check every fixture, then (unless quick) run the agreement sweep."""
    summary = SelfCheckSummary()
    summary.fixtures = [check_fixture(fixture, fixtures_dir) for fixture in FIXTURES]
    if not quick:
        summary.sweep_failures = agreement_sweep(sweep_limit)
        summary.sweep_ran = True
    return summary
