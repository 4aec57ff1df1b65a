"""
spackd command line.

Exit codes: 0 success / valid / sat, 1 invalid / unsat / empty,
2 usage or unsupported input, 3 timeout / inconclusive.
"""

import json
import logging
import sys
from pathlib import Path

import click
from rich.console import Console
from rich.table import Table

from .config import SpackdConfig
from .core import run_selfcheck
from .engine.catalog import catalog_coloring, chi, coloring_for_range
from .engine.search import certify_lower_bound, search_window
from .engine.torus import enumerate_torus
from .engine.verifier import verify_explicit, verify_schema
from .graph.distance_graph import DistanceGraphSpec, reduce_spec
from .ir.schema import SearchStatus
from .parser.certificate import (
    assignment_to_csv,
    dump_certificate,
    load_assignment_csv,
    load_certificate,
)
from .parser.sequence import parse_sequence
from .render.matrix import render_matrix
from .utils.errors import MalformedSequenceError, SpackdError

EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _parse_seq(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_sequence(value)
    except MalformedSequenceError as e:
        raise click.BadParameter(str(e)) from e


def _reduced(k: int, t: int) -> DistanceGraphSpec:
    """Reduce (k, t) to its component type, with a notice on stderr when g > 1."""
    spec, g = reduce_spec(k, t)
    if g > 1:
        click.echo(
            f"Note: gcd({k},{t}) = {g}; every component is G({spec.k},{spec.t}), using that",
            err=True,
        )
    return spec


def _fail(e: Exception, code: int = EXIT_USAGE):
    click.echo(f"Error: {e}", err=True)
    raise SystemExit(code)


seq_option = click.option(
    "--seq", "seq", required=True, callback=_parse_seq, help='Packing sequence, e.g. "1,2^inf"'
)
k_option = click.option("--k", "k", type=int, required=True, help="Smaller distance k")
t_option = click.option("--t", "t", type=int, required=True, help="Larger distance t")


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr")
@click.pass_context
def main(ctx, verbose):
    """spackd - S-packing colorings of integer distance graphs G(k, t)."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        ctx.obj = SpackdConfig.load()
    except SpackdError as e:
        _fail(e)


@main.command(name="chi")
@k_option
@t_option
@seq_option
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain")
def chi_command(k, t, seq, fmt):
    """Print the S-packing chromatic number of G(k, t).

    Examples:

        spackd chi --k 3 --t 4 --seq "1,1,2^inf"
        spackd chi --k 6 --t 10 --seq "2^inf" --format json
    """
    try:
        spec = _reduced(k, t)
        result = chi(seq, spec.k, spec.t)
    except SpackdError as e:
        _fail(e)
    if fmt == "json":
        data = {"k": spec.k, "t": spec.t, "sequence": seq.format(), **result.to_dict()}
        click.echo(json.dumps(data))
    else:
        click.echo(result.value)


@main.command(name="color")
@k_option
@t_option
@seq_option
@click.option("--rows", type=int, default=None, help="Matrix rows (default from config)")
@click.option("--range", "span", type=int, nargs=2, default=None, help="Integer range A B for csv")
@click.option("--format", "fmt", type=click.Choice(["matrix", "json", "csv"]), default="matrix")
@click.pass_obj
def color_command(config, k, t, seq, rows, span, fmt):
    """Emit an optimal coloring from the construction catalog.

    Examples:

        spackd color --k 3 --t 4 --seq "1,1,2^inf" --rows 8
        spackd color --k 7 --t 13 --seq "1,2^inf" --format json
        spackd color --k 3 --t 5 --seq "2^inf" --range 0 20 --format csv
    """
    if fmt == "csv" and span is None:
        raise click.UsageError("--format csv needs --range A B")
    try:
        spec = _reduced(k, t)
        schema = catalog_coloring(seq, spec.k, spec.t)
        if fmt == "matrix":
            click.echo(render_matrix(schema, rows or config.matrix_rows), nl=False)
        elif fmt == "json":
            click.echo(dump_certificate(schema, seq))
        else:
            a, b = span
            click.echo(assignment_to_csv(coloring_for_range(seq, spec.k, spec.t, a, b)), nl=False)
    except SpackdError as e:
        _fail(e)


@main.command(name="verify")
@click.option(
    "--cert", "cert", type=click.Path(exists=True, path_type=Path), help="JSON schema certificate"
)
@click.option(
    "--explicit",
    "explicit",
    type=click.Path(exists=True, path_type=Path),
    help="CSV n,color assignment",
)
@click.option("--k", "k", type=int, default=None)
@click.option("--t", "t", type=int, default=None)
@click.option("--seq", "seq", default=None, callback=_parse_seq)
def verify_command(cert, explicit, k, t, seq):
    """Verify a schema certificate or an explicit assignment.

    Prints the report as JSON; exit 0 when valid, 1 when invalid.

    Examples:

        spackd verify --cert coloring.json
        spackd verify --explicit window.csv --k 3 --t 4 --seq "1,1,2^inf"
    """
    if cert is None and explicit is None:
        raise click.UsageError("give --cert and/or --explicit")
    try:
        schema = None
        if cert is not None:
            schema, cert_seq = load_certificate(cert)
            seq = seq or cert_seq
            k = k if k is not None else schema.k
            t = t if t is not None else schema.t
        if explicit is not None:
            if k is None or t is None or seq is None:
                raise click.UsageError("--explicit needs --k, --t and --seq (or --cert)")
            report = verify_explicit(load_assignment_csv(explicit), DistanceGraphSpec(k, t), seq)
        else:
            report = verify_schema(schema, seq)
    except SpackdError as e:
        _fail(e)
    click.echo(report.to_json())
    if not report.is_valid:
        raise SystemExit(EXIT_NEGATIVE)


@main.command(name="search")
@k_option
@t_option
@seq_option
@click.option("--colors", "colors", type=int, required=True, help="Number of colors L")
@click.option("--window", "window", type=int, default=None, help="Window size N, searching [0, N)")
@click.option("--budget", "budget", type=int, default=None, help="Node budget (default: config)")
@click.option("--workers", "workers", type=int, default=None, help="Worker processes")
@click.option("--split-depth", "split_depth", type=int, default=None)
@click.option("--certify", is_flag=True, help="Certify chi >= colors + 1 over growing windows")
@click.pass_obj
def search_command(config, k, t, seq, colors, window, budget, workers, split_depth, certify):
    """Exact search for an L-coloring of a window of G(k, t).

    Exit 0 sat (or certified), 1 unsat, 3 timeout (or inconclusive).

    Examples:

        spackd search --k 3 --t 4 --seq "1,1,2^inf" --colors 3 --window 40
        spackd search --k 3 --t 5 --seq "2^inf" --colors 5 --certify
    """
    config = config.with_overrides(
        {"node_budget": budget, "workers": workers, "split_depth": split_depth}
    )
    if not certify and window is None:
        raise click.UsageError("--window is required unless --certify is given")
    try:
        spec = _reduced(k, t)
        if certify:
            certificate = certify_lower_bound(
                seq,
                spec,
                colors + 1,
                node_budget=config.node_budget,
                start_factor=config.window_start_factor,
                max_factor=config.window_max_factor,
                workers=config.workers,
                split_depth=config.split_depth,
            )
            click.echo(json.dumps(certificate.to_dict()))
            if not certificate.certified:
                raise SystemExit(EXIT_INCONCLUSIVE)
            return
        outcome = search_window(
            seq, spec, colors, window, config.node_budget, config.workers, config.split_depth
        )
    except SpackdError as e:
        _fail(e)
    click.echo(outcome.to_json())
    if outcome.status is SearchStatus.UNSAT:
        raise SystemExit(EXIT_NEGATIVE)
    if outcome.status is SearchStatus.TIMEOUT:
        raise SystemExit(EXIT_INCONCLUSIVE)


@main.command(name="enumerate")
@click.option("--colors", "colors", type=int, required=True)
@click.option("--width", "width", type=int, required=True)
@click.option("--height", "height", type=int, required=True)
@click.option("--seq", "seq", default="2^inf", callback=_parse_seq, show_default=True)
@click.option("--canonical", is_flag=True, help="One coloring per relabeling of equal colors")
@click.pass_obj
def enumerate_command(config, colors, width, height, seq, canonical):
    """List every valid coloring of the width x height torus grid as JSON.

    Exit 1 when there is none.

    Example:

        spackd enumerate --colors 5 --width 5 --height 5
    """
    try:
        colorings = enumerate_torus(
            colors, width, height, seq, state_cap=config.torus_state_cap, canonical=canonical
        )
    except SpackdError as e:
        _fail(e)
    click.echo(
        json.dumps(
            {
                "count": len(colorings),
                "all_diagonal": all(c.diagonal_shifts() for c in colorings),
                "colorings": [c.to_dict() for c in colorings],
            }
        )
    )
    if not colorings:
        raise SystemExit(EXIT_NEGATIVE)


@main.command(name="selfcheck")
@click.option("--quick", is_flag=True, help="Skip the formula/construction sweep")
@click.option(
    "--fixtures-dir",
    "fixtures_dir",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    default=None,
    help="Compare against fixture files in this directory",
)
@click.option("--sweep-limit", "sweep_limit", type=int, default=None, help="Largest t in the sweep")
@click.pass_obj
def selfcheck_command(config, quick, fixtures_dir, sweep_limit):
    """Re-render every golden matrix, verify it, and sweep chi against the catalog."""
    limit = sweep_limit or config.sweep_limit
    summary = run_selfcheck(fixtures_dir=fixtures_dir, quick=quick, sweep_limit=limit)

    table = Table(title="Fixtures")
    table.add_column("Fixture")
    table.add_column("Matrix")
    table.add_column("Verify")
    for result in summary.fixtures:
        table.add_row(
            result.name,
            "ok" if result.matched else "MISMATCH",
            "valid" if result.verified else "INVALID",
        )
    Console().print(table)

    for result in summary.fixtures:
        if not result.ok:
            click.echo(click.style(f"✗ {result.name}: {result.message}", fg="red"))
    if summary.sweep_ran:
        if summary.sweep_failures:
            for failure in summary.sweep_failures:
                click.echo(click.style(f"✗ sweep {failure}", fg="red"))
        else:
            click.echo(click.style(f"✓ Agreement sweep t <= {limit}", fg="green"))

    if not summary.ok:
        raise SystemExit(EXIT_NEGATIVE)
    click.echo(click.style(f"✓ {len(summary.fixtures)} fixtures", fg="green"))


if __name__ == "__main__":
    main()
