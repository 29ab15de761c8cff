"""
CLI for torus_tqft using Typer
"""

import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import typer
from rich import box
from rich.align import Align
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from . import __version__
from .cobcat.normal_form import arrows_equal, canonical_form, normalize
from .config import get_settings
from .exceptions import (
    ArityError,
    FieldMismatchError,
    MissingEtaError,
    NotInSL2ZError,
    ParseError,
    PreconditionError,
    UnknownNameError,
    ValidationError,
)
from .log import configure_logging, get_logger
from .parsing import parse_expr, parse_sl2, print_expr
from .reproduce import TableRow, table_registry
from .scalars import format_scalar
from .sl2z.catalog import funar_family, funar_pair, named_matrices
from .sl2z.conjugacy import (
    brute_force_conjugate,
    bundle_key,
    conjugacy_key,
    is_conjugate,
    torus_bundle_homeomorphic,
)
from .sl2z.lens import lens_inseparable, lens_params
from .sl2z.words import decompose, negative_cf, word_to_text
from .tqft.builtins import tqft_registry
from .tqft.datum import TqftDatum, validate
from .tqft.evaluation import evaluate
from .tqft.invariants import bundle_contraction, bundle_invariant, lens_invariant
from .tqft.schema import load_datum

app = typer.Typer(
    name="torus-tqft",
    help="Exact calculator for TQFTs on thickened and solid tori.",
    add_completion=True,
)
console = Console()
err_console = Console(stderr=True)
logger = get_logger(__name__)

# Color scheme
COLORS = {
    "primary": "bright_blue",
    "success": "bright_green",
    "error": "bright_red",
    "warning": "bright_yellow",
    "info": "bright_cyan",
    "muted": "dim white",
    "accent": "bright_magenta",
}

EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_PRECONDITION = 3


def create_header(title: str, subtitle: str = "") -> Panel:
    """Create a stylized header panel."""
    header_content = Text()
    header_content.append(title, style=f"bold {COLORS['primary']}")
    if subtitle:
        header_content.append(f"\n{subtitle}", style=COLORS["muted"])

    return Panel(
        Align.center(header_content),
        box=box.DOUBLE,
        style=COLORS["primary"],
        padding=(0, 2),
    )


def create_status_panel(
    title: str,
    message: str,
    status: str = "info",
    details: Optional[Dict[str, str]] = None,
) -> Panel:
    """Create a status panel with optional details."""
    color = {
        "info": COLORS["info"],
        "success": COLORS["success"],
        "error": COLORS["error"],
        "warning": COLORS["warning"],
    }.get(status, COLORS["info"])

    content = f"[bold {color}]{escape(message)}[/bold {color}]"
    if details:
        content += "\n"
        for key, value in details.items():
            content += (
                f"\n[{COLORS['primary']}]{escape(key)}:[/{COLORS['primary']}] "
                f"[{COLORS['muted']}]{escape(str(value))}[/{COLORS['muted']}]"
            )

    return Panel(
        content,
        title=f"[bold]{escape(title)}[/bold]",
        box=box.ROUNDED,
        style=color,
        padding=(1, 2),
    )


def _emit(line: str) -> None:
    """One plain result line on stdout."""
    console.print(line, markup=False, highlight=False, soft_wrap=True)


def _emit_json(payload: Any) -> None:
    typer.echo(json.dumps(payload, indent=2))


def _fail(title: str, exc: Exception, code: int, **details: str) -> None:
    err_console.print(create_status_panel(title, str(exc), "error", details or None))
    raise typer.Exit(code=code)


@contextmanager
def _handle_errors() -> Iterator[None]:
    """Render package errors as panels and map them to exit codes."""
    try:
        yield
    except ValidationError as exc:
        _fail("Validation failed", exc, EXIT_VALIDATION)
    except PreconditionError as exc:
        _fail("Precondition failed", exc, EXIT_PRECONDITION, Clause=exc.clause)
    except ParseError as exc:
        _fail("Parse error", exc, EXIT_USAGE)
    except ArityError as exc:
        _fail("Arity error", exc, EXIT_USAGE)
    except (UnknownNameError, NotInSL2ZError, MissingEtaError, FieldMismatchError) as exc:
        _fail("Error", exc, EXIT_USAGE)
    except OSError as exc:
        _fail("File error", exc, EXIT_USAGE)
    except ValueError as exc:
        _fail("Validation failed", exc, EXIT_VALIDATION)


def _datum(name: str) -> TqftDatum:
    return tqft_registry.create(name)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable debug logging"),
):
    """
    Decompose SL(2,Z) matrices, compare torus arrows and evaluate TQFT invariants.
    """
    configure_logging("DEBUG" if verbose else None)


@app.command("version")
def show_version():
    """Print the package version."""
    _emit(f"torus-tqft {__version__}")


@app.command("decompose")
def decompose_command(
    matrix: str = typer.Argument(..., help="Matrix '[[p,r],[q,s]]', catalogue name or word"),
    as_json: bool = typer.Option(False, "--json", help="Machine-readable output"),
):
    """
    Write a matrix as a word in the Dehn twists D_a and D_b.
    """
    with _handle_errors():
        a = parse_sl2(matrix)
        word, m, negated = decompose(a)
        b = -a if negated else a
        cf = negative_cf(b.p, b.q) if b.q != 0 else []
    if as_json:
        _emit_json(
            {
                "matrix": str(a),
                "word": word_to_text(word),
                "continued_fraction": cf,
                "residual": m,
                "negated": negated,
            }
        )
        return
    _emit(f"matrix: {a}")
    _emit(f"word: {word_to_text(word)}")
    _emit(f"continued fraction: {cf}")
    _emit(f"residual D_a power: {m}")
    _emit(f"negated: {negated}")


@app.command("conjugate")
def conjugate_command(
    first: str = typer.Argument(..., help="First matrix"),
    second: str = typer.Argument(..., help="Second matrix"),
    brute_force: bool = typer.Option(
        False, "--brute-force", help="Also search for an explicit conjugating matrix"
    ),
    bound: Optional[int] = typer.Option(
        None, "--bound", help="Entry bound of the brute-force search"
    ),
):
    """
    Decide whether two matrices are conjugate in SL(2,Z).
    """
    with _handle_errors():
        a, b = parse_sl2(first), parse_sl2(second)
        conjugate = is_conjugate(a, b)
        _emit(f"class of A: {conjugacy_key(a)}")
        _emit(f"class of B: {conjugacy_key(b)}")
        _emit(f"conjugate: {'yes' if conjugate else 'no'}")
        if brute_force:
            limit = bound if bound is not None else get_settings().brute_force_bound
            c = brute_force_conjugate(a, b, limit)
            _emit(f"witness: {c}" if c is not None else f"witness: none with entries <= {limit}")


@app.command("bundle-eq")
def bundle_eq_command(
    first: str = typer.Argument(..., help="Monodromy of the first bundle"),
    second: str = typer.Argument(..., help="Monodromy of the second bundle"),
):
    """
    Decide whether two torus bundles are homeomorphic.
    """
    with _handle_errors():
        a, b = parse_sl2(first), parse_sl2(second)
        _emit(f"class of A: {bundle_key(a)}")
        _emit(f"class of B: {bundle_key(b)}")
        same = torus_bundle_homeomorphic(a, b)
    _emit(f"homeomorphic: {'yes' if same else 'no'}")


@app.command("lens")
def lens_command(
    first: str = typer.Argument(..., help="First gluing matrix"),
    second: str = typer.Argument(..., help="Second gluing matrix"),
):
    """
    Decide whether two gluing matrices give homeomorphic lens spaces.
    """
    with _handle_errors():
        a, b = parse_sl2(first), parse_sl2(second)
        same = lens_inseparable(a, b)
    _emit(f"A: {lens_params(a)}")
    _emit(f"B: {lens_params(b)}")
    _emit(f"homeomorphic: {'yes' if same else 'no'}")


@app.command("validate")
def validate_command(
    source: str = typer.Argument(..., help="Datum JSON file or built-in name (F1, F2, F3)"),
):
    """
    Check a TQFT datum against every axiom.
    """
    with _handle_errors():
        path = Path(source)
        d = load_datum(path) if path.exists() else tqft_registry.raw(source)
        report = validate(d)

    console.print(create_header("TQFT VALIDATION", f"Validating: {d.name}"))
    console.print()
    table = Table(
        title="Validation Results",
        box=box.ROUNDED,
        show_header=True,
        header_style=f"bold {COLORS['primary']}",
    )
    table.add_column("Check", style=COLORS["info"])
    table.add_column("Status", justify="center", width=10)
    table.add_column("Details", style=COLORS["muted"])
    for check in report.checks:
        status = (
            f"[{COLORS['success']}]PASS[/{COLORS['success']}]"
            if check.passed
            else f"[{COLORS['error']}]FAIL[/{COLORS['error']}]"
        )
        detail = check.detail
        if check.offending:
            detail += f" (entries {check.offending[:4]})"
        table.add_row(check.name, status, escape(detail or "-"))
    console.print(table)
    console.print()

    if report.passed:
        console.print(f"[{COLORS['success']}]All validation checks passed![/{COLORS['success']}]")
        return
    err_console.print(
        create_status_panel(
            "Validation failed",
            f"{d.name} fails {len(report.failed_checks())} check(s)",
            "error",
            {"Failed": ", ".join(report.failed_checks())},
        )
    )
    raise typer.Exit(code=EXIT_VALIDATION)


@app.command("invariant")
def invariant_command(
    tqft: str = typer.Option(..., "--tqft", "-t", help="Built-in TQFT name"),
    bundle: Optional[str] = typer.Option(None, "--bundle", help="Torus-bundle monodromy"),
    lens: Optional[str] = typer.Option(None, "--lens", help="Lens-space gluing matrix"),
    contraction: bool = typer.Option(
        False, "--contraction", help="Evaluate the bundle as a full contraction"
    ),
    as_json: bool = typer.Option(False, "--json", help="Machine-readable output"),
):
    """
    Evaluate a TQFT on a torus bundle or a lens space.
    """
    if (bundle is None) == (lens is None):
        err_console.print(
            create_status_panel("Usage", "give exactly one of --bundle and --lens", "error")
        )
        raise typer.Exit(code=EXIT_USAGE)
    with _handle_errors():
        d = _datum(tqft)
        if bundle is not None:
            a = parse_sl2(bundle)
            kind = "bundle"
            value = bundle_contraction(d, a) if contraction else bundle_invariant(d, a)
        else:
            a = parse_sl2(lens)
            kind = "lens"
            value = lens_invariant(d, a)
    text = format_scalar(value)
    if as_json:
        _emit_json({"tqft": d.name, "kind": kind, "matrix": str(a), "value": text})
    else:
        _emit(text)


@app.command("normalize")
def normalize_command(
    expr: str = typer.Argument(..., help="Arrow expression, e.g. '(comp beta gamma)'"),
    canonical: bool = typer.Option(False, "--canonical", help="Canonicalize every factor"),
):
    """
    Bring an arrow expression to normal form.
    """
    with _handle_errors():
        nf = normalize(parse_expr(expr))
        if canonical:
            nf = canonical_form(nf)
    _emit(f"{nf.source} -> {nf.target}")
    _emit(str(nf))
    _emit(print_expr(nf.to_expr()))


@app.command("equal")
def equal_command(
    first: str = typer.Argument(..., help="First arrow expression"),
    second: str = typer.Argument(..., help="Second arrow expression"),
    tqft: List[str] = typer.Option(
        [], "--tqft", "-t", help="Also compare the evaluations under these built-ins"
    ),
):
    """
    Decide whether two arrow expressions are equal.
    """
    with _handle_errors():
        f, g = parse_expr(first), parse_expr(second)
        same = arrows_equal(normalize(f), normalize(g))
        evaluations = {}
        for name in tqft:
            d = _datum(name)
            evaluations[name] = evaluate(d, f) == evaluate(d, g)
    _emit("equal" if same else "not equal")
    for name, agrees in evaluations.items():
        _emit(f"{name}: {'same matrix' if agrees else 'different matrices'}")


def _rows_table(rows: List[TableRow], title: str) -> Table:
    table = Table(
        title=title,
        box=box.ROUNDED,
        show_header=True,
        header_style=f"bold {COLORS['primary']}",
        border_style=COLORS["primary"],
    )
    table.add_column("Table", style=COLORS["muted"], no_wrap=True)
    table.add_column("Label", style=COLORS["info"], no_wrap=True)
    table.add_column("Left", overflow="fold")
    table.add_column("Right", overflow="fold")
    table.add_column("Verdict", justify="center")
    table.add_column("Printed", overflow="fold")
    for row in rows:
        verdict = (
            f"[{COLORS['success']}]distinguished[/{COLORS['success']}]"
            if row.distinguished
            else f"[{COLORS['warning']}]equal[/{COLORS['warning']}]"
        )
        table.add_row(
            row.table,
            escape(row.label),
            escape(row.values["left"]),
            escape(row.values["right"]),
            verdict,
            _printed_note(row),
        )
    return table


def _printed_note(row: TableRow) -> str:
    if "printed" not in row.extra:
        return "-"
    note = escape(" / ".join(row.extra["printed"]))
    if row.extra["matches_printed"]:
        return note
    return f"[{COLORS['warning']}]{note} (not reproduced)[/{COLORS['warning']}]"


@app.command("reproduce")
def reproduce_command(
    table: str = typer.Argument(..., help="Table name or 'all'"),
    as_json: bool = typer.Option(False, "--json", help="Machine-readable rows"),
    pretty: bool = typer.Option(False, "--pretty", help="Render a rich table"),
):
    """
    Recompute a separation table exactly.
    """
    with _handle_errors():
        rows = table_registry.run(table)
    if as_json:
        _emit_json([row.to_dict() for row in rows])
        return
    if pretty:
        console.print(_rows_table(rows, f"Reproduction: {table}"))
        return
    for row in rows:
        verdict = "distinguished" if row.distinguished else "equal"
        left, right = row.values["left"], row.values["right"]
        line = f"{row.table} | {row.label} | {left} | {right} | {verdict}"
        if row.extra.get("matches_printed") is False:
            line += " | printed {} / {} not reproduced".format(*row.extra["printed"])
        _emit(line)


@app.command("list-tables")
def list_tables_command():
    """
    List the reproduction tables.
    """
    console.print(create_header("TORUS TQFT", "Reproduction Tables"))
    for name in table_registry.list_tables():
        _emit(name)


@app.command("catalog")
def catalog_command():
    """
    List the named matrices.
    """
    console.print(create_header("TORUS TQFT", "Named Matrices"))
    table = Table(
        box=box.ROUNDED,
        show_header=True,
        header_style=f"bold {COLORS['primary']}",
        border_style=COLORS["primary"],
    )
    table.add_column("Name", style=COLORS["success"], no_wrap=True)
    table.add_column("Matrix", no_wrap=True)
    table.add_column("Trace", justify="right")
    for name, a in sorted(named_matrices().items()):
        table.add_row(name, escape(str(a)), str(a.trace))
    console.print(table)


@app.command("funar")
def funar_command(
    k: int = typer.Argument(..., help="Nonzero integer k"),
    q: int = typer.Argument(..., help="Prime q = 1 mod 4"),
    v: int = typer.Argument(..., help="Positive integer v"),
):
    """
    Print Funar's pair G_{k,q,v}, H_{k,q,v}.
    """
    with _handle_errors():
        g, h = funar_pair(k, q, v)
        wg, wh = funar_family(k, q, v)
    _emit(f"G: {g}  {word_to_text(wg)}")
    _emit(f"H: {h}  {word_to_text(wh)}")


if __name__ == "__main__":
    app()
