"""Command-line front end: ``deltaribbon <subcommand> ...``.

Exit codes: 0 on success, 1 when ``check`` finds a failing property, 2 on
bad input (unreadable or malformed files, unknown labels or options).
"""

from __future__ import annotations

import os
import sys

import click

from .dm import DeltaMatroid, minor, twist
from .elements import as_label_sequence, natural_key
from .errors import DeltaRibbonError, UnknownSubcommand
from .formats import format_dm, format_rg, parse_dm, parse_rg
from .polynomials import POLYNOMIALS, polynomial
from .rep import CATALOG, catalog_entry, is_binary
from .ribbon import RibbonGraph, delta_matroid
from .search import find_minor
from .suites import SUITES, run_suite

INPUT_ERROR = 2
CHECK_FAILED = 1


class InputError(click.ClickException):
    exit_code = INPUT_ERROR


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _wrap(fn, *args):
    """Run a library call, turning library errors into input errors."""
    try:
        return fn(*args)
    except (DeltaRibbonError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        raise InputError(str(msg)) from None


def _load_rg(path: str) -> RibbonGraph:
    return _wrap(parse_rg, _read(path))


def _load_dm(path: str) -> DeltaMatroid:
    return _wrap(parse_dm, _read(path))


def _first_keyword(text: str) -> str | None:
    for line in text.splitlines():
        head = line.split("#", 1)[0].split(":", 1)[0].split()
        if head:
            return head[0]
    return None


def _load_any(path: str) -> DeltaMatroid:
    """A .dm file as is, or the delta-matroid of a .rg file."""
    text = _read(path)
    if _first_keyword(text) == "ground":
        return _wrap(parse_dm, text)
    return delta_matroid(_wrap(parse_rg, text))


def _fmt_set(labels) -> str:
    return "{" + ", ".join(labels) + "}"


class _Group(click.Group):
    def resolve_command(self, ctx, args):
        name = args[0] if args else None
        if name is not None and self.get_command(ctx, name) is None and not name.startswith("-"):
            err = UnknownSubcommand(f"unknown subcommand {name!r}; choose from {', '.join(self.list_commands(ctx))}")
            raise click.UsageError(str(err), ctx)
        return super().resolve_command(ctx, args)


@click.group(cls=_Group)
def main():
    """Delta-matroids of ribbon graphs and their polynomials."""


@main.command()
@click.argument("graph")
def info(graph):
    """Print v, e, k, f, gamma and t of a ribbon graph."""
    g = _load_rg(graph)
    for key, value in (("v", g.v), ("e", g.e), ("k", g.k), ("f", g.f), ("gamma", g.gamma), ("t", g.t)):
        click.echo(f"{key}: {value}")


@main.command("dm")
@click.argument("graph")
def dm_cmd(graph):
    """Print D(G) in .dm format."""
    click.echo(format_dm(delta_matroid(_load_rg(graph))), nl=False)


@main.command()
@click.argument("graph")
def qtrees(graph):
    """List the spanning quasi-trees, one per line."""
    for q in _load_rg(graph).spanning_quasi_trees():
        click.echo(_fmt_set(sorted(q, key=natural_key)))


@main.command()
@click.argument("graph")
@click.option("--edges", default="", help="Comma-separated edge labels.")
def pdual(graph, edges):
    """Print the partial dual G^A in .rg format."""
    g = _load_rg(graph)
    click.echo(format_rg(_wrap(g.partial_dual, as_label_sequence(edges))), nl=False)


@main.command()
@click.argument("graph")
@click.option("--edges", default="", help="Comma-separated edge labels.")
def petrial(graph, edges):
    """Print the partial Petrial G + A in .rg format."""
    g = _load_rg(graph)
    click.echo(format_rg(_wrap(g.partial_petrial, as_label_sequence(edges))), nl=False)


@main.command()
@click.argument("source")
@click.option("--which", type=click.Choice(sorted(POLYNOMIALS)), default="tutte", show_default=True)
def poly(source, which):
    """Print a polynomial of a .rg or .dm input as a canonical string."""
    d = _load_any(source)
    click.echo(str(_wrap(polynomial, d, which)))


@main.command("twist")
@click.argument("dmfile")
@click.option("--set", "items", default="", help="Comma-separated elements.")
def twist_cmd(dmfile, items):
    """Print the twist D * A."""
    d = _load_dm(dmfile)
    click.echo(format_dm(_wrap(twist, d, as_label_sequence(items))), nl=False)


@main.command("minor")
@click.argument("dmfile")
@click.option("--delete", "deleted", default="", help="Comma-separated elements to delete.")
@click.option("--contract", "contracted", default="", help="Comma-separated elements to contract.")
def minor_cmd(dmfile, deleted, contracted):
    """Print the minor D \\ X / Y."""
    d = _load_dm(dmfile)
    out = _wrap(minor, d, as_label_sequence(deleted), as_label_sequence(contracted))
    click.echo(format_dm(out), nl=False)


@main.command("has-minor")
@click.argument("dmfile")
@click.option("--target", required=True, help=f"A catalog name ({', '.join(sorted(CATALOG))}) or a .dm file.")
def has_minor_cmd(dmfile, target):
    """Decide whether D has a minor isomorphic to the target."""
    d = _load_dm(dmfile)
    tgt = _load_dm(target) if os.path.exists(target) else _wrap(catalog_entry, target)
    w = find_minor(d, tgt)
    if w is None:
        click.echo("no")
        return
    click.echo("yes")
    click.echo(f"delete: {_fmt_set(w.deleted)}")
    click.echo(f"contract: {_fmt_set(w.contracted)}")


@main.command()
@click.argument("dmfile")
def binary(dmfile):
    """Decide whether D is binary; print a witnessing twist when it is."""
    d = _load_dm(dmfile)
    res = _wrap(is_binary, d)
    if not res.ok:
        click.echo("no")
        return
    click.echo("yes")
    click.echo(f"twist: {_fmt_set(sorted(res.twist_set, key=natural_key))}")


@main.command()
@click.option("--suite", type=click.Choice(list(SUITES)), default="all", show_default=True)
@click.option("--max-edges", type=click.IntRange(0, 7), default=6, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--jobs", type=click.IntRange(1), default=None, help="Worker processes (default: CPU count).")
@click.option("--timings", is_flag=True, help="Include wall times in the report.")
def check(suite, max_edges, seed, fmt, jobs, timings):
    """Run an acceptance suite; exit 1 if any check fails."""
    report = run_suite(suite, max_edges=max_edges, seed=seed, jobs=jobs)
    text = report.to_json(timings) if fmt == "json" else report.to_text(timings)
    click.echo(text, nl=False)
    if not report.passed:
        sys.exit(CHECK_FAILED)


def run(argv=None) -> int:
    """Run the CLI on ``argv`` and return the exit code."""
    try:
        main.main(args=argv, prog_name="deltaribbon", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code if isinstance(exc, InputError) else INPUT_ERROR
    except click.exceptions.Abort:
        return INPUT_ERROR
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    return 0


def entry() -> None:
    sys.exit(run())
