from dataclasses import replace
from pathlib import Path
from typing import Annotated

import typer
from rich.markup import escape
from rich.table import Table

from pyfixpoint.cli.common import RunOptions, command_scope, emit, show_certificate, show_solve
from pyfixpoint.cli.run import run_gallery
from pyfixpoint.documents.instance import export_instance
from pyfixpoint.gallery.entries import ENTRIES, lookup
from pyfixpoint.shared.console import out_console
from pyfixpoint.utils.pydantic_parse import pydantic_typer_parse

EntryName = Annotated[str, typer.Argument(help="Gallery entry, or random-<n>-<seed>", metavar="NAME")]


def show_entries() -> None:
    table = Table(title="gallery", title_justify="left")
    table.add_column("name")
    table.add_column("kind")
    table.add_column("notes")
    for name, factory in ENTRIES.items():
        entry = factory()
        table.add_row(name, "negative" if entry.negative else "", escape(entry.notes))
    table.add_row("random-<n>-<seed>", "", "seeded finite instance with n in 1..16")
    out_console.print(table)


@pydantic_typer_parse
def gallery(name: EntryName, options: RunOptions) -> None:
    """
    List the gallery, or certify and solve one entry against its expected fixed point.

    Example:
      $ pyfixpoint gallery list
      $ pyfixpoint gallery max-half
    """
    with command_scope(options):
        if name == "list":
            show_entries()
            raise typer.Exit()
        entry = lookup(name)
        entry = replace(entry, instance=options.apply(entry.instance))
        outcome = run_gallery(entry, quiet=options.quiet)
        show_certificate(f"certificate: {entry.name}", outcome.certificate)
        if outcome.result is not None:
            show_solve(outcome.result, options.quiet)
        if outcome.diagnostics is not None:
            show_certificate("diagnostics", outcome.diagnostics)
        emit(outcome.document, options, outcome.code)


def export(
        name: EntryName,
        file: Annotated[Path, typer.Argument(help="Where to write the instance document", metavar="FILE")],
        verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log at DEBUG level")] = False,
) -> None:
    """Write a gallery entry as an instance document that `certify` and `solve` accept."""
    with command_scope(RunOptions(verbose=verbose)):
        path = export_instance(lookup(name).instance, file)
        out_console.print(f"wrote [bold]{escape(name)}[/bold] to {escape(str(path))}")
