from pathlib import Path
from typing import Annotated

import typer

from pyfixpoint.cli.common import RunOptions, command_scope, emit, parse_start, show_certificate, show_solve
from pyfixpoint.cli.run import run_certify, run_solve
from pyfixpoint.documents.instance import load_instance
from pyfixpoint.utils.pydantic_parse import pydantic_typer_parse

InstanceFile = Annotated[Path, typer.Argument(help="Instance document (JSON)", metavar="FILE")]


@pydantic_typer_parse
def certify(file: InstanceFile, options: RunOptions) -> None:
    """
    Check every hypothesis of the fixed-point theorem on an instance.

    Exit 0 when the existence hypotheses hold on the sample, 1 on a violation,
    2 when the document cannot be loaded.
    """
    with command_scope(options):
        instance = options.apply(load_instance(file))
        outcome = run_certify(instance)
        show_certificate(f"certificate: {instance.label}", outcome.certificate)
        emit(outcome.document, options, outcome.code)


@pydantic_typer_parse
def solve(
        file: InstanceFile,
        options: RunOptions,
        start: Annotated[list[str] | None, typer.Option(
            "--start", "-s",
            help="Extra start point for the uniqueness cross-check; repeat for more",
        )] = None,
) -> None:
    """
    Certify an instance, then run the Picard iteration from x0.

    With --start the run is repeated from every extra start and the fixed
    points are required to coincide.

    Example:
      $ pyfixpoint solve instances/max_half.json --start 10 --start 123.4
    """
    with command_scope(options):
        instance = options.apply(load_instance(file))
        starts = [parse_start(instance, s) for s in start or ()]
        outcome = run_solve(instance, starts, quiet=options.quiet)
        show_certificate(f"certificate: {instance.label}", outcome.certificate)
        if outcome.result is not None:
            show_solve(outcome.result, options.quiet, outcome.starts)
        if outcome.diagnostics is not None:
            show_certificate("diagnostics", outcome.diagnostics)
        emit(outcome.document, options, outcome.code)
