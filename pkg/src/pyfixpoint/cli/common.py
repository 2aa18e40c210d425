from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated

import typer
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from pyfixpoint.certify.report import CertificateReport
from pyfixpoint.core.element import Element, FiniteIndex, Scalar
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.documents.report import ReportDocument, format_element, format_float
from pyfixpoint.log.config import configure_logging, isolated_logging, log_level_for
from pyfixpoint.shared.console import Pretty, err_console, out_console
from pyfixpoint.shared.consts import ExitCode
from pyfixpoint.shared.types import CheckStatus, DomainError, ExprError, InstanceLoadError, UnknownNameError
from pyfixpoint.solve.multistart import StartOutcome
from pyfixpoint.solve.trace import SolveResult

_STATUS_STYLE = {CheckStatus.PASS: "green", CheckStatus.FAIL: "bold red", CheckStatus.SKIPPED: "yellow"}


class RunOptions(BaseModel):
    """Flags shared by every command that certifies or solves."""

    model_config = ConfigDict(frozen=True)

    seed: int | None = Field(default=None, ge=0, description="Seed overriding the instance's own")
    samples: int | None = Field(default=None, ge=1, description="Sampled elements per certificate")
    tol: float | None = Field(default=None, gt=0, description="Solver tolerance")
    max_iter: int | None = Field(default=None, ge=1, description="Iteration cap of the solver")
    report: Path | None = Field(default=None, description="Write the JSON report to this file")
    quiet: bool = Field(default=False, description="Leave the iteration trace out of the report")
    verbose: Annotated[bool, typer.Option(False, "--verbose", "-v", help="Log at DEBUG level")] = False

    def apply(self, instance: ProblemInstance) -> ProblemInstance:
        return instance.with_overrides(seed=self.seed, sample_count=self.samples, tol=self.tol, max_iter=self.max_iter)


@contextmanager
def command_scope(options: RunOptions | None = None) -> Iterator[None]:
    """
    Logging for one command, with library errors turned into the usage exit code.

    Unreadable documents, unwritable reports, unknown names and out-of-range
    parameters exit 2.
    """
    configure_logging()
    verbose = options.verbose if options is not None else False
    with isolated_logging(log_level_for(verbose)):
        if options is not None:
            logger.debug("options: {}", Pretty(options.model_dump(exclude_none=True)))
        try:
            yield
        except (InstanceLoadError, UnknownNameError, DomainError, ExprError, OSError) as e:
            err_console.print(f"[bold red]error:[/bold red] {escape(str(e))}")
            raise typer.Exit(code=ExitCode.USAGE) from e


def parse_start(instance: ProblemInstance, text: str) -> Element:
    """A point of the instance's carrier written as on the command line: an index or a number."""
    try:
        e = FiniteIndex(int(text)) if instance.space.is_finite else Scalar(float(text))
    except ValueError:
        raise DomainError(f"start {text!r} is not a point of {instance.label}") from None
    return instance.space.check_member(e)


def emit(document: ReportDocument, options: RunOptions, code: ExitCode) -> None:
    if options.report is not None:
        _ = options.report.write_text(document.to_json(), encoding="utf-8")
        logger.debug("report written to {}", options.report)
    style = "green" if code is ExitCode.OK else "red"
    out_console.print(Panel(escape(document.verdict), title=f"exit {int(code)}", border_style=style, expand=False))
    raise typer.Exit(code=code)


def show_certificate(title: str, report: CertificateReport) -> None:
    table = Table(title=title, title_justify="left")
    for column in ("check", "status", "samples", "violations", "notes"):
        table.add_column(column)
    for c in report:
        style = _STATUS_STYLE[c.status]
        table.add_row(
            c.name,
            f"[{style}]{c.status}[/{style}]",
            str(c.samples_used),
            str(c.violation_count),
            escape("; ".join(c.notes)),
        )
    out_console.print(table)

    for c in report.failed_checks:
        v = c.violations[0]
        witness = ", ".join(format_element(e) for e in v.witness)
        values = ", ".join(f"{k} = {format_float(x)}" for k, x in v.values)
        out_console.print(f"  [red]{escape(c.name)}[/red] at ({witness}): {escape(v.message)} [dim]{escape(values)}[/dim]")


def _describe_start(o: StartOutcome) -> str:
    if o.result is None:
        return f"start {o.start}: skipped, {o.skipped}"
    u = o.result.fixed_point
    reached = format_element(u) if u is not None else "no fixed point"
    return f"start {o.start}: {o.result.status}, {reached}"


def show_solve(result: SolveResult, quiet: bool = False, starts: Sequence[StartOutcome] = ()) -> None:
    trace = result.trace
    u = format_element(result.fixed_point) if result.fixed_point is not None else "none"
    out_console.print(
        f"status [bold]{trace.status}[/bold] after {trace.iterations_used} iterations; u = {u}, "
        f"p(u, fu) = {format_float(result.residual)}, p(u, u) = {format_float(result.self_distance_at_u)}"
    )
    if trace.descent_flagged:
        out_console.print(f"[yellow]descent inequality failed at step {trace.descent_step}[/yellow]")
    for o in starts:
        out_console.print(f"  {escape(_describe_start(o))}")
    if quiet:
        return
    table = Table(title="trace", title_justify="left")
    for column in ("n", "x_n", "rho_n", "p(x_n, x_n)"):
        table.add_column(column, justify="right")
    rows = trace.rows()
    shown = rows if len(rows) <= 20 else [*rows[:10], None, *rows[-10:]]
    for row in shown:
        if row is None:
            table.add_row("...", "", "", "")
            continue
        n, x, r, s = row
        table.add_row(str(n), format_element(x), format_float(r) if r is not None else "", format_float(s))
    out_console.print(table)
