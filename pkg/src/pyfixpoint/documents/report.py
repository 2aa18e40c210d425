"""
Report documents.

Field order is fixed by the models and every float is written as a string
with 17 significant digits, so identical runs produce identical bytes.
"""
from collections.abc import Sequence
from typing import Annotated

from pydantic import BaseModel, ConfigDict, PlainSerializer

from pyfixpoint.certify.report import CertificateReport, CheckResult, Violation
from pyfixpoint.core.element import Element, FiniteIndex, Scalar
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.space import FiniteSpace
from pyfixpoint.shared.consts import REPORT_FLOAT_FORMAT, TRACE_PREVIEW_ROWS
from pyfixpoint.solve.multistart import StartOutcome
from pyfixpoint.solve.trace import SolveResult


def format_float(value: float) -> str:
    return format(value, REPORT_FLOAT_FORMAT)


def format_element(e: Element) -> str:
    match e:
        case FiniteIndex(index):
            return str(index)
        case Scalar(value):
            return format_float(value)


type ReportFloat = Annotated[float, PlainSerializer(format_float, return_type=str)]


class _Section(BaseModel):
    model_config = ConfigDict(frozen=True)


class ViolationDocument(_Section):
    check: str
    witness: list[str]
    values: dict[str, ReportFloat]
    message: str

    @classmethod
    def of(cls, v: Violation) -> "ViolationDocument":
        return cls(
            check=v.check,
            witness=[format_element(e) for e in v.witness],
            values=dict(v.values),
            message=v.message,
        )


class CheckDocument(_Section):
    name: str
    status: str
    samples_used: int
    exhaustive: bool
    violation_count: int
    violations: list[ViolationDocument]
    notes: list[str]

    @classmethod
    def of(cls, c: CheckResult) -> "CheckDocument":
        return cls(
            name=c.name,
            status=c.status,
            samples_used=c.samples_used,
            exhaustive=c.exhaustive,
            violation_count=c.violation_count,
            violations=[ViolationDocument.of(v) for v in c.violations],
            notes=list(c.notes),
        )


class CertificateSection(_Section):
    passed: bool
    checks: list[CheckDocument]
    notes: list[str]

    @classmethod
    def of(cls, report: CertificateReport) -> "CertificateSection":
        return cls(passed=report.passed, checks=[CheckDocument.of(c) for c in report], notes=list(report.notes))


class TraceRow(_Section):
    n: int
    x: str
    rho: ReportFloat | None
    self_distance: ReportFloat


class StartDocument(_Section):
    start: str
    status: str | None
    fixed_point: str | None
    iterations: int | None
    skipped: str | None

    @classmethod
    def of(cls, o: StartOutcome) -> "StartDocument":
        r = o.result
        return cls(
            start=format_element(o.start),
            status=r.status if r is not None else None,
            fixed_point=format_element(r.fixed_point) if r is not None and r.fixed_point is not None else None,
            iterations=r.trace.iterations_used if r is not None else None,
            skipped=o.skipped,
        )


class SolveSection(_Section):
    status: str
    iterations: int
    u: str | None
    residual: ReportFloat
    self_distance: ReportFloat
    descent_flagged: bool
    descent_step: int | None
    trace_head: list[TraceRow] | None = None
    trace_tail: list[TraceRow] | None = None
    starts: list[StartDocument] | None = None
    notes: list[str]

    @classmethod
    def of(
            cls,
            result: SolveResult,
            quiet: bool = False,
            starts: Sequence[StartOutcome] = (),
    ) -> "SolveSection":
        trace = result.trace
        rows = [TraceRow(n=n, x=format_element(x), rho=r, self_distance=s) for n, x, r, s in trace.rows()]
        head, tail = rows[:TRACE_PREVIEW_ROWS], rows[TRACE_PREVIEW_ROWS:][-TRACE_PREVIEW_ROWS:]
        return cls(
            status=trace.status,
            iterations=trace.iterations_used,
            u=format_element(result.fixed_point) if result.fixed_point is not None else None,
            residual=result.residual,
            self_distance=result.self_distance_at_u,
            descent_flagged=trace.descent_flagged,
            descent_step=trace.descent_step,
            trace_head=None if quiet else head,
            trace_tail=None if quiet else tail,
            starts=[StartDocument.of(o) for o in starts] or None,
            notes=list(result.notes),
        )


class InstanceEcho(_Section):
    label: str
    kind: str
    seed: int
    samples: int
    tol: ReportFloat
    max_iter: int

    @classmethod
    def of(cls, instance: ProblemInstance, seed: int | None = None, samples: int | None = None) -> "InstanceEcho":
        return cls(
            label=instance.label,
            kind="finite" if isinstance(instance.space, FiniteSpace) else "interval",
            seed=instance.seed if seed is None else seed,
            samples=instance.sample_count if samples is None else samples,
            tol=instance.tol,
            max_iter=instance.max_iter,
        )


class ExpectedSection(_Section):
    point: str | None
    self_distance: ReportFloat | None
    matched: bool


class ReportDocument(_Section):
    instance: InstanceEcho
    certificate: CertificateSection | None = None
    diagnostics: CertificateSection | None = None
    solve: SolveSection | None = None
    expected: ExpectedSection | None = None
    verdict: str

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True) + "\n"
