"""
What the commands do, apart from argument parsing and printing.

Each `run_*` returns the exit code together with the report document, so the
same runs back the CLI and the tests.
"""
from collections.abc import Sequence
from dataclasses import dataclass

from loguru import logger

from pyfixpoint.certify.report import CertificateReport
from pyfixpoint.certify.suite import certify_instance
from pyfixpoint.core.element import Element
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.documents.report import (
    CertificateSection,
    ExpectedSection,
    InstanceEcho,
    ReportDocument,
    SolveSection,
    format_element,
)
from pyfixpoint.gallery.entries import GalleryEntry
from pyfixpoint.shared.consts import CheckName, ExitCode
from pyfixpoint.shared.types import CheckStatus, HypothesisError
from pyfixpoint.solve.diagnostics import diagnose
from pyfixpoint.solve.multistart import StartOutcome, uniqueness_cross_check
from pyfixpoint.solve.picard import picard_solve
from pyfixpoint.solve.trace import SolveResult


@dataclass(frozen=True)
class CommandOutcome:
    code: ExitCode
    document: ReportDocument
    certificate: CertificateReport
    diagnostics: CertificateReport | None = None
    result: SolveResult | None = None
    starts: tuple[StartOutcome, ...] = ()


def certificate_verdict(report: CertificateReport) -> str:
    if report.all_passed:
        return "all hypotheses hold on the sample"
    if report.passed:
        return "existence hypotheses hold; comparability fails, so the fixed point need not be unique"
    return "hypotheses violated: " + ", ".join(c.name for c in report.failed_checks)


def run_certify(instance: ProblemInstance) -> CommandOutcome:
    """Exit 0 when no existence hypothesis fails, 1 otherwise."""
    report = certify_instance(instance)
    code = ExitCode.OK if report.passed else ExitCode.VIOLATION
    document = ReportDocument(
        instance=InstanceEcho.of(instance),
        certificate=CertificateSection.of(report),
        verdict=certificate_verdict(report),
    )
    return CommandOutcome(code, document, report)


def _solve_verdict(result: SolveResult) -> str:
    if result.fixed_point is not None:
        return f"{result.status}: u = {format_element(result.fixed_point)} after {result.trace.iterations_used} iterations"
    return f"{result.status} after {result.trace.iterations_used} iterations, no fixed point within tol"


def run_solve(instance: ProblemInstance, starts: Sequence[Element] = (), quiet: bool = False) -> CommandOutcome:
    """
    Certify, then solve from x0 and cross-check uniqueness when extra starts are given.

    Only a start that is not below its image stops the run before solving
    (exit 1). Exit 0 when x0 reaches a fixed point, 3 when it does not, and 1
    when the starts reach different fixed points although comparability holds.
    """
    certificate = certify_instance(instance)
    echo = InstanceEcho.of(instance)
    refused = ReportDocument(
        instance=echo,
        certificate=CertificateSection.of(certificate),
        verdict="refusing to solve: x0 is not below f(x0)",
    )
    if certificate.status(CheckName.START_BELOW_IMAGE) is CheckStatus.FAIL:
        return CommandOutcome(ExitCode.VIOLATION, refused, certificate)
    try:
        result = picard_solve(instance, certificate)
    except HypothesisError as e:
        logger.warning("{}", e)
        return CommandOutcome(ExitCode.VIOLATION, refused, certificate)

    diagnostics = diagnose(instance, result)
    outcomes: list[StartOutcome] = []
    if starts:
        uniqueness, outcomes = uniqueness_cross_check(instance, [instance.x0, *starts], certificate)
        diagnostics += uniqueness

    code = ExitCode.OK if result.converged else ExitCode.NON_CONVERGENCE
    verdict = _solve_verdict(result)
    if CheckName.UNIQUENESS in diagnostics and diagnostics[CheckName.UNIQUENESS].failed:
        code = ExitCode.VIOLATION
        verdict += "; the starts reach different fixed points"

    document = ReportDocument(
        instance=echo,
        certificate=CertificateSection.of(certificate),
        diagnostics=CertificateSection.of(diagnostics),
        solve=SolveSection.of(result, quiet=quiet, starts=outcomes),
        verdict=verdict,
    )
    return CommandOutcome(code, document, certificate, diagnostics, result, tuple(outcomes))


def run_gallery(entry: GalleryEntry, quiet: bool = False) -> CommandOutcome:
    """Certify and solve a gallery entry, then compare with its expected fixed point."""
    instance = entry.instance
    certificate = certify_instance(instance)
    try:
        result = picard_solve(instance, certificate)
    except HypothesisError as e:
        logger.warning("{}", e)
        document = ReportDocument(
            instance=InstanceEcho.of(instance),
            certificate=CertificateSection.of(certificate),
            verdict=f"{entry.name}: x0 is not below f(x0)",
        )
        return CommandOutcome(ExitCode.VIOLATION, document, certificate)

    diagnostics = diagnose(instance, result)
    matched = entry.matches(result)
    expected = entry.expected
    section = ExpectedSection(
        point=format_element(expected.point) if expected is not None else None,
        self_distance=expected.self_distance if expected is not None else None,
        matched=matched,
    )

    if not certificate.passed:
        code, verdict = ExitCode.VIOLATION, f"{entry.name}: {certificate_verdict(certificate)}"
    elif not matched:
        code, verdict = ExitCode.VIOLATION, f"{entry.name}: solve disagrees with the expected fixed point"
    else:
        code, verdict = ExitCode.OK, f"{entry.name}: expected fixed point matched ({_solve_verdict(result)})"
    if entry.negative:
        verdict += " [negative entry]"

    document = ReportDocument(
        instance=InstanceEcho.of(instance),
        certificate=CertificateSection.of(certificate),
        diagnostics=CertificateSection.of(diagnostics),
        solve=SolveSection.of(result, quiet=quiet),
        expected=section,
        verdict=verdict,
    )
    return CommandOutcome(code, document, certificate, diagnostics, result)
