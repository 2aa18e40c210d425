"""Checks on a recorded orbit, run through the same registry as the certificates."""
from dataclasses import replace

import numpy as np

from pyfixpoint.certify.checks import CheckContext, run_check
from pyfixpoint.certify.report import CertificateReport, CheckResult
from pyfixpoint.core.element import BatchEvaluationError, Element, Packed, pack
from pyfixpoint.core.functions import ControlFunction
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.order import PartialOrder
from pyfixpoint.core.space import PartialMetricSpace
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError
from pyfixpoint.solve.trace import IterationTrace, SolveResult

# Cauchy pairs are taken among at most this many tail points.
_CAUCHY_WINDOW = 64


def _space_of(trace: IterationTrace, space: PartialMetricSpace | None = None) -> PartialMetricSpace:
    if space is not None:
        return space
    if trace.space is None:
        raise DomainError("the trace carries no space; pass one explicitly")
    return trace.space


def _repeat(u: Element, n: int) -> Packed:
    return pack([u] * n)


def descent_check(trace: IterationTrace, psi: ControlFunction, space: PartialMetricSpace | None = None) -> CertificateReport:
    """
    rho_n <= rho_(n-1) - psi(rho_(n-1)) for n >= 1, and rho non-increasing.

    Witnesses are the triples (x_(n-1), x_n, x_(n+1)); the first failing step
    index is noted.
    """
    space = _space_of(trace, space)
    ctx = CheckContext(space=space, psi=psi, eps_ax=space.eps_ax)
    points = trace.column()
    triples = (points[:-2], points[1:-1], points[2:])

    descent = run_check(CheckName.DESCENT, ctx, triples, vacuous=True)
    monotone = run_check(CheckName.DESCENT_MONOTONE, ctx, triples, vacuous=True)
    if descent.failed and (step := _first_descent_failure(trace, psi, space.eps_ax)) is not None:
        descent = replace(descent, notes=(*descent.notes, f"first violation at step n={step}"))
    return CertificateReport.of([descent, monotone])


def _first_descent_failure(trace: IterationTrace, psi: ControlFunction, eps_ax: float) -> int | None:
    rho = np.array(trace.rho)
    try:
        bound = rho[:-1] - psi.values(rho[:-1])
    except BatchEvaluationError as e:
        return e.index + 1
    steps = np.flatnonzero(rho[1:] > bound + eps_ax)
    return int(steps[0]) + 1 if steps.size else None


def first_confined_step(trace: IterationTrace, psi: ControlFunction, eps: float) -> int | None:
    """The first n with rho_n <= min(eps/2, psi(eps/2)), or None."""
    threshold = min(eps / 2, psi(eps / 2))
    return next((n for n, r in enumerate(trace.rho) if r <= threshold), None)


def orbit_confinement_check(
        trace: IterationTrace,
        space: PartialMetricSpace,
        psi: ControlFunction,
        eps: float,
) -> CertificateReport:
    """
    From the first n0 with rho_(n0) <= min(eps/2, psi(eps/2)) on, the orbit stays
    within eps of x_(n0) in p.
    """
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    n0 = first_confined_step(trace, psi, eps)
    if n0 is None:
        return CertificateReport.of([
            CheckResult.skipped(CheckName.ORBIT_CONFINEMENT, f"no step reaches rho <= min(eps/2, psi(eps/2)) for eps={eps:g}"),
        ])
    ctx = CheckContext(space=space, eps_ax=space.eps_ax, radius=eps)
    tail = trace.column(n0)
    result = run_check(
        CheckName.ORBIT_CONFINEMENT, ctx, (tail, _repeat(trace.points[n0], len(tail))),
        notes=(f"n0 = {n0}", f"eps = {eps:g}"),
    )
    return CertificateReport.of([result])


def limit_index(trace: IterationTrace, u: Element) -> int:
    """Last orbit index holding u, or the last index when u is not on the orbit."""
    return max((n for n, x in enumerate(trace.points) if x == u), default=len(trace.points) - 1)


def order_limit_check(
        trace: IterationTrace,
        order: PartialOrder,
        u: Element,
        space: PartialMetricSpace | None = None,
) -> CertificateReport:
    """
    x_n <= x_(n+1) along the orbit, and x_n <= u up to u itself.

    When u lies on the orbit, the points recorded after it (the confirming step
    f(u)) are left out of the limit check; otherwise every point is checked.
    """
    ctx = CheckContext(space=space, order=order)
    points = trace.column()
    stop = limit_index(trace, u) + 1
    return CertificateReport.of([
        run_check(CheckName.ORDER_CHAIN, ctx, (points[:-1], points[1:]), vacuous=True),
        run_check(CheckName.ORDER_LIMIT, ctx, (points[:stop], _repeat(u, stop))),
    ])


def convergence_tail_start(trace: IterationTrace, tol: float) -> int:
    """First step with rho_n <= tol; the last point when there is none."""
    return next((n for n, r in enumerate(trace.rho) if r <= tol), len(trace.points) - 1)


def convergence_check(
        trace: IterationTrace,
        space: PartialMetricSpace,
        u: Element,
        tol: float,
) -> CertificateReport:
    """
    Plain and proper convergence to u and the Cauchy property in p and in p^s,
    on the orbit tail from the first step with rho_n <= tol.
    """
    start = convergence_tail_start(trace, tol)
    tail = trace.column(start)
    limit = _repeat(u, len(tail))
    window = tail[-_CAUCHY_WINDOW:]
    index = np.indices((len(window),) * 2).reshape(2, -1)
    xn, xm = window[index[0]], window[index[1]]
    notes = (f"tail from n = {start}",)

    def within(radius: float) -> CheckContext:
        return CheckContext(space=space, eps_ax=space.eps_ax, radius=radius)

    return CertificateReport.of([
        run_check(CheckName.CONVERGENCE_PLAIN, within(2 * tol), (tail, limit), notes=notes),
        run_check(CheckName.CONVERGENCE_PROPER, within(4 * tol), (tail, limit), notes=notes),
        run_check(CheckName.CAUCHY_P, within(2 * tol), (xn, xm, _repeat(u, len(xn))), notes=notes),
        run_check(CheckName.CAUCHY_INDUCED, within(4 * tol), (xn, xm), notes=notes),
    ])


def diagnose(instance: ProblemInstance, result: SolveResult, eps: float | None = None) -> CertificateReport:
    """The trace checks that apply to a finished solve; the limit checks need a fixed point."""
    trace, space, psi = result.trace, instance.space, instance.control
    eps = get_settings().confinement_eps if eps is None else eps
    report = descent_check(trace, psi, space) + orbit_confinement_check(trace, space, psi, eps)
    if (u := result.fixed_point) is not None:
        report += order_limit_check(trace, instance.order, u, space)
        report += convergence_check(trace, space, u, instance.tol)
    return report
