from typing import NamedTuple

from loguru import logger

from pyfixpoint.certify.report import CertificateReport
from pyfixpoint.core.element import Element
from pyfixpoint.core.functions import SelfMap
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.space import PartialMetricSpace
from pyfixpoint.shared.types import HypothesisError, SolveStatus
from pyfixpoint.solve.trace import IterationTrace, SolveResult

_PROGRESS_EVERY = 100_000
ACCEPTANCE_NOTE = "acceptance: rho_n, p(u,u) and p(u,fu) all within tol (proper-convergence style)"


class FixedPointCheck(NamedTuple):
    residual: float
    self_distance: float

    def holds(self, tol: float) -> bool:
        return self.residual <= tol and self.self_distance <= tol


def verify_fixed_point(space: PartialMetricSpace, f: SelfMap, u: Element) -> FixedPointCheck:
    """p(u, fu) and p(u, u). u counts as a fixed point when both are within tol."""
    _ = space.check_member(u)
    return FixedPointCheck(space.distance(u, f(u)), space.self_distance(u))


def picard_solve(instance: ProblemInstance, certificates: CertificateReport | None = None) -> SolveResult:
    """
    Iterate x_(n+1) = f(x_n) from x0.

    Stops when rho_n, p(x_n, x_n) and p(x_n, f x_n) are all within tol (interval
    carriers), or as soon as the orbit is stationary. A stationary point with
    self distance above tol is confirmed by one more step and reported as
    `stalled`, or `descent_violation` when the descent inequality already
    failed. Descent is watched on every step; a violation is logged and flagged
    but does not stop the run.

    Raises `HypothesisError` unless x0 <= f(x0).
    """
    space, f, order, psi = instance.space, instance.map, instance.order, instance.control
    tol, eps_ax = instance.tol, instance.eps_ax
    x = instance.x0
    nxt = f(x)
    if not order.leq(x, nxt):
        raise HypothesisError(f"start point {x} is not below its image {nxt}")

    points: list[Element] = [x]
    rho: list[float] = []
    self_dists: list[float] = [space.self_distance(x)]
    descent_step: int | None = None
    status: SolveStatus | None = None
    fixed: Element | None = None

    while len(rho) < instance.max_iter:
        n = len(rho)
        step = space.distance(nxt, x)
        if n >= 1 and descent_step is None and step > rho[-1] - psi(rho[-1]) + eps_ax:
            descent_step = n
            logger.warning("descent inequality fails at step {}: rho = {!r} after {!r}", n, step, rho[-1])
        rho.append(step)
        points.append(nxt)
        self_dists.append(space.self_distance(nxt))

        if nxt == x:
            if self_dists[n] <= tol:
                status, fixed = SolveStatus.FIXED_POINT_HIT, x
                break
            if n >= 1 and points[n - 1] == x:
                status = SolveStatus.STALLED if descent_step is None else SolveStatus.DESCENT_VIOLATION
                break
        elif not space.is_finite and step <= tol and self_dists[n] <= tol:
            status, fixed = SolveStatus.CONVERGED, x
            break

        if (n + 1) % _PROGRESS_EVERY == 0:
            logger.debug("iteration {}: rho = {!r}", n + 1, step)
        x, nxt = nxt, f(nxt)

    if status is None:
        status = SolveStatus.MAX_ITER_EXCEEDED if descent_step is None else SolveStatus.DESCENT_VIOLATION
        logger.debug("no fixed point within {} iterations", instance.max_iter)

    trace = IterationTrace(
        points=tuple(points),
        rho=tuple(rho),
        self_dists=tuple(self_dists),
        status=status,
        iterations_used=len(rho),
        descent_flagged=descent_step is not None,
        descent_step=descent_step,
        space=space,
    )
    check = verify_fixed_point(space, f, fixed if fixed is not None else points[-1])
    if fixed is not None and not check.holds(tol):
        fixed = None
    return SolveResult(
        trace=trace,
        fixed_point=fixed,
        residual=check.residual,
        self_distance_at_u=check.self_distance,
        certificates_consulted=certificates,
        notes=(ACCEPTANCE_NOTE,),
    )
