import asyncio
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from loguru import logger

from pyfixpoint.certify.checks import CheckContext, run_check
from pyfixpoint.certify.hypotheses import certify_comparability_hypothesis
from pyfixpoint.certify.report import CertificateReport, CheckResult
from pyfixpoint.certify.sampling import draw_samples
from pyfixpoint.core.element import Element, pack
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.types import CheckStatus, DomainError, HypothesisError
from pyfixpoint.solve.picard import picard_solve
from pyfixpoint.solve.trace import SolveResult


@dataclass(frozen=True)
class StartOutcome:
    """One start of a multi-start run: its result, or why it was skipped."""

    start: Element
    result: SolveResult | None = None
    skipped: str | None = None


async def _solve_from(instance: ProblemInstance, start: Element) -> StartOutcome:
    try:
        moved = instance.with_overrides(x0=start)
        return StartOutcome(start, await asyncio.to_thread(picard_solve, moved))
    except (HypothesisError, DomainError) as e:
        logger.warning("skipping start {}: {}", start, e)
        return StartOutcome(start, skipped=str(e))


async def solve_many(instance: ProblemInstance, starts: Sequence[Element]) -> list[StartOutcome]:
    """Solve from every start concurrently; outcomes keep the order of `starts`."""
    return list(await asyncio.gather(*(_solve_from(instance, s) for s in starts)))


def distinct_fixed_points(outcomes: Sequence[StartOutcome], instance: ProblemInstance) -> list[Element]:
    found: list[Element] = []
    for outcome in outcomes:
        u = outcome.result.fixed_point if outcome.result is not None else None
        if u is not None and not any(instance.space.same_point(u, v) for v in found):
            found.append(u)
    return found


def uniqueness_cross_check(
        instance: ProblemInstance,
        starts: Sequence[Element],
        comparability: CertificateReport | None = None,
) -> tuple[CertificateReport, list[StartOutcome]]:
    """
    Solve from every start and require the fixed points to coincide.

    Needs the comparability hypothesis; when its certificate fails the check is
    skipped as not applicable, and the distinct fixed points that were found
    are listed as evidence. Starts with x0 not below f(x0) are skipped.
    """
    if comparability is None:
        sample = draw_samples(instance.space, instance.sample_count, instance.seed)
        comparability = certify_comparability_hypothesis(instance.order, sample)
    outcomes = asyncio.run(solve_many(instance, starts))
    notes = tuple(f"start {o.start} skipped: {o.skipped}" for o in outcomes if o.skipped is not None)
    notes += tuple(
        f"start {o.start} reached no fixed point ({o.result.status})"
        for o in outcomes if o.result is not None and o.result.fixed_point is None
    )
    fixed = [o.result.fixed_point for o in outcomes if o.result is not None and o.result.fixed_point is not None]

    if comparability.status(CheckName.COMPARABILITY) is not CheckStatus.PASS:
        evidence = distinct_fixed_points(outcomes, instance)
        reason = "not applicable: the comparability hypothesis failed"
        if len(evidence) > 1:
            notes += (f"distinct fixed points: {', '.join(str(u) for u in evidence)}",)
        skipped = CheckResult(CheckName.UNIQUENESS, CheckStatus.SKIPPED, len(fixed), notes=(reason, *notes))
        return CertificateReport.of([skipped]), outcomes

    ctx = CheckContext(space=instance.space, eps_ax=instance.eps_ax, radius=instance.tol)
    pairs = list(combinations(fixed, 2))
    columns = (pack([u for u, _ in pairs]), pack([v for _, v in pairs]))
    return CertificateReport.of([
        run_check(CheckName.UNIQUENESS, ctx, columns, notes=notes, vacuous=True),
    ]), outcomes
