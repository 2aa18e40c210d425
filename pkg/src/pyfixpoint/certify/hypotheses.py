"""Certifiers for the hypotheses on psi, on f and on the order."""
from collections.abc import Sequence

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from pyfixpoint.certify.checks import CheckContext, run_check
from pyfixpoint.certify.report import CertificateReport, CheckResult
from pyfixpoint.certify.sampling import SampleSet, as_sample_set
from pyfixpoint.core.element import BatchEvaluationError, Element, Packed, pack
from pyfixpoint.core.functions import ControlFunction, SelfMap
from pyfixpoint.core.order import PartialOrder
from pyfixpoint.core.space import PartialMetricSpace
from pyfixpoint.shared.consts import NEAR_ZERO_PROBES, CheckName
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import CheckStatus

_CONTINUITY_ASSUMED = "assumed: continuity cannot be certified by finite evaluation"


def control_grid(growth_bound: float) -> NDArray[np.float64]:
    """0, the near-zero probes, then 1, 2, 4, ... up to and including the growth bound."""
    ladder = [1.0]
    while ladder[-1] * 2 < growth_bound:
        ladder.append(ladder[-1] * 2)
    return np.unique(np.array([0.0, *NEAR_ZERO_PROBES, *ladder, growth_bound], dtype=np.float64))


def certify_control_function(psi: ControlFunction, grid: Sequence[float] | None = None) -> CertificateReport:
    """
    psi(0) = 0, positivity and monotonicity on the grid, and the growth probe
    psi(G) >= threshold. Continuity is reported as assumed.
    """
    t = control_grid(psi.growth_bound) if grid is None else np.unique(np.asarray(grid, dtype=np.float64))
    ctx = CheckContext(psi=psi)
    positive = t[t > 0]
    growth = run_check(
        CheckName.PSI_GROWTH, ctx, (np.array([psi.growth_bound]),),
        notes=(f"probe: psi({psi.growth_bound:g}) >= {psi.growth_threshold:g}, not a proof of unboundedness",),
    )
    return CertificateReport.of([
        run_check(CheckName.PSI_ZERO, ctx, (np.zeros(1),)),
        run_check(CheckName.PSI_POSITIVE, ctx, (positive,)),
        run_check(CheckName.PSI_NONDECREASING, ctx, (t[:-1], t[1:]), vacuous=True),
        growth,
        CheckResult.skipped(CheckName.PSI_CONTINUITY, _CONTINUITY_ASSUMED),
    ])


def psi_from_c(c: float) -> ControlFunction:
    """The control function (1 - c) t of a Banach constant c in [0, 1)."""
    return ControlFunction.from_banach(c)


def certify_map_in_carrier(space: PartialMetricSpace, f: SelfMap, samples: SampleSet | Sequence[Element]) -> CertificateReport:
    samples = as_sample_set(samples)
    ctx = CheckContext(space=space, map=f, eps_ax=space.eps_ax)
    notes = ("exhaustive",) if samples.exhaustive else ()
    return CertificateReport.of([
        run_check(CheckName.MAP_IN_CARRIER, ctx, (samples.column,), exhaustive=samples.exhaustive, notes=notes),
    ])


def certify_monotone(f: SelfMap, order: PartialOrder, samples: SampleSet | Sequence[Element]) -> CertificateReport:
    """a <= b implies f(a) <= f(b) over sampled pairs."""
    samples = as_sample_set(samples)
    ctx = CheckContext(order=order, map=f)
    notes = ("exhaustive",) if samples.exhaustive else ()
    return CertificateReport.of([
        run_check(CheckName.MAP_MONOTONE, ctx, samples.pairs(), exhaustive=samples.exhaustive, notes=notes),
    ])


def _comparable_pairs(ctx: CheckContext, samples: SampleSet) -> tuple[tuple[Packed, Packed], tuple[str, ...]]:
    """Sampled pairs reduced to the comparable ones, with a coverage note."""
    a, b = samples.pairs()
    try:
        keep = ctx.le.comparable_array(a, b)
    except BatchEvaluationError:
        # Let the check itself report the failing pair.
        return (a, b), ()
    total, kept = len(a), int(np.count_nonzero(keep))
    notes = [f"{kept} of {total} sampled pairs comparable"]
    if samples.exhaustive:
        notes.insert(0, "exhaustive")
    if kept < get_settings().comparable_coverage_warn * total:
        logger.warning("only {} of {} sampled pairs are comparable; contraction coverage is low", kept, total)
        notes.append("low comparable-pair coverage")
    return (a[keep], b[keep]), tuple(notes)


def certify_weak_contraction(
        space: PartialMetricSpace,
        order: PartialOrder,
        f: SelfMap,
        psi: ControlFunction,
        samples: SampleSet | Sequence[Element],
) -> CertificateReport:
    """p(fa, fb) <= p(a, b) - psi(p(a, b)) on every comparable sampled pair."""
    samples = as_sample_set(samples)
    ctx = CheckContext(space=space, order=order, map=f, psi=psi, eps_ax=space.eps_ax)
    pairs, notes = _comparable_pairs(ctx, samples)
    return CertificateReport.of([
        run_check(CheckName.WEAK_CONTRACTION, ctx, pairs, exhaustive=samples.exhaustive, notes=notes),
    ])


def certify_banach(
        space: PartialMetricSpace,
        order: PartialOrder,
        f: SelfMap,
        c: float,
        samples: SampleSet | Sequence[Element],
) -> CertificateReport:
    """p(fa, fb) <= c p(a, b) on every comparable sampled pair."""
    _ = psi_from_c(c)
    samples = as_sample_set(samples)
    ctx = CheckContext(space=space, order=order, map=f, banach_c=c, eps_ax=space.eps_ax)
    pairs, notes = _comparable_pairs(ctx, samples)
    return CertificateReport.of([
        run_check(CheckName.BANACH, ctx, pairs, exhaustive=samples.exhaustive, notes=notes),
    ])


def certify_comparability_hypothesis(
        order: PartialOrder,
        samples: SampleSet | Sequence[Element],
) -> CertificateReport:
    """
    For each sampled pair (a, b) look for z comparable with both.

    Candidates are a, b and the first `candidate_pool` samples. A pair fails
    only when it is incomparable and no candidate links it.
    """
    samples = as_sample_set(samples)
    ctx = CheckContext(order=order)
    a, b = samples.pairs()
    pool = samples.column[: get_settings().candidate_pool]
    notes = (f"z searched among a, b and {len(pool)} samples",)
    if samples.exhaustive:
        notes = ("exhaustive", *notes)

    try:
        open_pairs = ~order.comparable_array(a, b)
        a_open, b_open = a[open_pairs], b[open_pairs]
        m, k = len(a_open), len(pool)
        zs = np.tile(pool, m)
        linked = order.comparable_array(zs, np.repeat(a_open, k)) & order.comparable_array(zs, np.repeat(b_open, k))
        unlinked = ~linked.reshape(m, k).any(axis=1)
    except BatchEvaluationError:
        return CertificateReport.of([run_check(CheckName.COMPARABILITY, ctx, (a, b), notes=notes)])

    if not unlinked.any():
        return CertificateReport.of([
            CheckResult(CheckName.COMPARABILITY, CheckStatus.PASS, len(a), exhaustive=samples.exhaustive, notes=notes),
        ])
    return CertificateReport.of([
        run_check(
            CheckName.COMPARABILITY, ctx, (a_open[unlinked], b_open[unlinked]),
            exhaustive=samples.exhaustive, notes=notes, samples_used=len(a),
        ),
    ])


def certify_start(order: PartialOrder, f: SelfMap, x0: Element) -> CertificateReport:
    """x0 <= f(x0)."""
    return CertificateReport.of([
        run_check(CheckName.START_BELOW_IMAGE, CheckContext(order=order, map=f), (pack([x0]),)),
    ])
