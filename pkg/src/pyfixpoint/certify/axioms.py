from collections.abc import Sequence

import numpy as np
from loguru import logger

from pyfixpoint.certify.checks import CheckContext, run_check
from pyfixpoint.certify.report import CertificateReport
from pyfixpoint.certify.sampling import SampleSet, as_sample_set
from pyfixpoint.core.element import BatchEvaluationError, Element
from pyfixpoint.core.order import PartialOrder, PredicateOrder
from pyfixpoint.core.space import PartialMetricSpace
from pyfixpoint.shared.consts import CheckName

_TOTAL_NOTE = "order is total on the sample"


def _notes(samples: SampleSet) -> tuple[str, ...]:
    return ("exhaustive",) if samples.exhaustive else ()


def certify_partial_metric(space: PartialMetricSpace, samples: SampleSet | Sequence[Element]) -> CertificateReport:
    """p1-p3 over sampled pairs and p4 over sampled triples."""
    samples = as_sample_set(samples)
    ctx = CheckContext(space=space, eps_ax=space.eps_ax)
    pairs, triples = samples.pairs(), samples.triples()
    notes = _notes(samples)
    logger.debug("certifying partial metric {} on {} samples", space.label, len(samples))
    return CertificateReport.of([
        run_check(CheckName.P1, ctx, pairs, exhaustive=samples.exhaustive, notes=notes),
        run_check(CheckName.P2, ctx, pairs, exhaustive=samples.exhaustive, notes=notes),
        run_check(CheckName.P3, ctx, pairs, exhaustive=samples.exhaustive, notes=notes),
        run_check(CheckName.P4, ctx, triples, exhaustive=samples.exhaustive, notes=notes),
    ])


def certify_induced_metric(space: PartialMetricSpace, samples: SampleSet | Sequence[Element]) -> CertificateReport:
    """The metric axioms for p^s = 2p(x,y) - p(x,x) - p(y,y) on the same kind of tuples."""
    samples = as_sample_set(samples)
    ctx = CheckContext(space=space, eps_ax=space.eps_ax)
    pairs, triples = samples.pairs(), samples.triples()
    notes = _notes(samples)
    return CertificateReport.of([
        run_check(CheckName.INDUCED_ZERO_SELF, ctx, (samples.column,), exhaustive=samples.exhaustive, notes=notes),
        run_check(CheckName.INDUCED_SYMMETRY, ctx, pairs, exhaustive=samples.exhaustive, notes=notes),
        run_check(CheckName.INDUCED_TRIANGLE, ctx, triples, exhaustive=samples.exhaustive, notes=notes),
        run_check(CheckName.INDUCED_SEPARATION, ctx, pairs, exhaustive=samples.exhaustive, notes=notes),
    ])


def certify_order(
        order: PartialOrder,
        samples: SampleSet | Sequence[Element],
        space: PartialMetricSpace | None = None,
) -> CertificateReport:
    """
    Reflexivity, antisymmetry and transitivity.

    Antisymmetry compares points with the identity rule of `space` when one is
    given. The report notes when every sampled pair is comparable.
    """
    samples = as_sample_set(samples)
    if space is not None:
        eps_ax = space.eps_ax
    elif isinstance(order, PredicateOrder):
        eps_ax = order.eps_ax
    else:
        eps_ax = 0.0
    ctx = CheckContext(space=space, order=order, eps_ax=eps_ax)
    pairs, triples = samples.pairs(), samples.triples()
    notes = _notes(samples)
    report = CertificateReport.of([
        run_check(CheckName.ORDER_REFLEXIVE, ctx, (samples.column,), exhaustive=samples.exhaustive, notes=notes),
        run_check(CheckName.ORDER_ANTISYMMETRIC, ctx, pairs, exhaustive=samples.exhaustive, notes=notes),
        run_check(CheckName.ORDER_TRANSITIVE, ctx, triples, exhaustive=samples.exhaustive, notes=notes),
    ])
    if is_total(order, samples):
        report = report + CertificateReport(notes=(_TOTAL_NOTE,))
    return report


def is_total(order: PartialOrder, samples: SampleSet | Sequence[Element]) -> bool:
    """Every sampled pair is comparable. False when the order cannot be evaluated on the sample."""
    a, b = as_sample_set(samples).pairs()
    try:
        return bool(np.all(order.comparable_array(a, b)))
    except BatchEvaluationError:
        return False
