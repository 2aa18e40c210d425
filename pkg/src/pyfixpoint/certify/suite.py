from loguru import logger

from pyfixpoint.certify.axioms import certify_induced_metric, certify_order, certify_partial_metric
from pyfixpoint.certify.continuity import default_test_sequences, probe_sequential_continuity
from pyfixpoint.certify.hypotheses import (
    certify_banach,
    certify_comparability_hypothesis,
    certify_control_function,
    certify_map_in_carrier,
    certify_monotone,
    certify_start,
    certify_weak_contraction,
)
from pyfixpoint.certify.report import CertificateReport
from pyfixpoint.certify.sampling import draw_samples
from pyfixpoint.core.instance import ProblemInstance


def certify_instance(instance: ProblemInstance, seed: int | None = None, samples: int | None = None) -> CertificateReport:
    """
    Every certificate that applies to the instance, in a fixed order.

    With psi given, the psi probes and the weak-contraction check run; with a
    Banach constant, the Banach check runs and the probes use (1 - c) t. Both
    run when both are given. `seed` and `samples` override the instance's.
    """
    seed = instance.seed if seed is None else seed
    count = instance.sample_count if samples is None else samples
    sample = draw_samples(instance.space, count, seed)
    space, order, f = instance.space, instance.order, instance.map
    logger.debug("certifying {} with seed {} on {} samples", instance.label, seed, len(sample))

    report = (
            certify_partial_metric(space, sample)
            + certify_induced_metric(space, sample)
            + certify_order(order, sample, space)
            + certify_control_function(instance.control)
            + certify_map_in_carrier(space, f, sample)
            + certify_monotone(f, order, sample)
    )
    if instance.psi is not None:
        report += certify_weak_contraction(space, order, f, instance.psi, sample)
    if instance.banach_c is not None:
        report += certify_banach(space, order, f, instance.banach_c, sample)
    report += certify_comparability_hypothesis(order, sample)
    report += certify_start(order, f, instance.x0)

    sequences = default_test_sequences(space, sample.elements, seed=seed)
    report += probe_sequential_continuity(space, f, sequences)

    if failed := report.failed_checks:
        logger.debug("{} failed: {}", instance.label, ", ".join(c.name for c in failed))
    return report.with_run(seed, count)
