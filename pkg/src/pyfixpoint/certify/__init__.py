from pyfixpoint.certify.axioms import certify_induced_metric, certify_order, certify_partial_metric, is_total
from pyfixpoint.certify.checks import CHECKS, CheckContext, get_check, replay_violation, run_check
from pyfixpoint.certify.continuity import TestSequence, default_test_sequences, probe_sequential_continuity
from pyfixpoint.certify.hypotheses import (
    certify_banach,
    certify_comparability_hypothesis,
    certify_control_function,
    certify_map_in_carrier,
    certify_monotone,
    certify_start,
    certify_weak_contraction,
    control_grid,
    psi_from_c,
)
from pyfixpoint.certify.report import CertificateReport, CheckResult, Violation
from pyfixpoint.certify.sampling import SampleSet, draw_samples
from pyfixpoint.certify.suite import certify_instance

__all__ = [
    "CHECKS",
    "CertificateReport",
    "CheckContext",
    "CheckResult",
    "SampleSet",
    "TestSequence",
    "Violation",
    "certify_banach",
    "certify_comparability_hypothesis",
    "certify_control_function",
    "certify_induced_metric",
    "certify_instance",
    "certify_map_in_carrier",
    "certify_monotone",
    "certify_order",
    "certify_partial_metric",
    "certify_start",
    "certify_weak_contraction",
    "control_grid",
    "default_test_sequences",
    "draw_samples",
    "get_check",
    "is_total",
    "probe_sequential_continuity",
    "psi_from_c",
    "replay_violation",
    "run_check",
]
