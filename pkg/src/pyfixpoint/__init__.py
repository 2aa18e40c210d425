import logging
import sys

from loguru import logger

# Remove the default Loguru handler (which is set to DEBUG by default)
logger.remove()

# Boot handler: simple format, INFO only. The CLI replaces it with its own sinks.
_ = logger.add(
    sys.stderr,
    format="<green>{time:HH:mm:ss}</green> | <level>{message}</level>",
    level=logging.INFO
)

from pyfixpoint.certify import CertificateReport, CheckResult, Violation, certify_instance, replay_violation  # noqa: E402
from pyfixpoint.certify.counterexample import search_counterexample  # noqa: E402
from pyfixpoint.core import ControlFunction, FiniteIndex, ProblemInstance, Scalar  # noqa: E402
from pyfixpoint.documents import export_instance, load_instance  # noqa: E402
from pyfixpoint.gallery import lookup  # noqa: E402
from pyfixpoint.solve import SolveResult, picard_solve, uniqueness_cross_check  # noqa: E402

__all__ = [
    "CertificateReport",
    "CheckResult",
    "ControlFunction",
    "FiniteIndex",
    "ProblemInstance",
    "Scalar",
    "SolveResult",
    "Violation",
    "certify_instance",
    "export_instance",
    "load_instance",
    "lookup",
    "picard_solve",
    "replay_violation",
    "search_counterexample",
    "uniqueness_cross_check",
]
