from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from pyfixpoint.certify.checks import CheckContext, run_check
from pyfixpoint.certify.report import CertificateReport
from pyfixpoint.core.element import Element, FiniteIndex, Packed, Scalar, make_rng, pack
from pyfixpoint.core.functions import SelfMap
from pyfixpoint.core.space import FiniteSpace, PartialMetricSpace
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError

_PROBE_NOTE = "probe on finite prefixes, not a proof"


@dataclass(frozen=True)
class TestSequence:
    """A finite prefix x_1..x_K of a sequence together with its declared limit."""

    __test__ = False  # not a pytest class

    points: tuple[Element, ...]
    limit: Element

    def __post_init__(self) -> None:
        if not self.points:
            raise DomainError("a test sequence needs at least one point")

    def tail(self) -> tuple[Packed, Packed]:
        """The second half of the prefix, paired with the limit."""
        tail = self.points[len(self.points) // 2:]
        return pack(tail), pack([self.limit] * len(tail))


def default_test_sequences(
        space: PartialMetricSpace,
        samples: Sequence[Element],
        length: int | None = None,
        count: int | None = None,
        seed: int | None = None,
) -> list[TestSequence]:
    """
    Sequences converging to the first `count` samples.

    On interval carriers x_n = x* + 1/n, which stays in the carrier. On finite
    carriers the sequences wander for a random prefix and then stay at x*.
    """
    settings = get_settings()
    length = settings.sequence_length if length is None else length
    count = settings.probe_sequences if count is None else count
    if length < 1:
        raise DomainError(f"sequence length must be positive, got {length}")
    limits = list(samples)[:count]

    if isinstance(space, FiniteSpace):
        rng = make_rng(settings.seed if seed is None else seed, length)
        sequences = []
        for limit in limits:
            wander = int(rng.integers(0, length // 2 + 1))
            prefix = [FiniteIndex(int(i)) for i in rng.integers(0, space.size, wander)]
            sequences.append(TestSequence((*prefix, *[limit] * (length - wander)), limit))
        return sequences

    steps = 1.0 / np.arange(1, length + 1, dtype=np.float64)
    return [
        TestSequence(tuple(Scalar(float(v)) for v in limit.value + steps), limit)  # pyright: ignore[reportAttributeAccessIssue]
        for limit in limits
    ]


def probe_sequential_continuity(
        space: PartialMetricSpace,
        f: SelfMap,
        test_sequences: Sequence[TestSequence],
        tol: float | None = None,
) -> CertificateReport:
    """
    Sequential continuity of f on test sequences, in p and in p^s.

    On the tail of each prefix: wherever x_n is within `tol` of converging to
    x*, f x_n must be within `tol` of converging to f x*.
    """
    if not test_sequences:
        raise DomainError("the continuity probe needs at least one test sequence")
    tol = get_settings().continuity_tol if tol is None else tol
    tails = [s.tail() for s in test_sequences]
    columns = (np.concatenate([t[0] for t in tails]), np.concatenate([t[1] for t in tails]))
    ctx = CheckContext(space=space, map=f, eps_ax=space.eps_ax, radius=tol)
    notes = (_PROBE_NOTE, f"{len(test_sequences)} sequences, tolerance {tol:g}")
    return CertificateReport.of([
        run_check(CheckName.CONTINUITY_P, ctx, columns, notes=notes),
        run_check(CheckName.CONTINUITY_PROPER, ctx, columns, notes=notes),
    ])
