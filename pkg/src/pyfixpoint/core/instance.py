from dataclasses import dataclass, field, replace
from typing import Self

from pyfixpoint.core.element import Element
from pyfixpoint.core.functions import ControlFunction, FiniteMap, ScalarMap, SelfMap
from pyfixpoint.core.order import FiniteOrder, PartialOrder, PredicateOrder
from pyfixpoint.core.space import FiniteSpace, IntervalSpace, PartialMetricSpace
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError


def _default_tol() -> float:
    return get_settings().tol


def _default_max_iter() -> int:
    return get_settings().max_iter


def _default_samples() -> int:
    return get_settings().samples


def _default_seed() -> int:
    return get_settings().seed


@dataclass(frozen=True)
class ProblemInstance:
    """
    Everything a certificate or a solve needs.

    At least one of `psi` / `banach_c` is required; with both, both the
    weak-contraction and the Banach certificates run.
    """

    space: PartialMetricSpace
    order: PartialOrder
    map: SelfMap
    x0: Element
    psi: ControlFunction | None = None
    banach_c: float | None = None
    tol: float = field(default_factory=_default_tol)
    max_iter: int = field(default_factory=_default_max_iter)
    sample_count: int = field(default_factory=_default_samples)
    seed: int = field(default_factory=_default_seed)
    label: str = ""

    def __post_init__(self) -> None:
        if self.psi is None and self.banach_c is None:
            raise DomainError("an instance needs psi, banach_c, or both")
        if self.banach_c is not None and not 0 <= self.banach_c < 1:
            raise DomainError(f"Banach constant must lie in [0, 1), got {self.banach_c}")
        if self.tol <= 0:
            raise DomainError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be positive, got {self.max_iter}")
        if self.sample_count < 1:
            raise DomainError(f"sample count must be positive, got {self.sample_count}")
        self._check_kinds()
        _ = self.space.check_member(self.x0)
        if not self.label:
            object.__setattr__(self, "label", self.space.label)

    def _check_kinds(self) -> None:
        match self.space:
            case FiniteSpace(size=n):
                if not isinstance(self.order, FiniteOrder) or self.order.size != n:
                    raise DomainError(f"a finite space of size {n} needs a finite order of the same size")
                if not isinstance(self.map, FiniteMap) or self.map.size != n:
                    raise DomainError(f"a finite space of size {n} needs a map table of length {n}")
            case IntervalSpace():
                if not isinstance(self.order, PredicateOrder):
                    raise DomainError("an interval space needs a predicate order")
                if not isinstance(self.map, ScalarMap):
                    raise DomainError("an interval space needs an expression map")

    @property
    def eps_ax(self) -> float:
        """The slack of the space, shared by the certificates and the solver."""
        return self.space.eps_ax

    @property
    def control(self) -> ControlFunction:
        """psi when given, otherwise the control function (1 - c) t of the Banach constant."""
        if self.psi is not None:
            return self.psi
        assert self.banach_c is not None
        return ControlFunction.from_banach(self.banach_c)

    def with_overrides(self, **changes: object) -> Self:
        """Copy with some fields replaced; `None` values are ignored."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})  # pyright: ignore[reportArgumentType]
