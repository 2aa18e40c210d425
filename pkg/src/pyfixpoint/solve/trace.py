from dataclasses import dataclass, field

from pyfixpoint.certify.report import CertificateReport
from pyfixpoint.core.element import Element, Packed, pack
from pyfixpoint.core.space import PartialMetricSpace
from pyfixpoint.shared.types import SolveStatus


@dataclass(frozen=True)
class IterationTrace:
    """
    The Picard orbit x_0..x_N with rho_n = p(x_(n+1), x_n) and p(x_n, x_n).

    `space` is kept so diagnostics can recompute distances from the points.
    """

    points: tuple[Element, ...]
    rho: tuple[float, ...]
    self_dists: tuple[float, ...]
    status: SolveStatus
    iterations_used: int
    descent_flagged: bool = False
    descent_step: int | None = None
    space: PartialMetricSpace | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.points) != self.iterations_used + 1 or len(self.rho) != self.iterations_used:
            raise ValueError(
                f"trace of {self.iterations_used} iterations has {len(self.points)} points and {len(self.rho)} steps"
            )
        if len(self.self_dists) != len(self.points):
            raise ValueError("one self distance per point")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def last(self) -> Element:
        return self.points[-1]

    def column(self, start: int = 0, stop: int | None = None) -> Packed:
        return pack(self.points[start:stop])

    def rows(self) -> list[tuple[int, Element, float | None, float]]:
        """(n, x_n, rho_n, p(x_n, x_n)); rho is None on the last point."""
        return [
            (n, x, self.rho[n] if n < len(self.rho) else None, s)
            for n, (x, s) in enumerate(zip(self.points, self.self_dists, strict=True))
        ]


@dataclass(frozen=True)
class SolveResult:
    """
    A finished solve.

    `fixed_point` is set only when p(u, fu) and p(u, u) are both within tol;
    `residual` and `self_distance_at_u` then describe u. Without a fixed point
    they describe the last orbit point.
    """

    trace: IterationTrace
    fixed_point: Element | None
    residual: float
    self_distance_at_u: float
    certificates_consulted: CertificateReport | None = None
    notes: tuple[str, ...] = ()

    @property
    def status(self) -> SolveStatus:
        return self.trace.status

    @property
    def converged(self) -> bool:
        return self.fixed_point is not None
