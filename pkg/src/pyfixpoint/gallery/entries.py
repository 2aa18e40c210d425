import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Final

import numpy as np

from pyfixpoint.core.element import Element, FiniteIndex, Scalar
from pyfixpoint.core.functions import ControlFunction, FiniteMap, ScalarMap
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.order import FiniteOrder, PredicateOrder
from pyfixpoint.core.space import FiniteSpace, IntervalSpace, PartialMetricSpace
from pyfixpoint.expr import Expr, evaluate_array, parse
from pyfixpoint.gallery.oracle import brute_force_orbit
from pyfixpoint.gallery.random_finite import random_finite_instance
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError, Relation, TableValidationError, UnknownNameError
from pyfixpoint.solve.trace import SolveResult

# Expected points match when p^s(u, expected) stays within this many tol.
_MATCH_SLACK: Final[float] = 4.0
_RANDOM_NAME = re.compile(r"random-(\d+)-(\d+)")


@dataclass(frozen=True)
class Expected:
    point: Element
    self_distance: float


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    instance: ProblemInstance
    expected: Expected | None = None
    notes: str = ""
    negative: bool = False

    def matches(self, result: SolveResult) -> bool:
        """
        The solve reached the expected fixed point and self distance, within the
        instance tolerance. An entry expecting no fixed point matches a solve that found none.
        """
        if self.expected is None:
            return result.fixed_point is None
        if result.fixed_point is None:
            return False
        space, tol = self.instance.space, self.instance.tol
        gap = space.induced_distance(result.fixed_point, self.expected.point)
        return gap <= _MATCH_SLACK * tol and abs(result.self_distance_at_u - self.expected.self_distance) <= tol


def metric_embedding(
        metric: Sequence[Sequence[float]] | Expr,
        label: str = "metric",
        lower: float = 0.0,
        upper: float | None = None,
) -> PartialMetricSpace:
    """
    An ordinary metric d as the partial metric p = d, whose self distances are all 0.

    A table must have a zero diagonal. An expression is probed for d(x, x) = 0
    on seeded points of [lower, upper].
    """
    if isinstance(metric, Sequence):
        table = np.array(metric, dtype=np.float64)
        if table.ndim == 2 and table.shape[0] == table.shape[1] and np.any(nonzero := np.diag(table) != 0):
            i = int(np.flatnonzero(nonzero)[0])
            raise TableValidationError("a metric has zero self distances", (i, i))
        return FiniteSpace(table, label=label)

    upper = get_settings().interval_upper if upper is None else upper
    space = IntervalSpace(lower, upper, metric, label=label)
    probes = np.array([s.value for s in space.sample(32, get_settings().seed)])  # pyright: ignore[reportAttributeAccessIssue]
    diagonal = evaluate_array(metric, {"x": probes, "y": probes})
    if not np.all(diagonal == 0):
        bad = probes[int(np.flatnonzero(diagonal != 0)[0])]
        raise DomainError(f"a metric has zero self distances, but d({bad!r}, {bad!r}) != 0")
    return space


def paper_example() -> GalleryEntry:
    """p(x, y) = max(x, y) on [0, inf), x <= y iff x = max(x, y), f(t) = t/2, psi(t) = t/4."""
    max_metric = parse("max(x, y)")
    instance = ProblemInstance(
        space=IntervalSpace(0.0, get_settings().interval_upper, max_metric, label="max metric"),
        order=PredicateOrder(parse("x"), Relation.EQ, max_metric, label="x = max(x, y)"),
        map=ScalarMap(parse("t / 2"), label="halving"),
        x0=Scalar(1.0),
        psi=ControlFunction(parse("t / 4")),
        label="max-half",
    )
    return GalleryEntry(
        "max-half", instance, Expected(Scalar(0.0), 0.0),
        "the max partial metric on [0, inf), totally ordered by x = max(x, y); unique fixed point 0",
    )


def abs_half() -> GalleryEntry:
    instance = ProblemInstance(
        space=metric_embedding(parse("abs(x - y)"), label="absolute value metric"),
        order=PredicateOrder(parse("x"), Relation.GEQ, parse("y"), label="x >= y"),
        map=ScalarMap(parse("t / 2"), label="halving"),
        x0=Scalar(1.0),
        banach_c=0.5,
        label="abs-half",
    )
    return GalleryEntry(
        "abs-half", instance, Expected(Scalar(0.0), 0.0),
        "an ordinary metric as a partial metric with zero self distances; Banach constant 1/2",
    )


def chain_constant() -> GalleryEntry:
    instance = ProblemInstance(
        space=FiniteSpace([[0, 1], [1, 1]], label="two-point chain"),
        order=FiniteOrder.from_pairs(2, [(1, 0)], label="1 <= 0"),
        map=FiniteMap([0, 0], label="constant 0"),
        x0=FiniteIndex(1),
        psi=ControlFunction(parse("t / 2")),
        label="chain-constant",
    )
    return GalleryEntry(
        "chain-constant", instance, Expected(FiniteIndex(0), 0.0),
        "orbit 1, 0, 0, ...; p(1, 1) = 1 is allowed, the fixed point has self distance 0",
    )


def antichain_identity() -> GalleryEntry:
    instance = ProblemInstance(
        space=FiniteSpace([[0, 1], [1, 0]], label="two points"),
        order=FiniteOrder.discrete(2),
        map=FiniteMap.identity(2),
        x0=FiniteIndex(0),
        psi=ControlFunction(parse("t / 2")),
        label="antichain-identity",
    )
    return GalleryEntry(
        "antichain-identity", instance, Expected(FiniteIndex(0), 0.0),
        "existence holds but both points are fixed: no common comparable point, no uniqueness",
    )


def identity_quarter() -> GalleryEntry:
    """The max-half setting with f the identity: weak contraction fails wherever p > 0."""
    base = paper_example().instance
    instance = ProblemInstance(
        space=base.space,
        order=base.order,
        map=ScalarMap(parse("t"), label="identity"),
        x0=Scalar(1.0),
        psi=base.psi,
        label="identity-quarter",
    )
    return GalleryEntry(
        "identity-quarter", instance, None,
        "negative case: p(fx, fy) = p(x, y) > p(x, y) - psi(p(x, y))", negative=True,
    )


def random_entry(n: int, seed: int) -> GalleryEntry:
    instance = random_finite_instance(n, seed)
    u = brute_force_orbit(instance)
    expected = Expected(u, instance.space.self_distance(u)) if u is not None else None
    return GalleryEntry(instance.label, instance, expected, "seeded finite instance; expected point from orbit enumeration")


ENTRIES: Final[dict[str, Callable[[], GalleryEntry]]] = {
    "max-half": paper_example,
    "abs-half": abs_half,
    "chain-constant": chain_constant,
    "antichain-identity": antichain_identity,
    "identity-quarter": identity_quarter,
}


def entry_names() -> list[str]:
    return list(ENTRIES)


def lookup(name: str) -> GalleryEntry:
    """A shipped entry, or `random-<n>-<seed>` for a generated one."""
    if factory := ENTRIES.get(name):
        return factory()
    if match := _RANDOM_NAME.fullmatch(name):
        return random_entry(int(match[1]), int(match[2]))
    raise UnknownNameError(f"no gallery entry named {name!r}; try one of {', '.join(ENTRIES)} or random-<n>-<seed>")
