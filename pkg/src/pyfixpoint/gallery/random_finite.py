"""
Seeded finite instances with a known answer.

The order ranks points into levels (i <= j iff i = j or level(i) < level(j)),
f sends a level to a representative of a level at or above it, nondecreasingly,
so f is monotone and x0 <= f(x0). Self distances are 0 at the fixed points of
f, and the distance table is repaired into p4 by repeated clamping.
"""
import numpy as np

from pyfixpoint.core.element import FiniteIndex, make_rng
from pyfixpoint.core.functions import ControlFunction, FiniteMap
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.order import FiniteOrder
from pyfixpoint.core.space import FiniteSpace
from pyfixpoint.expr import parse
from pyfixpoint.shared.types import DomainError

MAX_SIZE = 16


def _levels(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """A level per point and the representative point of each level."""
    count = int(rng.integers(1, n + 1))
    perm = rng.permutation(n)
    levels = np.empty(n, dtype=np.int64)
    levels[perm[:count]] = np.arange(count)
    levels[perm[count:]] = rng.integers(0, count, n - count)
    return levels, perm[:count]


def _climb(rng: np.random.Generator, count: int) -> np.ndarray:
    """Nondecreasing g on levels with g(l) >= l."""
    draws = np.array([rng.integers(level, count) for level in range(count)], dtype=np.int64)
    return np.maximum.accumulate(draws)


def clamp_to_p4(table: np.ndarray) -> np.ndarray:
    """
    Lower off-diagonal entries to min_z p(x,z) + p(z,y) - p(z,z) until nothing moves.

    Entries only decrease, so integer tables settle. Symmetry and p2 survive
    when every cross distance starts strictly above both self distances.
    """
    p = table.copy()
    diagonal = np.diag(p).copy()
    off = ~np.eye(len(p), dtype=np.bool_)
    while True:
        through = (p[:, :, None] + p[None, :, :] - diagonal[None, :, None]).min(axis=1)
        clamped = np.where(off, np.minimum(p, through), p)
        if np.array_equal(clamped, p):
            return p
        p = clamped


def random_finite_instance(n: int, seed: int) -> ProblemInstance:
    if not 1 <= n <= MAX_SIZE:
        raise DomainError(f"random instances have 1 to {MAX_SIZE} points, got {n}")
    rng = make_rng(seed, n)
    levels, reps = _levels(rng, n)
    climb = _climb(rng, len(reps))
    targets = [int(reps[climb[level]]) for level in levels]
    fixed = np.array([targets[i] == i for i in range(n)])

    self_dists = np.where(fixed, 0, rng.integers(0, 4, n))
    spread = rng.integers(1, 5, (n, n))
    spread = np.triu(spread, 1) + np.triu(spread, 1).T
    table = np.maximum(self_dists[:, None], self_dists[None, :]) + spread
    np.fill_diagonal(table, self_dists)
    table = clamp_to_p4(table)

    order = levels[:, None] < levels[None, :]
    np.fill_diagonal(order, True)
    return ProblemInstance(
        space=FiniteSpace(table.astype(np.float64), label=f"random-{n}-{seed}"),
        order=FiniteOrder(order, label="levels"),
        map=FiniteMap(targets, label="climb"),
        x0=FiniteIndex(int(reps[0])),
        psi=ControlFunction(parse("t / 2")),
        seed=seed,
        label=f"random-{n}-{seed}",
    )
