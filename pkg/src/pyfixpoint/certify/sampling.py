from collections.abc import Sequence
from dataclasses import dataclass
from typing import Self

import numpy as np

from pyfixpoint.core.element import Element, Packed, make_rng, pack, unpack
from pyfixpoint.core.space import FiniteSpace, PartialMetricSpace
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError

# Salts that keep the pair and triple streams independent of the element draw.
_PAIR_SALT = 1
_TRIPLE_SALT = 2


@dataclass(frozen=True)
class SampleSet:
    """
    The elements a certificate quantifies over.

    An exhaustive set holds every point of a finite carrier, and its pairs and
    triples are all n² and n³ tuples. Otherwise tuples are every combination of
    a leading block plus as many seeded random tuples as there are samples.
    """

    column: Packed
    seed: int = 0
    exhaustive: bool = False

    @classmethod
    def of(cls, elements: Sequence[Element], seed: int = 0, exhaustive: bool = False) -> Self:
        if not elements:
            raise DomainError("a sample set needs at least one element")
        return cls(pack(elements), seed, exhaustive)

    def __len__(self) -> int:
        return len(self.column)

    @property
    def elements(self) -> list[Element]:
        return unpack(self.column)

    def pairs(self) -> tuple[Packed, Packed]:
        a, b = self._tuples(2, get_settings().pair_block, _PAIR_SALT)
        return a, b

    def triples(self) -> tuple[Packed, Packed, Packed]:
        x, y, z = self._tuples(3, get_settings().triple_block, _TRIPLE_SALT)
        return x, y, z

    def _tuples(self, arity: int, block: int, salt: int) -> tuple[Packed, ...]:
        n = len(self.column)
        if self.exhaustive:
            index = np.indices((n,) * arity).reshape(arity, -1)
            return tuple(self.column[row] for row in index)
        lead = min(block, n)
        grid = np.indices((lead,) * arity).reshape(arity, -1)
        drawn = make_rng(self.seed, salt).integers(0, n, size=(arity, n))
        index = np.concatenate([grid, drawn], axis=1)
        return tuple(self.column[row] for row in index)


def as_sample_set(samples: "SampleSet | Sequence[Element]") -> SampleSet:
    if isinstance(samples, SampleSet):
        return samples
    return SampleSet.of(samples)


def draw_samples(space: PartialMetricSpace, count: int | None = None, seed: int | None = None) -> SampleSet:
    """
    Seeded samples of the carrier.

    Finite carriers up to `exhaustive_limit` points are taken whole, so every
    check over them is exhaustive.
    """
    settings = get_settings()
    count = settings.samples if count is None else count
    seed = settings.seed if seed is None else seed
    if count < 1:
        raise DomainError(f"sample count must be positive, got {count}")
    if isinstance(space, FiniteSpace) and space.size <= settings.exhaustive_limit:
        return SampleSet.of(space.elements(), seed, exhaustive=True)
    return SampleSet.of(space.sample(count, seed), seed)
