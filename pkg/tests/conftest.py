from pathlib import Path

import pytest

from pyfixpoint.core.element import FiniteIndex
from pyfixpoint.core.functions import ControlFunction, FiniteMap
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.order import FiniteOrder
from pyfixpoint.core.space import FiniteSpace
from pyfixpoint.expr import parse
from pyfixpoint.gallery.entries import GalleryEntry, antichain_identity, identity_quarter, paper_example

INSTANCES = Path(__file__).parents[1] / "instances"


@pytest.fixture
def max_half() -> GalleryEntry:
    return paper_example()


@pytest.fixture
def identity_entry() -> GalleryEntry:
    return identity_quarter()


@pytest.fixture
def antichain() -> GalleryEntry:
    return antichain_identity()


@pytest.fixture
def swap() -> ProblemInstance:
    """Two points with 0 <= 1 and f exchanging them: f is not monotone."""
    return ProblemInstance(
        space=FiniteSpace([[0, 1], [1, 0]], label="two points"),
        order=FiniteOrder.from_pairs(2, [(0, 1)]),
        map=FiniteMap([1, 0], label="swap"),
        x0=FiniteIndex(0),
        psi=ControlFunction(parse("t / 2")),
        label="swap",
    )


@pytest.fixture
def max_half_file() -> Path:
    return INSTANCES / "max_half.json"
