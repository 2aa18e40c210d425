from typing import TYPE_CHECKING

from pyfixpoint.core.element import Element, FiniteIndex
from pyfixpoint.core.functions import FiniteMap
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.shared.types import DomainError

if TYPE_CHECKING:
    from pyfixpoint.gallery.entries import GalleryEntry


def brute_force_orbit(instance: ProblemInstance) -> Element | None:
    """
    Follow the map table from x0 until a point repeats.

    Returns that point when the orbit ends in a fixed point, None when it
    ends in a longer cycle.
    """
    if not isinstance(instance.map, FiniteMap) or not isinstance(instance.x0, FiniteIndex):
        raise DomainError("orbit enumeration needs a finite instance")
    table = instance.map.table
    seen: set[int] = set()
    i = instance.x0.index
    while i not in seen:
        seen.add(i)
        i = table[i]
    return FiniteIndex(i) if table[i] == i else None


def brute_force_fixed_point(entry: "GalleryEntry") -> Element | None:
    return brute_force_orbit(entry.instance)
