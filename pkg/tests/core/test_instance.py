from dataclasses import replace

import pytest

from pyfixpoint.certify.checks import CheckContext
from pyfixpoint.core import ControlFunction, FiniteIndex, FiniteMap, FiniteOrder, FiniteSpace, ProblemInstance, Scalar
from pyfixpoint.expr import parse
from pyfixpoint.gallery.entries import GalleryEntry
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError


def _finite(**changes: object) -> ProblemInstance:
    parts: dict[str, object] = dict(
        space=FiniteSpace([[0, 1], [1, 0]]),
        order=FiniteOrder.discrete(2),
        map=FiniteMap.identity(2),
        x0=FiniteIndex(0),
        psi=ControlFunction(parse("t / 2")),
    )
    return ProblemInstance(**{**parts, **changes})  # pyright: ignore[reportArgumentType]


def test_defaults_come_from_settings() -> None:
    instance = _finite()
    settings = get_settings()
    assert instance.tol == settings.tol
    assert instance.max_iter == settings.max_iter
    assert instance.sample_count == settings.samples
    assert instance.label == "finite"


@pytest.mark.parametrize(
    "changes",
    [
        pytest.param({"psi": None}, id="no_control"),
        pytest.param({"banach_c": 1.0}, id="banach_constant_one"),
        pytest.param({"tol": 0.0}, id="zero_tol"),
        pytest.param({"max_iter": 0}, id="zero_max_iter"),
        pytest.param({"x0": FiniteIndex(5)}, id="start_outside_carrier"),
        pytest.param({"x0": Scalar(0.0)}, id="start_of_wrong_kind"),
        pytest.param({"map": FiniteMap.identity(3)}, id="map_size_mismatch"),
        pytest.param({"order": FiniteOrder.discrete(3)}, id="order_size_mismatch"),
    ],
)
def test_rejects(changes: dict[str, object]) -> None:
    with pytest.raises(DomainError):
        _ = _finite(**changes)


def test_control_falls_back_to_banach() -> None:
    instance = _finite(psi=None, banach_c=0.25)
    assert instance.control(4.0) == 3.0


def test_psi_wins_over_banach() -> None:
    instance = _finite(banach_c=0.25)
    assert instance.control(4.0) == 2.0


def test_with_overrides_ignores_none(max_half: GalleryEntry) -> None:
    instance = max_half.instance
    moved = instance.with_overrides(seed=7, tol=None, max_iter=3)
    assert moved.seed == 7
    assert moved.tol == instance.tol
    assert moved.max_iter == 3
    assert replace(instance, seed=7, max_iter=3) == moved


def test_slack_follows_the_space() -> None:
    instance = _finite(space=FiniteSpace([[0, 1], [1, 0]], eps_ax=1e-3))
    assert instance.eps_ax == 1e-3
    assert CheckContext.of(instance).eps_ax == 1e-3
    assert _finite().eps_ax == get_settings().eps_ax
