import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pyfixpoint.certify import (
    certify_banach,
    certify_comparability_hypothesis,
    certify_control_function,
    certify_map_in_carrier,
    certify_monotone,
    certify_start,
    certify_weak_contraction,
    control_grid,
    draw_samples,
    psi_from_c,
)
from pyfixpoint.core import ControlFunction, FiniteIndex, ProblemInstance, Scalar, ScalarMap
from pyfixpoint.expr import parse
from pyfixpoint.gallery import GalleryEntry, paper_example
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.types import CheckStatus


def test_control_grid() -> None:
    grid = control_grid(1e6)
    assert grid[0] == 0.0
    assert 1e-12 in grid
    assert grid[-1] == 1e6
    assert np.all(np.diff(grid) > 0)


def test_control_function_passes_with_continuity_assumed() -> None:
    report = certify_control_function(ControlFunction(parse("t / 4")))
    assert report.all_passed
    continuity = report[CheckName.PSI_CONTINUITY]
    assert continuity.status is CheckStatus.SKIPPED
    assert continuity.notes[0].startswith("assumed")


@pytest.mark.parametrize(
    "expr,failing",
    [
        pytest.param("0 - t", [CheckName.PSI_POSITIVE, CheckName.PSI_NONDECREASING, CheckName.PSI_GROWTH], id="negative"),
        pytest.param("t / (1 + t)", [CheckName.PSI_GROWTH], id="bounded"),
        pytest.param("min(t, 0.5)", [CheckName.PSI_GROWTH], id="saturating"),
        pytest.param("t * abs(t - 2)", [CheckName.PSI_POSITIVE, CheckName.PSI_NONDECREASING], id="dips_at_two"),
    ],
)
def test_control_function_failures(expr: str, failing: list[CheckName]) -> None:
    report = certify_control_function(ControlFunction(parse(expr)))
    assert [c.name for c in report.failed_checks] == failing


def test_nondecreasing_witness() -> None:
    report = certify_control_function(ControlFunction(parse("t * abs(t - 2)")))
    v = report[CheckName.PSI_NONDECREASING].violations[0]
    assert v.witness == (Scalar(1.0), Scalar(2.0))
    assert v.value("psi(s)") == 1.0
    assert v.value("psi(t)") == 0.0


def test_map_leaving_the_carrier(max_half: GalleryEntry) -> None:
    space = max_half.instance.space
    samples = draw_samples(space, 50, seed=0)
    assert certify_map_in_carrier(space, max_half.instance.map, samples).all_passed
    report = certify_map_in_carrier(space, ScalarMap(parse("t - 1")), samples)
    assert report[CheckName.MAP_IN_CARRIER].violations[0].witness == (Scalar(0.0),)


def test_monotone(max_half: GalleryEntry, swap: ProblemInstance) -> None:
    instance = max_half.instance
    assert certify_monotone(instance.map, instance.order, draw_samples(instance.space, 200, seed=0)).all_passed
    report = certify_monotone(swap.map, swap.order, draw_samples(swap.space))
    assert report[CheckName.MAP_MONOTONE].violations[0].witness == (FiniteIndex(0), FiniteIndex(1))


def test_weak_contraction_violation(identity_entry: GalleryEntry) -> None:
    instance = identity_entry.instance
    assert instance.psi is not None
    report = certify_weak_contraction(
        instance.space, instance.order, instance.map, instance.psi, draw_samples(instance.space, 100, seed=0),
    )
    result = report[CheckName.WEAK_CONTRACTION]
    assert result.failed
    assert result.notes[0].endswith("sampled pairs comparable")
    v = result.violations[0]
    assert v.value("lhs") == v.value("p(a,b)")
    assert v.value("lhs") > v.value("rhs")


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), c=st.sampled_from([0.25, 0.5, 0.75]))
def test_banach_agrees_with_its_weak_contraction(seed: int, c: float) -> None:
    instance = paper_example().instance
    f = instance.map
    samples = draw_samples(instance.space, 200, seed=seed)
    banach = certify_banach(instance.space, instance.order, f, c, samples)[CheckName.BANACH]
    weak = certify_weak_contraction(instance.space, instance.order, f, psi_from_c(c), samples)[CheckName.WEAK_CONTRACTION]
    assert banach.status == weak.status
    assert banach.violation_count == weak.violation_count


def test_comparability(max_half: GalleryEntry, antichain: GalleryEntry) -> None:
    instance = max_half.instance
    assert certify_comparability_hypothesis(instance.order, draw_samples(instance.space, 100, seed=0)).all_passed

    instance = antichain.instance
    result = certify_comparability_hypothesis(instance.order, draw_samples(instance.space))[CheckName.COMPARABILITY]
    assert result.failed
    assert result.exhaustive
    assert result.violations[0].witness == (FiniteIndex(0), FiniteIndex(1))


def test_start_below_image(max_half: GalleryEntry, swap: ProblemInstance) -> None:
    instance = max_half.instance
    assert certify_start(instance.order, instance.map, instance.x0).all_passed
    assert certify_start(swap.order, swap.map, swap.x0).all_passed
    assert certify_start(swap.order, swap.map, FiniteIndex(1)).status(CheckName.START_BELOW_IMAGE) is CheckStatus.FAIL
