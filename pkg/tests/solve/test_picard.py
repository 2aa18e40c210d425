from dataclasses import replace

import pytest

from pyfixpoint.core import ControlFunction, FiniteIndex, ProblemInstance, Scalar
from pyfixpoint.expr import parse
from pyfixpoint.gallery import GalleryEntry, abs_half, chain_constant
from pyfixpoint.shared.types import HypothesisError, SolveStatus
from pyfixpoint.solve import picard_solve, verify_fixed_point


def test_max_half_converges_to_zero(max_half: GalleryEntry) -> None:
    result = picard_solve(max_half.instance)
    assert result.status is SolveStatus.CONVERGED
    assert result.trace.iterations_used == 31
    assert result.fixed_point == Scalar(2.0**-30)
    assert result.residual <= 1e-9
    assert result.self_distance_at_u <= 1e-9
    assert result.trace.rho == tuple(2.0**-n for n in range(31))
    assert not result.trace.descent_flagged


def test_max_half_within_the_iteration_budget(max_half: GalleryEntry) -> None:
    result = picard_solve(max_half.instance)
    assert result.converged
    assert result.trace.iterations_used <= 40
    assert result.fixed_point is not None
    assert abs(result.fixed_point.value) <= 1e-9  # pyright: ignore[reportAttributeAccessIssue]


def test_iteration_cap(max_half: GalleryEntry) -> None:
    result = picard_solve(max_half.instance.with_overrides(max_iter=3))
    assert result.status is SolveStatus.MAX_ITER_EXCEEDED
    assert result.fixed_point is None
    assert result.trace.last == Scalar(0.125)
    assert result.residual == 0.125


def test_banach_instance() -> None:
    result = picard_solve(abs_half().instance)
    assert result.status is SolveStatus.CONVERGED
    assert result.fixed_point == Scalar(2.0**-29)
    assert result.self_distance_at_u == 0.0


def test_finite_orbit_hits_its_fixed_point() -> None:
    result = picard_solve(chain_constant().instance)
    assert result.status is SolveStatus.FIXED_POINT_HIT
    assert result.fixed_point == FiniteIndex(0)
    assert result.trace.points == (FiniteIndex(1), FiniteIndex(0), FiniteIndex(0))
    assert result.trace.self_dists == (1.0, 0.0, 0.0)


def test_identity_flags_descent(identity_entry: GalleryEntry) -> None:
    result = picard_solve(identity_entry.instance)
    assert result.status is SolveStatus.DESCENT_VIOLATION
    assert result.trace.descent_flagged
    assert result.trace.descent_step == 1
    assert result.fixed_point is None
    assert result.residual == 1.0


def test_identity_without_psi_stalls(identity_entry: GalleryEntry) -> None:
    instance = replace(identity_entry.instance, psi=ControlFunction(parse("0")))
    result = picard_solve(instance)
    assert result.status is SolveStatus.STALLED
    assert not result.trace.descent_flagged


def test_start_must_be_below_its_image(swap: ProblemInstance) -> None:
    with pytest.raises(HypothesisError):
        _ = picard_solve(swap.with_overrides(x0=FiniteIndex(1)))


def test_trace_rows(max_half: GalleryEntry) -> None:
    trace = picard_solve(max_half.instance.with_overrides(max_iter=2)).trace
    assert trace.rows() == [
        (0, Scalar(1.0), 1.0, 1.0),
        (1, Scalar(0.5), 0.5, 0.5),
        (2, Scalar(0.25), None, 0.25),
    ]


def test_verify_fixed_point(max_half: GalleryEntry) -> None:
    space, f = max_half.instance.space, max_half.instance.map
    assert verify_fixed_point(space, f, Scalar(0.0)).holds(1e-9)
    check = verify_fixed_point(space, f, Scalar(1.0))
    assert check.residual == 1.0
    assert not check.holds(1e-9)
