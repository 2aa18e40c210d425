import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pyfixpoint.certify import certify_instance
from pyfixpoint.gallery import MAX_SIZE, brute_force_orbit, clamp_to_p4, random_entry, random_finite_instance
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.types import DomainError
from pyfixpoint.solve import picard_solve

sizes = st.integers(1, MAX_SIZE)
seeds = st.integers(0, 2**32 - 1)


def test_same_seed_same_instance() -> None:
    a, b = random_finite_instance(8, 42), random_finite_instance(8, 42)
    np.testing.assert_array_equal(a.space.table, b.space.table)  # pyright: ignore[reportAttributeAccessIssue]
    np.testing.assert_array_equal(a.order.table, b.order.table)  # pyright: ignore[reportAttributeAccessIssue]
    assert a.map.table == b.map.table  # pyright: ignore[reportAttributeAccessIssue]
    assert a.x0 == b.x0


@pytest.mark.parametrize("n", [pytest.param(0, id="empty"), pytest.param(MAX_SIZE + 1, id="too_large")])
def test_size_range(n: int) -> None:
    with pytest.raises(DomainError):
        _ = random_finite_instance(n, 0)


def test_clamp_leaves_a_partial_metric_alone() -> None:
    table = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    np.testing.assert_array_equal(clamp_to_p4(table), table)


def test_clamp_lowers_a_long_side() -> None:
    table = np.array([[0, 5, 1], [5, 0, 1], [1, 1, 0]])
    clamped = clamp_to_p4(table)
    assert clamped[0, 1] == clamped[1, 0] == 2


@settings(max_examples=100, deadline=None)
@given(n=sizes, seed=seeds)
def test_generated_instances_are_ordered_partial_metric_spaces(n: int, seed: int) -> None:
    # Self distances are drawn at random, so the contraction itself may fail.
    report = certify_instance(random_finite_instance(n, seed))
    failing = {c.name for c in report.failed_checks}
    assert failing <= {CheckName.WEAK_CONTRACTION, CheckName.COMPARABILITY}


@settings(max_examples=100, deadline=None)
@given(n=sizes, seed=seeds)
def test_solver_agrees_with_orbit_enumeration(n: int, seed: int) -> None:
    instance = random_finite_instance(n, seed)
    expected = brute_force_orbit(instance)
    result = picard_solve(instance)
    assert expected is not None
    assert result.fixed_point == expected
    assert random_entry(n, seed).matches(result)
