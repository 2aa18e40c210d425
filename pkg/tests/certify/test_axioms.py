import pytest
from hypothesis import given, settings, strategies as st

from pyfixpoint.certify import certify_induced_metric, certify_order, certify_partial_metric, draw_samples, is_total
from pyfixpoint.core import FiniteIndex, FiniteOrder, FiniteSpace, IntervalSpace
from pyfixpoint.expr import parse
from pyfixpoint.gallery import MAX_SIZE, GalleryEntry, random_finite_instance
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.types import CheckStatus


def test_max_metric_is_a_partial_metric(max_half: GalleryEntry) -> None:
    space = max_half.instance.space
    samples = draw_samples(space, 500, seed=0)
    assert certify_partial_metric(space, samples).all_passed
    assert certify_induced_metric(space, samples).all_passed


def test_finite_table_is_checked_exhaustively() -> None:
    space = FiniteSpace([[0, 1], [1, 1]])
    report = certify_partial_metric(space, draw_samples(space))
    assert report.all_passed
    assert all(c.exhaustive for c in report)
    assert report[CheckName.P4].samples_used == 8


def test_p1_fails_when_two_points_look_alike() -> None:
    space = FiniteSpace([[1, 1], [1, 1]])
    report = certify_partial_metric(space, draw_samples(space))
    assert report.status(CheckName.P1) is CheckStatus.FAIL
    assert report[CheckName.P1].violations[0].witness == (FiniteIndex(0), FiniteIndex(1))
    assert certify_induced_metric(space, draw_samples(space)).status(CheckName.INDUCED_SEPARATION) is CheckStatus.FAIL


def test_p4_witness() -> None:
    space = FiniteSpace([[0, 5, 1], [5, 0, 1], [1, 1, 0]])
    p4 = certify_partial_metric(space, draw_samples(space))[CheckName.P4]
    assert p4.failed
    v = p4.violations[0]
    assert v.witness == (FiniteIndex(0), FiniteIndex(1), FiniteIndex(2))
    assert v.value("lhs") == 5.0
    assert v.value("rhs") == 2.0


def test_sum_is_not_a_partial_metric() -> None:
    space = IntervalSpace(0.0, 10.0, parse("x + y"))
    report = certify_partial_metric(space, draw_samples(space, 100, seed=0))
    assert report.status(CheckName.P2) is CheckStatus.FAIL
    v = report[CheckName.P2].violations[0]
    assert v.value("p(a,a)") > v.value("p(a,b)")


def test_evaluation_error_is_a_violation() -> None:
    space = IntervalSpace(0.0, 10.0, parse("x / y"))
    p1 = certify_partial_metric(space, draw_samples(space, 50, seed=0))[CheckName.P1]
    assert p1.failed
    assert p1.violations[0].values == ()
    assert "failed" in p1.violations[0].message


@settings(max_examples=100, deadline=None)
@given(n=st.integers(1, MAX_SIZE), seed=st.integers(0, 2**32 - 1))
def test_induced_metric_of_a_partial_metric(n: int, seed: int) -> None:
    space = random_finite_instance(n, seed).space
    samples = draw_samples(space)
    if certify_partial_metric(space, samples).all_passed:
        assert certify_induced_metric(space, samples).all_passed


def test_max_order_is_a_total_partial_order(max_half: GalleryEntry) -> None:
    instance = max_half.instance
    samples = draw_samples(instance.space, 300, seed=2)
    report = certify_order(instance.order, samples, instance.space)
    assert report.all_passed
    assert "order is total on the sample" in report.notes


def test_discrete_order_is_not_total() -> None:
    samples = [FiniteIndex(i) for i in range(3)]
    report = certify_order(FiniteOrder.discrete(3), samples)
    assert report.all_passed
    assert not report.notes
    assert not is_total(FiniteOrder.discrete(3), samples)


@pytest.mark.parametrize(
    "order,failing",
    [
        pytest.param(FiniteOrder([[True, True], [True, True]]), CheckName.ORDER_ANTISYMMETRIC, id="not_antisymmetric"),
        pytest.param(FiniteOrder.from_pairs(3, [(0, 1), (1, 2)]), CheckName.ORDER_TRANSITIVE, id="not_transitive"),
    ],
)
def test_order_axiom_failures(order: FiniteOrder, failing: CheckName) -> None:
    samples = [FiniteIndex(i) for i in range(order.size)]
    report = certify_order(order, samples)
    assert [c.name for c in report.failed_checks] == [failing]
