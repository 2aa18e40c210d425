from pyfixpoint.core import FiniteIndex, Scalar
from pyfixpoint.gallery import GalleryEntry
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.types import CheckStatus
from pyfixpoint.solve import distinct_fixed_points, solve_many, uniqueness_cross_check


async def test_solve_many_keeps_the_order_of_starts(max_half: GalleryEntry) -> None:
    starts = [Scalar(10.0), Scalar(1.0), Scalar(123.4)]
    outcomes = await solve_many(max_half.instance, starts)
    assert [o.start for o in outcomes] == starts
    assert all(o.result is not None and o.result.converged for o in outcomes)


def test_every_start_reaches_the_same_point(max_half: GalleryEntry) -> None:
    report, outcomes = uniqueness_cross_check(max_half.instance, [Scalar(1.0), Scalar(10.0), Scalar(123.4)])
    assert report.status(CheckName.UNIQUENESS) is CheckStatus.PASS
    space = max_half.instance.space
    points = [o.result.fixed_point for o in outcomes if o.result is not None]
    assert len(points) == 3
    for u in points:
        for v in points:
            assert u is not None and v is not None
            assert space.distance(u, v) <= 1e-8
    assert len(distinct_fixed_points(outcomes, max_half.instance)) == 1


def test_uniqueness_not_applicable_without_comparability(antichain: GalleryEntry) -> None:
    report, outcomes = uniqueness_cross_check(antichain.instance, [FiniteIndex(0), FiniteIndex(1)])
    result = report[CheckName.UNIQUENESS]
    assert result.status is CheckStatus.SKIPPED
    assert result.notes[0].startswith("not applicable")
    assert "distinct fixed points: 0, 1" in result.notes
    assert distinct_fixed_points(outcomes, antichain.instance) == [FiniteIndex(0), FiniteIndex(1)]
