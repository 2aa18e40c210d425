import pytest

from pyfixpoint.certify import CheckContext, certify_instance, replay_violation
from pyfixpoint.gallery import GalleryEntry, abs_half, chain_constant
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.types import CheckStatus


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_max_half_passes_on_large_samples(max_half: GalleryEntry, seed: int) -> None:
    report = certify_instance(max_half.instance, seed=seed, samples=10_000)
    assert report.all_passed, report.failed_checks
    assert report.seed == seed
    assert report.sample_count == 10_000


@pytest.mark.parametrize(
    "entry",
    [pytest.param(abs_half(), id="abs-half"), pytest.param(chain_constant(), id="chain-constant")],
)
def test_shipped_entries_pass(entry: GalleryEntry) -> None:
    assert certify_instance(entry.instance).all_passed


def test_banach_instance_runs_the_banach_check() -> None:
    report = certify_instance(abs_half().instance)
    assert CheckName.BANACH in report
    assert CheckName.WEAK_CONTRACTION not in report


def test_identity_fails_weak_contraction_and_replays(identity_entry: GalleryEntry) -> None:
    instance = identity_entry.instance
    report = certify_instance(instance)
    assert not report.passed
    assert [c.name for c in report.failed_checks] == [CheckName.WEAK_CONTRACTION]
    for v in report.violations:
        assert replay_violation(v, CheckContext.of(instance))


def test_antichain_keeps_existence(antichain: GalleryEntry) -> None:
    report = certify_instance(antichain.instance)
    assert report.passed
    assert not report.all_passed
    assert report.status(CheckName.COMPARABILITY) is CheckStatus.FAIL


def test_reports_are_deterministic(max_half: GalleryEntry) -> None:
    assert certify_instance(max_half.instance, seed=5) == certify_instance(max_half.instance, seed=5)
