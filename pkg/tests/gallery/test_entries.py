import pytest

from pyfixpoint.certify import certify_instance
from pyfixpoint.core import FiniteIndex, Scalar
from pyfixpoint.expr import parse
from pyfixpoint.gallery import ENTRIES, Expected, GalleryEntry, entry_names, lookup, metric_embedding
from pyfixpoint.shared.types import DomainError, TableValidationError, UnknownNameError
from pyfixpoint.solve import picard_solve


def test_names() -> None:
    assert entry_names()[0] == "max-half"
    assert {"abs-half", "chain-constant", "antichain-identity", "identity-quarter"} <= set(entry_names())


@pytest.mark.parametrize("name", [n for n in ENTRIES if not ENTRIES[n]().negative])
def test_entries_certify_and_solve_to_their_expected_point(name: str) -> None:
    entry = lookup(name)
    assert certify_instance(entry.instance).passed
    assert entry.matches(picard_solve(entry.instance))


def test_negative_entry(identity_entry: GalleryEntry) -> None:
    assert identity_entry.negative
    assert identity_entry.expected is None
    assert not certify_instance(identity_entry.instance).passed
    assert identity_entry.matches(picard_solve(identity_entry.instance))


def test_match_slack(max_half: GalleryEntry) -> None:
    result = picard_solve(max_half.instance)
    assert max_half.matches(result)
    moved = GalleryEntry(max_half.name, max_half.instance, Expected(Scalar(1.0), 1.0))
    assert not moved.matches(result)


def test_random_names() -> None:
    entry = lookup("random-5-3")
    assert entry.name == "random-5-3"
    assert entry.instance.space.size == 5  # pyright: ignore[reportAttributeAccessIssue]


@pytest.mark.parametrize(
    "name",
    [
        pytest.param("nope", id="unknown"),
        pytest.param("random-5", id="random_without_seed"),
        pytest.param("random-x-1", id="random_non_numeric"),
    ],
)
def test_unknown_names(name: str) -> None:
    with pytest.raises(UnknownNameError):
        _ = lookup(name)


def test_random_size_is_bounded() -> None:
    with pytest.raises(DomainError):
        _ = lookup("random-17-1")


def test_metric_embedding_table() -> None:
    space = metric_embedding([[0, 2], [2, 0]])
    assert space.self_distance(FiniteIndex(1)) == 0.0
    with pytest.raises(TableValidationError):
        _ = metric_embedding([[1, 2], [2, 1]])


def test_metric_embedding_expression() -> None:
    space = metric_embedding(parse("abs(x - y)"), upper=10.0)
    assert space.distance(Scalar(1.0), Scalar(4.0)) == 3.0
    with pytest.raises(DomainError):
        _ = metric_embedding(parse("max(x, y)"), upper=10.0)
