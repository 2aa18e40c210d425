import pytest

from pyfixpoint.shared.types import DomainError
from pyfixpoint.utils.type_check import is_of_type, require_type


@pytest.mark.parametrize(
    "val,hint,expected",
    [
        ([0, 1, 2], list[int], True),
        ([0, 1.5], list[int], False),
        ((1.0, None), tuple[float, float | None], True),
        ("01", list[int], False),
    ],
)
def test_is_of_type(val: object, hint: object, expected: bool):
    assert is_of_type(val, hint) is expected


def test_require_type_names_the_value():
    assert require_type([3], list[int], "map table") == [3]
    with pytest.raises(DomainError, match="^map table must be"):
        _ = require_type(["a"], list[int], "map table")
