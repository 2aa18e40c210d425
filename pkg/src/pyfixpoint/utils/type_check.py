from beartype.door import is_bearable
from typing_extensions import TypeForm, TypeIs

from pyfixpoint.shared.types import DomainError


def is_of_type[T](val: object, hint: TypeForm[T]) -> TypeIs[T]:
    """Runtime guard for any type expression, generics and unions included."""
    return is_bearable(val, hint)  # pyright: ignore[reportArgumentType]


def require_type[T](val: object, hint: TypeForm[T], what: str) -> T:
    """
    `val` narrowed to `hint`, or a DomainError naming `what`.

    Tables handed over by callers (documents, generators, tests) are checked
    here before any arithmetic touches them.
    """
    if not is_of_type(val, hint):
        raise DomainError(f"{what} must be {hint}, got {val!r}")
    return val
