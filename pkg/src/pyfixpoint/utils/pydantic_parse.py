import inspect
from collections.abc import Callable
from functools import wraps
from typing import Annotated, Any, get_args, get_origin

import typer
from pydantic import BaseModel, ValidationError
from pydantic.fields import FieldInfo
from pydantic_core import PydanticUndefined
from rich.markup import escape
from typer.models import ArgumentInfo, OptionInfo, ParameterInfo

from pyfixpoint.shared.console import err_console
from pyfixpoint.shared.consts import ExitCode


def _model_parameter(params: list[inspect.Parameter]) -> tuple[int, type[BaseModel]] | None:
    """Position and type of the first parameter annotated with a pydantic model."""
    for i, param in enumerate(params):
        annotation = param.annotation
        if get_origin(annotation) is Annotated:
            annotation = get_args(annotation)[0]
        if isinstance(annotation, type) and issubclass(annotation, BaseModel):
            return i, annotation
    return None


def _typer_info(field_info: FieldInfo) -> ParameterInfo:
    """The field's own `typer.Option`/`typer.Argument` if it carries one, else an option from its description."""
    default = ... if field_info.default is PydanticUndefined else field_info.default
    help_text = field_info.description

    info = next((m for m in field_info.metadata if isinstance(m, (ArgumentInfo, OptionInfo))), None)
    if info is None:
        return typer.Option(default, help=help_text)
    if info.default in (..., None) and default is not ...:
        info.default = default
    if not info.help:
        info.help = help_text
    return info


def _format_validation_errors(error: ValidationError) -> str:
    lines = (f"--{str(err['loc'][0]).replace('_', '-')}: {err['msg']}" if err["loc"] else err["msg"] for err in error.errors())
    return "invalid options:\n" + "\n".join(lines)


def pydantic_typer_parse[**P, R](func: Callable[P, R]) -> Callable[..., R]:
    """
    Explode the pydantic model parameter of a command into one typer option per field.

    Typer parses the options, the model validates them together, and the
    command receives the model. A validation failure prints the offending
    options and exits with the usage exit code.

        @app.command()
        @pydantic_typer_parse
        def solve(file: Path, options: RunOptions) -> None: ...
    """
    sig = inspect.signature(func)
    params = list(sig.parameters.values())
    found = _model_parameter(params)
    if found is None:
        return func
    index, model = found
    model_name = params[index].name
    fields = frozenset(model.model_fields)

    params[index:index + 1] = [
        inspect.Parameter(
            name,
            inspect.Parameter.POSITIONAL_OR_KEYWORD,
            annotation=info.annotation,
            default=_typer_info(info),
        )
        for name, info in model.model_fields.items()
    ]

    @wraps(func)
    def wrapper(**kwargs: Any) -> R:
        try:
            parsed = model(**{k: v for k, v in kwargs.items() if k in fields})
        except ValidationError as e:
            err_console.print(escape(_format_validation_errors(e)), style="red")
            raise typer.Exit(code=ExitCode.USAGE) from e
        rest = {k: v for k, v in kwargs.items() if k not in fields}
        return func(**rest, **{model_name: parsed})  # pyright: ignore[reportCallIssue]

    wrapper.__signature__ = sig.replace(parameters=params)  # pyright: ignore[reportAttributeAccessIssue]
    return wrapper
