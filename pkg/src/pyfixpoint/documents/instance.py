"""
Instance documents: JSON files describing a `ProblemInstance`.

A document is validated by pydantic (discriminated on `kind`), then built into
an instance, which runs the eager table and zero checks. Every failure surfaces
as `InstanceLoadError` naming the offending field.
"""
from pathlib import Path
from typing import Annotated, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

from pyfixpoint.core.element import FiniteIndex, Scalar
from pyfixpoint.core.functions import ControlFunction, FiniteMap, ScalarMap
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.order import FiniteOrder, PredicateOrder
from pyfixpoint.core.space import FiniteSpace, IntervalSpace
from pyfixpoint.expr import Expr, parse, unparse
from pyfixpoint.shared.types import DomainError, ExprError, InstanceLoadError, Relation


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    psi_expr: str | None = None
    banach_c: float | None = Field(default=None, ge=0, lt=1)
    tol: float | None = Field(default=None, gt=0)
    max_iter: int | None = Field(default=None, ge=1)
    samples: int | None = Field(default=None, ge=1)
    seed: int | None = None
    label: str = ""
    eps_ax: float | None = Field(default=None, ge=0)
    growth_bound: float | None = Field(default=None, gt=0)
    growth_threshold: float | None = None

    @model_validator(mode="after")
    def _needs_control(self) -> Self:
        if self.psi_expr is None and self.banach_c is None:
            raise ValueError("give psi_expr, banach_c, or both")
        return self


class FiniteDocument(_Document):
    kind: Literal["finite"]
    p_table: list[list[float]]
    order_table: list[list[bool]]
    map_table: list[int]
    x0: int

    @model_validator(mode="after")
    def _square_tables(self) -> Self:
        n = len(self.map_table)
        for name, table in (("p_table", self.p_table), ("order_table", self.order_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{name} must be a {n}x{n} matrix to match map_table")
        return self


class Domain(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    min: float
    max: float = Field(description="Upper sampling bound; the carrier itself is unbounded above")


class OrderPredicate(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    lhs: str
    rel: Relation
    rhs: str


class IntervalDocument(_Document):
    kind: Literal["interval"]
    domain: Domain
    p_expr: str
    order: OrderPredicate
    f_expr: str
    x0: float


type InstanceDocument = Annotated[FiniteDocument | IntervalDocument, Field(discriminator="kind")]

_DOCUMENT: TypeAdapter[FiniteDocument | IntervalDocument] = TypeAdapter(InstanceDocument)


def _format_validation_errors(error: ValidationError) -> str:
    lines = (f"{' -> '.join(map(str, err['loc'])) or 'document'}: {err['msg']}" for err in error.errors())
    return "invalid instance document:\n" + "\n".join(lines)


def _expr(field: str, text: str) -> Expr:
    try:
        return parse(text)
    except ExprError as e:
        raise InstanceLoadError(f"{field}: {e}") from e


def parse_document(text: str | bytes) -> FiniteDocument | IntervalDocument:
    try:
        return _DOCUMENT.validate_json(text)
    except ValidationError as e:
        raise InstanceLoadError(_format_validation_errors(e)) from e


def from_document(doc: FiniteDocument | IntervalDocument) -> ProblemInstance:
    """Build the instance a validated document describes. Missing knobs fall back to the settings."""
    psi = None
    if doc.psi_expr is not None:
        try:
            psi = ControlFunction(_expr("psi_expr", doc.psi_expr), doc.growth_bound, doc.growth_threshold)
        except DomainError as e:
            raise InstanceLoadError(f"psi_expr: {e}") from e

    try:
        match doc:
            case FiniteDocument():
                space = FiniteSpace(doc.p_table, label=doc.label or "finite", eps_ax=doc.eps_ax)
                parts = dict(
                    space=space,
                    order=FiniteOrder(doc.order_table),
                    map=FiniteMap(doc.map_table),
                    x0=FiniteIndex(doc.x0),
                )
            case IntervalDocument():
                p_expr = _expr("p_expr", doc.p_expr)
                space = IntervalSpace(doc.domain.min, doc.domain.max, p_expr, label=doc.label or "interval", eps_ax=doc.eps_ax)
                order = PredicateOrder(
                    _expr("order.lhs", doc.order.lhs), doc.order.rel, _expr("order.rhs", doc.order.rhs), eps_ax=doc.eps_ax,
                )
                parts = dict(space=space, order=order, map=ScalarMap(_expr("f_expr", doc.f_expr)), x0=Scalar(doc.x0))
        overrides = dict(
            tol=doc.tol, max_iter=doc.max_iter, sample_count=doc.samples, seed=doc.seed,
        )
        return ProblemInstance(
            psi=psi,
            banach_c=doc.banach_c,
            label=doc.label,
            **parts,  # pyright: ignore[reportArgumentType]
            **{k: v for k, v in overrides.items() if v is not None},  # pyright: ignore[reportArgumentType]
        )
    except DomainError as e:
        raise InstanceLoadError(str(e)) from e


def load_instance(path: Path | str) -> ProblemInstance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InstanceLoadError(f"cannot read {path}: {e.strerror or e}") from e
    return from_document(parse_document(text))


def to_document(instance: ProblemInstance) -> FiniteDocument | IntervalDocument:
    """The document `from_document` turns back into an equivalent instance."""
    control = instance.psi
    common = dict(
        psi_expr=unparse(control.expr) if control is not None else None,
        banach_c=instance.banach_c,
        tol=instance.tol,
        max_iter=instance.max_iter,
        samples=instance.sample_count,
        seed=instance.seed,
        label=instance.label,
        eps_ax=instance.eps_ax,
        growth_bound=control.growth_bound if control is not None else None,
        growth_threshold=control.growth_threshold if control is not None else None,
    )
    space, order, f, x0 = instance.space, instance.order, instance.map, instance.x0
    match space, order, f, x0:
        case FiniteSpace(), FiniteOrder(), FiniteMap(), FiniteIndex():
            return FiniteDocument(
                kind="finite",
                p_table=space.table.tolist(),
                order_table=order.table.tolist(),
                map_table=list(f.table),
                x0=x0.index,
                **common,  # pyright: ignore[reportArgumentType]
            )
        case IntervalSpace(), PredicateOrder(), ScalarMap(), Scalar():
            return IntervalDocument(
                kind="interval",
                domain=Domain(min=space.lower, max=space.upper),
                p_expr=unparse(space.expr),
                order=OrderPredicate(lhs=unparse(order.lhs), rel=order.relation, rhs=unparse(order.rhs)),
                f_expr=unparse(f.expr),
                x0=x0.value,
                **common,  # pyright: ignore[reportArgumentType]
            )
        case _:
            raise DomainError(f"cannot describe {instance.label} as a document")


def dump_document(doc: FiniteDocument | IntervalDocument) -> str:
    return doc.model_dump_json(indent=2, exclude_none=True) + "\n"


def export_instance(instance: ProblemInstance, path: Path | str) -> Path:
    target = Path(path)
    target.write_text(dump_document(to_document(instance)), encoding="utf-8")
    return target
