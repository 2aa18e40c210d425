"""
Named checks.

Each check is one vectorised predicate over aligned columns of packed elements
(a column per witness position). The certifiers feed it sampled or exhaustive
tuples; `replay_violation` feeds it a single witness, so a recorded violation
is reproduced by exactly the code that found it.
"""
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from typing import Final, Self

import numpy as np
from loguru import logger

from pyfixpoint.certify.report import CheckResult, Violation
from pyfixpoint.core.element import BatchEvaluationError, BoolArray, FloatArray, Packed, element_at, pack, same_points
from pyfixpoint.core.functions import ControlFunction, SelfMap
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.order import PartialOrder
from pyfixpoint.core.space import PartialMetricSpace
from pyfixpoint.shared.consts import CheckName
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import CheckStatus, DomainError, UnknownNameError


def _default_eps() -> float:
    return get_settings().eps_ax


@dataclass(frozen=True)
class CheckContext:
    """The objects a check reads. Unused slots stay None."""

    space: PartialMetricSpace | None = None
    order: PartialOrder | None = None
    map: SelfMap | None = None
    psi: ControlFunction | None = None
    banach_c: float | None = None
    eps_ax: float = field(default_factory=_default_eps)
    radius: float = 0.0

    @classmethod
    def of(cls, instance: ProblemInstance, **changes: object) -> Self:
        context = cls(
            space=instance.space,
            order=instance.order,
            map=instance.map,
            psi=instance.control,
            banach_c=instance.banach_c,
            eps_ax=instance.eps_ax,
        )
        return replace(context, **changes)  # pyright: ignore[reportArgumentType]

    @property
    def p(self) -> PartialMetricSpace:
        if self.space is None:
            raise DomainError("this check needs a space")
        return self.space

    @property
    def le(self) -> PartialOrder:
        if self.order is None:
            raise DomainError("this check needs an order")
        return self.order

    @property
    def f(self) -> SelfMap:
        if self.map is None:
            raise DomainError("this check needs a map")
        return self.map

    @property
    def control(self) -> ControlFunction:
        if self.psi is None:
            raise DomainError("this check needs a control function")
        return self.psi

    def same(self, a: Packed, b: Packed) -> BoolArray:
        if self.space is not None:
            return self.space.same_points(a, b)
        return same_points(a, b, self.eps_ax)

    @property
    def exact_slack(self) -> float:
        """Slack for equality tests: exact on finite tables, eps_ax on expressions."""
        return 0.0 if self.space is not None and self.space.is_finite else self.eps_ax


@dataclass(frozen=True)
class Outcome:
    failed: BoolArray
    values: dict[str, FloatArray] = field(default_factory=dict)


type Predicate = Callable[..., Outcome]


@dataclass(frozen=True)
class Check:
    name: CheckName
    arity: int
    predicate: Predicate
    message: str


CHECKS: Final[dict[CheckName, Check]] = {}


def check(name: CheckName, arity: int, message: str) -> Callable[[Predicate], Predicate]:
    """Register `predicate(context, *columns) -> Outcome` under `name`."""

    def decorator(predicate: Predicate) -> Predicate:
        CHECKS[name] = Check(name, arity, predicate, message)
        return predicate

    return decorator


def get_check(name: CheckName | str) -> Check:
    try:
        return CHECKS[CheckName(name)]
    except (KeyError, ValueError):
        raise UnknownNameError(f"unknown check {name!r}") from None


# Partial metric axioms

@check(CheckName.P1, 2, "p1: a = b iff p(a,a) = p(a,b) = p(b,b)")
def _p1(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    paa, pab, pbb = ctx.p.distances(a, a), ctx.p.distances(a, b), ctx.p.distances(b, b)
    slack = ctx.exact_slack
    equal = (np.abs(paa - pab) <= slack) & (np.abs(pab - pbb) <= slack)
    return Outcome(ctx.same(a, b) != equal, {"p(a,a)": paa, "p(a,b)": pab, "p(b,b)": pbb})


@check(CheckName.P2, 2, "p2: 0 <= p(a,a) <= p(a,b)")
def _p2(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    paa, pab = ctx.p.distances(a, a), ctx.p.distances(a, b)
    failed = (paa > pab + ctx.eps_ax) | (pab < -ctx.eps_ax) | (paa < -ctx.eps_ax)
    return Outcome(failed, {"p(a,a)": paa, "p(a,b)": pab})


@check(CheckName.P3, 2, "p3: p(a,b) = p(b,a)")
def _p3(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    pab, pba = ctx.p.distances(a, b), ctx.p.distances(b, a)
    return Outcome(np.abs(pab - pba) > ctx.exact_slack, {"p(a,b)": pab, "p(b,a)": pba})


@check(CheckName.P4, 3, "p4: p(x,y) <= p(x,z) + p(z,y) - p(z,z)")
def _p4(ctx: CheckContext, x: Packed, y: Packed, z: Packed) -> Outcome:
    lhs = ctx.p.distances(x, y)
    rhs = ctx.p.distances(x, z) + ctx.p.distances(z, y) - ctx.p.distances(z, z)
    return Outcome(lhs > rhs + ctx.eps_ax, {"lhs": lhs, "rhs": rhs})


# Induced metric p^s

@check(CheckName.INDUCED_ZERO_SELF, 1, "p^s(a,a) = 0")
def _induced_zero(ctx: CheckContext, a: Packed) -> Outcome:
    ps = ctx.p.induced_distances(a, a)
    return Outcome(np.abs(ps) > ctx.eps_ax, {"p^s(a,a)": ps})


@check(CheckName.INDUCED_SYMMETRY, 2, "p^s(a,b) = p^s(b,a)")
def _induced_symmetry(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    ab, ba = ctx.p.induced_distances(a, b), ctx.p.induced_distances(b, a)
    return Outcome(np.abs(ab - ba) > 2 * ctx.exact_slack, {"p^s(a,b)": ab, "p^s(b,a)": ba})


@check(CheckName.INDUCED_TRIANGLE, 3, "p^s(x,y) <= p^s(x,z) + p^s(z,y)")
def _induced_triangle(ctx: CheckContext, x: Packed, y: Packed, z: Packed) -> Outcome:
    lhs = ctx.p.induced_distances(x, y)
    rhs = ctx.p.induced_distances(x, z) + ctx.p.induced_distances(z, y)
    # p4 slack doubles under p^s = 2p - ...
    return Outcome(lhs > rhs + 2 * ctx.eps_ax, {"lhs": lhs, "rhs": rhs})


@check(CheckName.INDUCED_SEPARATION, 2, "p^s(a,b) >= 0, and p^s(a,b) = 0 only when a = b")
def _induced_separation(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    ps = ctx.p.induced_distances(a, b)
    collapsed = (ps <= ctx.exact_slack) & ~ctx.same(a, b)
    return Outcome(collapsed | (ps < -2 * ctx.eps_ax), {"p^s(a,b)": ps})


# Order axioms

@check(CheckName.ORDER_REFLEXIVE, 1, "a <= a")
def _reflexive(ctx: CheckContext, a: Packed) -> Outcome:
    return Outcome(~ctx.le.leq_array(a, a))


@check(CheckName.ORDER_ANTISYMMETRIC, 2, "a <= b and b <= a imply a = b")
def _antisymmetric(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    return Outcome(ctx.le.leq_array(a, b) & ctx.le.leq_array(b, a) & ~ctx.same(a, b))


@check(CheckName.ORDER_TRANSITIVE, 3, "x <= y and y <= z imply x <= z")
def _transitive(ctx: CheckContext, x: Packed, y: Packed, z: Packed) -> Outcome:
    return Outcome(ctx.le.leq_array(x, y) & ctx.le.leq_array(y, z) & ~ctx.le.leq_array(x, z))


@check(CheckName.COMPARABILITY, 2, "some z is comparable with both a and b")
def _comparability(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    # With only a and b to choose from, z exists iff a and b are comparable.
    return Outcome(~ctx.le.comparable_array(a, b))


# Control function probes, over columns of t values

@check(CheckName.PSI_ZERO, 1, "psi(0) = 0")
def _psi_zero(ctx: CheckContext, t: Packed) -> Outcome:
    values = ctx.control.values(t)
    return Outcome((t == 0) & (values != 0), {"psi(t)": values})


@check(CheckName.PSI_POSITIVE, 1, "psi(t) > 0 for t > 0")
def _psi_positive(ctx: CheckContext, t: Packed) -> Outcome:
    values = ctx.control.values(t)
    return Outcome((t > 0) & (values <= 0), {"psi(t)": values})


@check(CheckName.PSI_NONDECREASING, 2, "s <= t implies psi(s) <= psi(t)")
def _psi_nondecreasing(ctx: CheckContext, s: Packed, t: Packed) -> Outcome:
    ps, pt = ctx.control.values(s), ctx.control.values(t)
    return Outcome((s <= t) & (ps > pt + ctx.eps_ax), {"psi(s)": ps, "psi(t)": pt})


@check(CheckName.PSI_GROWTH, 1, "psi(G) reaches the growth threshold")
def _psi_growth(ctx: CheckContext, g: Packed) -> Outcome:
    values = ctx.control.values(g)
    return Outcome(values < ctx.control.growth_threshold, {"psi(G)": values})


# The map

@check(CheckName.MAP_IN_CARRIER, 1, "f(a) lies in the carrier")
def _in_carrier(ctx: CheckContext, a: Packed) -> Outcome:
    return Outcome(~ctx.p.contains_array(ctx.f.apply_array(a)))


@check(CheckName.MAP_MONOTONE, 2, "a <= b implies f(a) <= f(b)")
def _monotone(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    fa, fb = ctx.f.apply_array(a), ctx.f.apply_array(b)
    return Outcome(ctx.le.leq_array(a, b) & ~ctx.le.leq_array(fa, fb))


@check(CheckName.WEAK_CONTRACTION, 2, "p(fa,fb) <= p(a,b) - psi(p(a,b)) on comparable pairs")
def _weak_contraction(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    pab = ctx.p.distances(a, b)
    lhs = ctx.p.distances(ctx.f.apply_array(a), ctx.f.apply_array(b))
    rhs = pab - ctx.control.values(pab)
    return Outcome(ctx.le.comparable_array(a, b) & (lhs > rhs + ctx.eps_ax), {"lhs": lhs, "rhs": rhs, "p(a,b)": pab})


@check(CheckName.BANACH, 2, "p(fa,fb) <= c p(a,b) on comparable pairs")
def _banach(ctx: CheckContext, a: Packed, b: Packed) -> Outcome:
    if ctx.banach_c is None:
        raise DomainError("the Banach check needs a constant c")
    pab = ctx.p.distances(a, b)
    lhs = ctx.p.distances(ctx.f.apply_array(a), ctx.f.apply_array(b))
    rhs = ctx.banach_c * pab
    return Outcome(ctx.le.comparable_array(a, b) & (lhs > rhs + ctx.eps_ax), {"lhs": lhs, "rhs": rhs, "p(a,b)": pab})


@check(CheckName.START_BELOW_IMAGE, 1, "x0 <= f(x0)")
def _start_below_image(ctx: CheckContext, x0: Packed) -> Outcome:
    return Outcome(~ctx.le.leq_array(x0, ctx.f.apply_array(x0)))


# Sequential continuity, over (x_n, limit) tail pairs; `radius` is the probe tolerance

@check(CheckName.CONTINUITY_P, 2, "p(x_n,x) -> p(x,x) implies p(fx_n,fx) -> p(fx,fx)")
def _continuity_p(ctx: CheckContext, xn: Packed, x: Packed) -> Outcome:
    fxn, fx = ctx.f.apply_array(xn), ctx.f.apply_array(x)
    premise = np.abs(ctx.p.distances(xn, x) - ctx.p.distances(x, x))
    conclusion = np.abs(ctx.p.distances(fxn, fx) - ctx.p.distances(fx, fx))
    failed = (premise <= ctx.radius) & (conclusion > ctx.radius + ctx.eps_ax)
    return Outcome(failed, {"premise": premise, "conclusion": conclusion})


@check(CheckName.CONTINUITY_PROPER, 2, "p^s(x_n,x) -> 0 implies p^s(fx_n,fx) -> 0")
def _continuity_proper(ctx: CheckContext, xn: Packed, x: Packed) -> Outcome:
    premise = ctx.p.induced_distances(xn, x)
    conclusion = ctx.p.induced_distances(ctx.f.apply_array(xn), ctx.f.apply_array(x))
    failed = (premise <= ctx.radius) & (conclusion > ctx.radius + ctx.eps_ax)
    return Outcome(failed, {"premise": premise, "conclusion": conclusion})


# Orbit diagnostics, over consecutive orbit points

@check(CheckName.DESCENT, 3, "rho_n <= rho_(n-1) - psi(rho_(n-1))")
def _descent(ctx: CheckContext, prev: Packed, cur: Packed, nxt: Packed) -> Outcome:
    rho_prev, rho = ctx.p.distances(cur, prev), ctx.p.distances(nxt, cur)
    bound = rho_prev - ctx.control.values(rho_prev)
    return Outcome(rho > bound + ctx.eps_ax, {"rho_n": rho, "bound": bound})


@check(CheckName.DESCENT_MONOTONE, 3, "rho_n <= rho_(n-1)")
def _rho_nonincreasing(ctx: CheckContext, prev: Packed, cur: Packed, nxt: Packed) -> Outcome:
    rho_prev, rho = ctx.p.distances(cur, prev), ctx.p.distances(nxt, cur)
    return Outcome(rho > rho_prev + ctx.eps_ax, {"rho_n": rho, "rho_(n-1)": rho_prev})


@check(CheckName.ORBIT_CONFINEMENT, 2, "p(x_n, x_n0) <= eps for n >= n0")
def _confinement(ctx: CheckContext, xn: Packed, anchor: Packed) -> Outcome:
    d = ctx.p.distances(xn, anchor)
    return Outcome(d > ctx.radius + ctx.eps_ax, {"p(x_n,x_n0)": d})


@check(CheckName.ORDER_CHAIN, 2, "x_n <= x_(n+1)")
def _orbit_chain(ctx: CheckContext, xn: Packed, nxt: Packed) -> Outcome:
    return Outcome(~ctx.le.leq_array(xn, nxt))


@check(CheckName.ORDER_LIMIT, 2, "x_n <= u")
def _orbit_below_limit(ctx: CheckContext, xn: Packed, u: Packed) -> Outcome:
    return Outcome(~ctx.le.leq_array(xn, u))


@check(CheckName.CONVERGENCE_PLAIN, 2, "p(u,x_n) -> p(u,u)")
def _converges(ctx: CheckContext, xn: Packed, u: Packed) -> Outcome:
    gap = np.abs(ctx.p.distances(u, xn) - ctx.p.distances(u, u))
    return Outcome(gap > ctx.radius + ctx.eps_ax, {"|p(u,x_n)-p(u,u)|": gap})


@check(CheckName.CONVERGENCE_PROPER, 2, "p^s(x_n,u) -> 0")
def _converges_properly(ctx: CheckContext, xn: Packed, u: Packed) -> Outcome:
    ps = ctx.p.induced_distances(xn, u)
    return Outcome(ps > ctx.radius + ctx.eps_ax, {"p^s(x_n,u)": ps})


@check(CheckName.CAUCHY_P, 3, "p(x_n,x_m) -> p(u,u) for n, m in the tail")
def _cauchy_p(ctx: CheckContext, xn: Packed, xm: Packed, u: Packed) -> Outcome:
    d = ctx.p.distances(xn, xm)
    gap = np.abs(d - ctx.p.distances(u, u))
    return Outcome(gap > ctx.radius + ctx.eps_ax, {"p(x_n,x_m)": d, "|p(x_n,x_m)-p(u,u)|": gap})


@check(CheckName.CAUCHY_INDUCED, 2, "p^s(x_n,x_m) small for n, m in the tail")
def _cauchy_induced(ctx: CheckContext, xn: Packed, xm: Packed) -> Outcome:
    d = ctx.p.induced_distances(xn, xm)
    return Outcome(d > ctx.radius + ctx.eps_ax, {"p^s(x_n,x_m)": d})


@check(CheckName.UNIQUENESS, 2, "fixed points coincide")
def _unique(ctx: CheckContext, u: Packed, v: Packed) -> Outcome:
    d = ctx.p.distances(u, v)
    return Outcome(~ctx.same(u, v) | (d > ctx.radius + ctx.eps_ax), {"p(u,v)": d})


def run_check(
        name: CheckName,
        ctx: CheckContext,
        columns: tuple[Packed, ...],
        *,
        exhaustive: bool = False,
        notes: tuple[str, ...] = (),
        max_witnesses: int | None = None,
        samples_used: int | None = None,
        vacuous: bool = False,
) -> CheckResult:
    """
    Evaluate a registered check over aligned columns.

    Violations are de-duplicated, sorted by witness and truncated to
    `max_witnesses`; `violation_count` keeps the full tally. An evaluation
    failure is itself a violation, witnessed by the tuple that caused it.

    With no tuples the check is skipped, or passes when `vacuous` is set.
    `samples_used` overrides the reported count when the columns are a
    pre-filtered subset.
    """
    registered = CHECKS[name]
    if len(columns) != registered.arity:
        raise ValueError(f"{name} takes {registered.arity} columns, got {len(columns)}")
    size = len(columns[0]) if columns else 0
    used = size if samples_used is None else samples_used
    if size == 0:
        if vacuous:
            return CheckResult(name, CheckStatus.PASS, used, exhaustive=exhaustive, notes=(*notes, "vacuous"))
        return CheckResult.skipped(name, "no tuples to check", used)
    limit = get_settings().max_witnesses if max_witnesses is None else max_witnesses

    try:
        outcome = registered.predicate(ctx, *columns)
    except BatchEvaluationError as e:
        witness = tuple(element_at(c, e.index) for c in columns)
        violation = Violation(name, witness, (), f"{registered.message}: {e}")
        logger.debug("{} hit an evaluation error at {}", name, witness)
        return CheckResult(name, CheckStatus.FAIL, used, (violation,), 1, exhaustive, notes)

    found: dict[tuple[object, ...], Violation] = {}
    for i in np.flatnonzero(outcome.failed):
        witness = tuple(element_at(c, int(i)) for c in columns)
        if witness not in found:
            values = tuple((label, float(v[i])) for label, v in outcome.values.items())
            found[witness] = Violation(name, witness, values, registered.message)

    if not found:
        return CheckResult(name, CheckStatus.PASS, used, exhaustive=exhaustive, notes=notes)
    ordered = sorted(found.values(), key=Violation.sort_key)
    logger.debug("{} failed on {} of {} tuples", name, len(ordered), size)
    return CheckResult(name, CheckStatus.FAIL, used, tuple(ordered[:limit]), len(ordered), exhaustive, notes)


def replay_violation(violation: Violation, ctx: CheckContext) -> bool:
    """Re-run the violated check on the witness alone; True when it fails again."""
    registered = get_check(violation.check)
    columns = tuple(pack([w]) for w in violation.witness)
    try:
        return bool(registered.predicate(ctx, *columns).failed[0])
    except BatchEvaluationError:
        return True
