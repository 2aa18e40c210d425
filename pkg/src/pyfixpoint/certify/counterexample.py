"""
Sharpness exploration: drop one hypothesis and look for the conclusion failing.

Each search walks a seeded set of start points (x0 first) and returns the first
violation it finds, as a `Violation` that `replay_violation` reproduces under
the instance's own context.
"""
from dataclasses import replace

from loguru import logger

from pyfixpoint.certify.checks import get_check
from pyfixpoint.certify.report import Violation
from pyfixpoint.core.element import Element
from pyfixpoint.core.functions import ControlFunction
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.expr import Num
from pyfixpoint.shared.consts import CheckName, Mutation
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError, EvaluationError, UnknownNameError
from pyfixpoint.solve.diagnostics import descent_check
from pyfixpoint.solve.picard import picard_solve, verify_fixed_point


def _candidates(instance: ProblemInstance, budget: int, seed: int) -> list[Element]:
    found: list[Element] = [instance.x0]
    for e in instance.space.sample(budget, seed):
        if e not in found:
            found.append(e)
    return found[:budget]


def _starts(instance: ProblemInstance, budget: int, seed: int) -> list[Element]:
    """Candidates satisfying x <= f(x)."""
    starts = []
    for s in _candidates(instance, budget, seed):
        try:
            if instance.order.leq(s, instance.map(s)):
                starts.append(s)
        except EvaluationError:
            continue
    return starts


def _unlinked_fixed_points(instance: ProblemInstance, budget: int, seed: int) -> Violation | None:
    candidates = _candidates(instance, budget, seed)
    fixed = []
    for u in candidates:
        try:
            if verify_fixed_point(instance.space, instance.map, u).holds(instance.tol):
                fixed.append(u)
        except (EvaluationError, DomainError):
            continue

    order, space = instance.order, instance.space
    for i, u in enumerate(fixed):
        for v in fixed[i + 1:]:
            if space.same_point(u, v):
                continue
            if any(order.comparable(z, u) and order.comparable(z, v) for z in candidates):
                continue
            message = f"{get_check(CheckName.UNIQUENESS).message}: two fixed points with no common comparable point"
            return Violation(CheckName.UNIQUENESS, (u, v), (("p(u,v)", space.distance(u, v)),), message)
    return None


def _non_expanding_orbit(instance: ProblemInstance, budget: int, seed: int) -> Violation | None:
    steps = min(instance.max_iter, get_settings().orbit_probe_steps)
    mutated = replace(instance, psi=ControlFunction(Num(0.0)), banach_c=None, max_iter=steps)
    for start in _starts(instance, budget, seed):
        result = picard_solve(replace(mutated, x0=start))
        trace = result.trace
        expanding = any(later > earlier + instance.eps_ax for earlier, later in zip(trace.rho, trace.rho[1:]))
        if expanding or result.fixed_point is not None:
            continue
        report = descent_check(trace, instance.control)
        if violations := report[CheckName.DESCENT].violations:
            return violations[0]
    return None


def _broken_chain(instance: ProblemInstance, budget: int, seed: int) -> Violation | None:
    steps = min(instance.max_iter, get_settings().orbit_probe_steps)
    order, f = instance.order, instance.map
    for start in _starts(instance, budget, seed):
        x = start
        for n in range(steps):
            nxt = f(x)
            if not order.leq(x, nxt):
                message = f"{get_check(CheckName.ORDER_CHAIN).message}: the orbit leaves its chain"
                return Violation(CheckName.ORDER_CHAIN, (x, nxt), (("n", float(n)),), message)
            if nxt == x:
                break
            x = nxt
    return None


def search_counterexample(
        instance: ProblemInstance,
        mutation: Mutation | str,
        budget: int,
        seed: int | None = None,
) -> Violation | None:
    """
    Look for a witness that the conclusion fails once `mutation` is dropped.

    comparability: two distinct fixed points with no common comparable point.
    psi_positivity: with psi replaced by 0 the orbit still does not expand,
    yet reaches no fixed point; the witness is a descent violation under the
    instance's own psi. monotonicity: an orbit step x_n -> x_(n+1) with
    x_n not below x_(n+1).

    `budget` caps the candidate points tried.
    """
    if budget < 1:
        raise DomainError(f"search budget must be at least 1, got {budget}")
    try:
        mutation = Mutation(mutation)
    except ValueError:
        raise UnknownNameError(f"unknown mutation {mutation!r}; choose from {', '.join(Mutation)}") from None
    seed = instance.seed if seed is None else seed
    logger.debug("searching {} for a {} counterexample, budget {}", instance.label, mutation, budget)

    match mutation:
        case Mutation.COMPARABILITY:
            return _unlinked_fixed_points(instance, budget, seed)
        case Mutation.PSI_POSITIVITY:
            return _non_expanding_orbit(instance, budget, seed)
        case Mutation.MONOTONICITY:
            return _broken_chain(instance, budget, seed)
