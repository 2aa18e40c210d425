from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import chain
from typing import Self

from pyfixpoint.core.element import Element, element_key
from pyfixpoint.shared.consts import UNIQUENESS_CHECKS, CheckName
from pyfixpoint.shared.types import CheckStatus, UnknownNameError


@dataclass(frozen=True, slots=True)
class Violation:
    """A concrete tuple at which a check fails, with the labelled values that show it."""

    check: CheckName
    witness: tuple[Element, ...]
    values: tuple[tuple[str, float], ...]
    message: str

    def sort_key(self) -> tuple[tuple[int, float], ...]:
        return tuple(element_key(e) for e in self.witness)

    def value(self, label: str) -> float:
        return dict(self.values)[label]


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: CheckName
    status: CheckStatus
    samples_used: int = 0
    violations: tuple[Violation, ...] = ()
    violation_count: int = 0
    exhaustive: bool = False
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if (self.status is CheckStatus.FAIL) != bool(self.violations):
            raise ValueError(f"{self.name}: a check fails exactly when it records a violation")

    @classmethod
    def skipped(cls, name: CheckName, reason: str, samples_used: int = 0) -> Self:
        return cls(name, CheckStatus.SKIPPED, samples_used=samples_used, notes=(reason,))

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL


@dataclass(frozen=True, slots=True)
class CertificateReport:
    """
    An ordered collection of check outcomes.

    Certifiers return fragments; `+` concatenates them. The seed and sample
    count are echoed when the fragment came from a seeded run.
    """

    checks: tuple[CheckResult, ...] = ()
    seed: int | None = None
    sample_count: int | None = None
    notes: tuple[str, ...] = field(default=())

    @classmethod
    def of(cls, checks: Iterable[CheckResult], **kwargs: object) -> Self:
        return cls(tuple(checks), **kwargs)  # pyright: ignore[reportArgumentType]

    def __add__(self, other: "CertificateReport") -> "CertificateReport":
        return CertificateReport(
            self.checks + other.checks,
            seed=self.seed if self.seed is not None else other.seed,
            sample_count=self.sample_count if self.sample_count is not None else other.sample_count,
            notes=self.notes + other.notes,
        )

    def __iter__(self):
        return iter(self.checks)

    def __contains__(self, name: object) -> bool:
        return any(c.name == name for c in self.checks)

    def __getitem__(self, name: CheckName | str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise UnknownNameError(f"no check named {name!r} in this report")

    def status(self, name: CheckName | str) -> CheckStatus:
        return self[name].status

    @property
    def passed(self) -> bool:
        """No existence hypothesis failed. Comparability and uniqueness failures are reported but not counted."""
        return not any(c.failed and c.name not in UNIQUENESS_CHECKS for c in self.checks)

    @property
    def all_passed(self) -> bool:
        return not any(c.failed for c in self.checks)

    @property
    def failed_checks(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if c.failed)

    @property
    def violations(self) -> tuple[Violation, ...]:
        return tuple(chain.from_iterable(c.violations for c in self.checks))

    def with_run(self, seed: int, sample_count: int) -> "CertificateReport":
        return CertificateReport(self.checks, seed=seed, sample_count=sample_count, notes=self.notes)
