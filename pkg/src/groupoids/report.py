"""Violation reports shared by every validator, plus the exception hierarchy.

Validators never raise on a broken axiom: they return a report whose
violations carry the rule that failed and the identifiers witnessing the
failure.  Exceptions are reserved for inputs that are not even well-formed
enough to check.
"""

from __future__ import annotations

from dataclasses import dataclass


class GroupoidError(Exception):
    """Base for structural problems with an input (not axiom violations)."""


class MalformedStructure(GroupoidError):
    """A structure map is not total or references an undeclared identifier."""


class MalformedTable(MalformedStructure):
    """A group table is not total over its declared element set."""


class UnknownObject(GroupoidError):
    pass


class UnknownArrow(GroupoidError):
    pass


class EmptySet(GroupoidError):
    pass


class InvalidGroup(GroupoidError):
    pass


class InvalidInput(GroupoidError):
    pass


class NonCommutativeGroup(GroupoidError):
    """Raised with a witness pair when a commutative group is required."""

    def __init__(self, message: str, witness: tuple[str, str] | None = None):
        super().__init__(message)
        self.witness = witness


class NotComposable(GroupoidError):
    pass


class DomainMismatch(GroupoidError):
    pass


class NotSubset(GroupoidError):
    pass


class InternalCheckFailed(GroupoidError):
    """A consequence that must hold for every valid input failed.

    Either the input breaks a precondition it was claimed to satisfy, or this
    library has a bug; both deserve a loud stop rather than a quiet report.
    """


@dataclass(frozen=True, order=True)
class Violation:
    """One broken rule together with the identifiers that witness it."""

    rule: str
    witness: tuple[str, ...]
    message: str


@dataclass(frozen=True, order=True)
class Note:
    """A non-failure remark: a skipped or not-applicable check, or an info line."""

    rule: str
    status: str  # "skipped" | "not-applicable" | "warning" | "info"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Deterministically ordered outcome of one validator run."""

    violations: tuple[Violation, ...] = ()
    notes: tuple[Note, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def by_rule(self, rule: str) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.rule == rule)

    def rules(self) -> tuple[str, ...]:
        """Distinct violated rules, in report (sorted) order."""
        return tuple(dict.fromkeys(v.rule for v in self.violations))

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [
                {"rule": v.rule, "witness": list(v.witness), "message": v.message}
                for v in self.violations
            ],
            "notes": [
                {"rule": n.rule, "status": n.status, "message": n.message}
                for n in self.notes
            ],
        }


class ReportBuilder:
    """Accumulates violations and notes; ``build`` emits them sorted."""

    def __init__(self) -> None:
        self._violations: list[Violation] = []
        self._notes: list[Note] = []

    @property
    def clean(self) -> bool:
        return not self._violations

    def violation(self, rule: str, witness, message: str) -> None:
        self._violations.append(
            Violation(rule, tuple(str(w) for w in witness), message)
        )

    def note(self, rule: str, status: str, message: str) -> None:
        self._notes.append(Note(rule, status, message))

    def absorb(self, report: ValidationReport, prefix: str = "") -> None:
        for v in report.violations:
            self._violations.append(Violation(prefix + v.rule, v.witness, v.message))
        for n in report.notes:
            self._notes.append(Note(prefix + n.rule, n.status, n.message))

    def build(self) -> ValidationReport:
        return ValidationReport(
            tuple(sorted(self._violations)), tuple(sorted(self._notes))
        )
