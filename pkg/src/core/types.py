"""
Core Type Definitions

Result containers shared by the families, workflows and the CLI.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

STATUS_OK = "ok"
STATUS_ERROR = "error"


@dataclass
class CheckResult:
    """
    One pass/fail item of a certificate.

    Attributes:
        name: short identifier of the check (e.g. "membership")
        passed: outcome
        message: human summary
        witness: counterexample or supporting data, JSON-ready
    """

    name: str
    passed: bool
    message: str = ""
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {"name": self.name, "passed": self.passed, "message": self.message}
        if self.witness is not None:
            data["witness"] = self.witness
        return data


@dataclass
class Certificate:
    """
    Outcome of certifying a family or a construction.

    A certificate never raises on a failed check; failures are recorded
    together with their witnesses.
    """

    subject: str
    field: str
    checks: List[CheckResult] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, message: str = "", witness: Dict[str, Any] = None) -> CheckResult:
        check = CheckResult(name, bool(passed), message, witness)
        self.checks.append(check)
        return check

    def check(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def validate(self) -> List[str]:
        errors = []
        if not self.checks:
            errors.append("certificate carries no checks")
        names = [c.name for c in self.checks]
        if len(names) != len(set(names)):
            errors.append("duplicate check names")
        return errors

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "field": self.field,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "details": self.details,
        }


@dataclass
class CommandResult:
    """
    What a CLI subcommand produced.

    Attributes:
        command: echo of the subcommand and its options
        status: "ok" or "error"
        payload: subcommand-specific JSON-ready data
        elapsed: wall time in seconds (kept out of the JSON form)
    """

    command: Dict[str, Any]
    status: str = STATUS_OK
    payload: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def validate(self) -> List[str]:
        errors = []
        if self.status not in (STATUS_OK, STATUS_ERROR):
            errors.append(f"unknown status {self.status!r}")
        if "name" not in self.command:
            errors.append("command echo has no name")
        return errors

    def to_dict(self) -> Dict[str, Any]:
        return {"command": self.command, "status": self.status, "payload": self.payload}
