from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a structural check; truthy iff it passed."""

    name: str
    passed: bool
    checked: int = 0
    violations: list = field(default_factory=list)
    witness: str | None = None

    def __bool__(self):
        return self.passed

    def fail(self, msg) -> None:
        self.passed = False
        self.violations.append(str(msg))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": list(self.violations),
            "witness": self.witness,
        }
