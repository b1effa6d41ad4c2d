"""Report-valued validation results.

Validators in this package never raise on a failed property; they return a
Report listing every check with a witness for each failure, so callers (and
the CLI) can show all problems at once.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: object = None

    def __str__(self):
        status = "pass" if self.ok else "FAIL"
        if self.ok or self.witness is None:
            return f"{status} {self.name}"
        return f"{status} {self.name}: {self.witness!r}"


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, name, ok, witness=None):
        self.checks.append(Check(name, bool(ok), witness))

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)

    def to_json(self):
        return [
            {"name": c.name, "ok": c.ok, "witness": repr(c.witness) if c.witness is not None else None}
            for c in self.checks
        ]
