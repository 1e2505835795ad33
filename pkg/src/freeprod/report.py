"""Validation reports: violations are data, never exceptions."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    axiom: str
    instance: tuple
    detail: str = ""

    def __str__(self):
        text = f"{self.axiom} at {_fmt(self.instance)}"
        return f"{text}: {self.detail}" if self.detail else text


def _fmt(x):
    if isinstance(x, tuple):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return str(x)


@dataclass
class Report:
    """Counts checked instances per axiom and records every failure."""

    subject: str = ""
    violations: list = field(default_factory=list)
    checked: Counter = field(default_factory=Counter)
    notes: dict = field(default_factory=dict)

    def check(self, axiom: str, ok: bool, instance: tuple = (), detail: str = "") -> bool:
        self.checked[axiom] += 1
        if not ok:
            self.violations.append(Violation(axiom, tuple(instance), detail))
        return ok

    def fail(self, axiom: str, instance: tuple = (), detail: str = ""):
        self.check(axiom, False, instance, detail)

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for k, v in other.checked.items():
            self.checked[prefix + k] += v
        for viol in other.violations:
            self.violations.append(Violation(prefix + viol.axiom, viol.instance, viol.detail))
        return self

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def failed_axioms(self) -> set:
        return {v.axiom for v in self.violations}

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": dict(sorted(self.checked.items())),
            "violations": [str(v) for v in self.violations],
            **({"notes": self.notes} if self.notes else {}),
        }

    def __str__(self):
        head = f"{self.subject or 'report'}: {'ok' if self.ok else 'FAILED'}"
        lines = [head] + [f"  {k}: {n} checked" for k, n in sorted(self.checked.items())]
        lines += [f"  violation: {v}" for v in self.violations]
        return "\n".join(lines)
