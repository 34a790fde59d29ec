"""Exception types and the check report shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class MVTopError(Exception):
    """Base class for all errors raised by mvtop."""


class InputError(MVTopError, ValueError):
    """Malformed or inconsistent input (bad literal, unknown name, carrier mismatch...)."""


class ResourceError(MVTopError):
    """A computation would exceed the configured size limit."""


class ConsistencyError(MVTopError, AssertionError):
    """An internal invariant that the theory guarantees was found broken."""


DEFAULT_LIMIT = 10**6


@dataclass
class CheckReport:
    """Outcome of a named check.

    ``passed`` is derived: a report passes exactly when it carries no
    counterexamples.  ``notes`` holds informational remarks that do not
    affect the verdict (derived facts, qualifiers, discrepancies that are
    documented rather than failures).
    """

    name: str
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    qualifier: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, law: str, **witness: Any) -> None:
        self.counterexamples.append({"law": law, **witness})

    def merge(self, other: CheckReport, prefix: str | None = None) -> None:
        for cx in other.counterexamples:
            cx = dict(cx)
            if prefix:
                cx["law"] = f"{prefix}:{cx['law']}"
            self.counterexamples.append(cx)
        self.notes.extend(other.notes)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
        }
        if self.notes:
            out["notes"] = self.notes
        if self.qualifier:
            out["qualifier"] = self.qualifier
        if self.details:
            out["details"] = self.details
        return out

    def __str__(self) -> str:
        head = f"{self.name}: {'PASS' if self.passed else 'FAIL'}"
        if self.qualifier:
            head += f" ({self.qualifier})"
        lines = [head]
        for cx in self.counterexamples[:20]:
            lines.append("  - " + ", ".join(f"{k}={v}" for k, v in cx.items()))
        if len(self.counterexamples) > 20:
            lines.append(f"  ... {len(self.counterexamples) - 20} more")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)
