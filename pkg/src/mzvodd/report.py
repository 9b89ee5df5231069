"""Pass/fail records produced by the verification routines.

Proved identities go into ``checks`` and decide ``passed``; conjectural
comparisons go into ``observations`` and never fail a report.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List


class VerificationError(AssertionError):
    pass


@dataclass
class Check:
    name: str
    ok: bool
    detail: Dict[str, Any] = field(default_factory=dict)


@dataclass
class Report:
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    observations: List[Check] = field(default_factory=list)
    values: Dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, ok: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def observe(self, name: str, holds: bool, **detail) -> bool:
        self.observations.append(Check(name, bool(holds), detail))
        return bool(holds)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.detail))
        for c in other.observations:
            self.observations.append(Check(prefix + c.name, c.ok, c.detail))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "values": self.values,
            "checks": [{"name": c.name, "ok": c.ok, **_jsonable(c.detail)} for c in self.checks],
            "observations": [{"name": c.name, "holds": c.ok, **_jsonable(c.detail)} for c in self.observations],
        }

    def raise_on_failure(self) -> "Report":
        bad = self.failures()
        if bad:
            raise VerificationError(f"{self.name}: {len(bad)} failed check(s), first: {bad[0].name} {bad[0].detail}")
        return self


def _jsonable(d: Dict[str, Any]) -> Dict[str, Any]:
    out = {}
    for k, v in d.items():
        if isinstance(v, tuple):
            v = list(v)
        out[k] = v
    return out
