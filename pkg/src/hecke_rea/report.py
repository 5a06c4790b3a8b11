"""Pass/fail bookkeeping shared by all verification routines."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    witness: Optional[Any] = None
    detail: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class CheckReport:
    """An ordered list of checks.  Truthiness means "nothing failed"."""

    title: str = ""
    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, witness=None, detail: str | None = None) -> bool:
        self.checks.append(Check(name, PASS if passed else FAIL, None if passed else witness, detail))
        return passed

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, SKIP, None, reason))

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "status": PASS if self.ok else FAIL,
            "checks": [c.to_json() for c in self.checks],
            "values": _jsonable(self.values),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    def __str__(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            extra = f"  witness={c.witness}" if c.witness is not None else ""
            why = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  [{c.status}] {c.name}{extra}{why}")
        return "\n".join(lines)
