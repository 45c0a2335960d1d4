"""Verification reports shared by every checking routine.

Each check renders as one line ``STATUS subject m where lhs rhs``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
CONJECTURE_PASS = "CONJECTURE-PASS"
CONJECTURE_FAIL = "CONJECTURE-FAIL"
INFO = "INFO"

_FAILING = {FAIL, CONJECTURE_FAIL}
_TEXT_LIMIT = 72


def _compact(value: Any) -> str:
    text = "".join(str(value).split()) if value is not None else "-"
    if len(text) > _TEXT_LIMIT:
        text = text[: _TEXT_LIMIT - 3] + "..."
    return text or "-"


def _jsonable(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    to_json = getattr(value, "to_json", None)
    if to_json is not None:
        return to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


@dataclass
class Check:
    status: str
    subject: str
    m: Any = None
    where: str = "-"
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.status in _FAILING

    def line(self) -> str:
        m = "-" if self.m is None else str(self.m)
        parts = [self.status, self.subject, m, self.where, _compact(self.lhs), _compact(self.rhs)]
        if self.note:
            parts.append(f"# {self.note}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "subject": self.subject,
            "m": self.m,
            "where": self.where,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "note": self.note,
        }


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, ok: bool, subject: str, m: Any = None, where: str = "-", lhs: Any = None,
            rhs: Any = None, note: str = "", conjecture: bool = False) -> Check:
        if conjecture:
            status = CONJECTURE_PASS if ok else CONJECTURE_FAIL
        else:
            status = PASS if ok else FAIL
        check = Check(status, subject, m, where, lhs, rhs, note)
        self.checks.append(check)
        return check

    def info(self, subject: str, m: Any = None, where: str = "-", lhs: Any = None,
             rhs: Any = None, note: str = "") -> Check:
        check = Check(INFO, subject, m, where, lhs, rhs, note)
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self) -> bool:
        return not any(c.failed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.failed]

    def __len__(self) -> int:
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)

    def text(self) -> str:
        return "\n".join(c.line() for c in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)
