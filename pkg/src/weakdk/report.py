"""Structured verification reports with counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

MAX_WITNESSES = 16


def _plain(x: Any) -> Any:
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


@dataclass
class Witness:
    indices: tuple
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    def to_dict(self) -> dict:
        d = {"indices": _plain(self.indices), "lhs": _plain(self.lhs), "rhs": _plain(self.rhs)}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Law:
    """One named law; records every violation seen (up to a cap)."""

    name: str
    checked: int = 0
    violations: int = 0
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def expect(self, lhs, rhs, *indices, note: str = "") -> bool:
        """Record one evaluation of ``lhs == rhs`` at the given basis indices."""
        self.checked += 1
        if lhs == rhs:
            return True
        self.fail(*indices, lhs=lhs, rhs=rhs, note=note)
        return False

    def expect_true(self, ok: bool, *indices, lhs=None, rhs=None, note: str = "") -> bool:
        self.checked += 1
        if ok:
            return True
        self.fail(*indices, lhs=lhs, rhs=rhs, note=note)
        return False

    def fail(self, *indices, lhs=None, rhs=None, note: str = "") -> None:
        self.violations += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(Witness(tuple(indices), lhs, rhs, note))

    def failing_indices(self) -> list[tuple]:
        return [w.indices for w in self.witnesses]

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": "pass" if self.passed else "fail",
             "checked": self.checked}
        if not self.passed:
            d["violations"] = self.violations
            d["witness"] = self.witness.to_dict()
        return d


class Report:
    """Ordered collection of laws; the verdict passes iff every law passes."""

    def __init__(self, subject: str):
        self.subject = subject
        self.laws: list[Law] = []
        self._by_name: dict[str, Law] = {}

    def law(self, name: str) -> Law:
        if name not in self._by_name:
            law = Law(name)
            self.laws.append(law)
            self._by_name[name] = law
        return self._by_name[name]

    def __getitem__(self, name: str) -> Law:
        return self._by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failed(self) -> list[Law]:
        return [law for law in self.laws if not law.passed]

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for law in other.laws:
            name = prefix + law.name
            mine = self.law(name)
            mine.checked += law.checked
            mine.violations += law.violations
            room = MAX_WITNESSES - len(mine.witnesses)
            mine.witnesses.extend(law.witnesses[:max(room, 0)])
        return self

    def to_dict(self) -> dict:
        return {"subject": self.subject, "verdict": self.verdict,
                "laws": [law.to_dict() for law in self.laws]}

    def summary(self) -> str:
        lines = ["%s: %s" % (self.subject, self.verdict.upper())]
        for law in self.laws:
            mark = "ok  " if law.passed else "FAIL"
            line = "  [%s] %s (%d checked)" % (mark, law.name, law.checked)
            if not law.passed:
                w = law.witness
                line += " witness=%s" % (list(w.indices),)
            lines.append(line)
        return "\n".join(lines)

    def __repr__(self):
        return "Report(%r, %s, %d laws)" % (self.subject, self.verdict, len(self.laws))


class VerificationError(Exception):
    """A construction produced an object that fails its own checker."""

    def __init__(self, message: str, report: Report | None = None):
        if report is not None:
            bad = ", ".join(law.name for law in report.failed())
            message = "%s (failed: %s)" % (message, bad)
        super().__init__(message)
        self.report = report
