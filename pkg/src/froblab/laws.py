"""Pass/fail records for exact law checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .matrix import MatMorphism


class LawCheckError(ValueError):
    """A construction was refused because a required law failed."""

    def __init__(self, message: str, report: Optional["LawReport"] = None):
        super().__init__(message)
        self.report = report


def serialize_morphism(f: MatMorphism) -> dict:
    return {"dom": [list(x) for x in f.dom.factors],
            "cod": [list(x) for x in f.cod.factors],
            "matrix": f.to_strings()}


@dataclass
class LawEntry:
    law: str
    objects: str
    passed: bool
    lhs: Optional[MatMorphism] = None
    rhs: Optional[MatMorphism] = None
    note: str = ""

    @property
    def name(self) -> str:
        return f"{self.law}({self.objects})" if self.objects else self.law

    def to_dict(self) -> dict:
        out = {"law": self.law, "objects": self.objects, "passed": self.passed}
        if self.note:
            out["note"] = self.note
        if not self.passed and self.lhs is not None:
            out["witness"] = {"lhs": serialize_morphism(self.lhs),
                              "rhs": serialize_morphism(self.rhs)}
        return out


@dataclass
class LawReport:
    title: str = ""
    entries: list[LawEntry] = field(default_factory=list)

    def check(self, law: str, lhs: MatMorphism, rhs: MatMorphism, objects: str = "") -> bool:
        ok = (lhs.dom == rhs.dom and lhs.cod == rhs.cod and lhs == rhs)
        self.entries.append(LawEntry(law, objects, ok, lhs, rhs))
        return ok

    def record(self, law: str, passed: bool, objects: str = "", note: str = "") -> bool:
        self.entries.append(LawEntry(law, objects, bool(passed), note=note))
        return passed

    def extend(self, other: "LawReport", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(LawEntry(prefix + e.law, e.objects, e.passed, e.lhs, e.rhs, e.note))

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[LawEntry]:
        return [e for e in self.entries if not e.passed]

    def failed_laws(self) -> set[str]:
        return {e.law for e in self.failures}

    def laws(self) -> set[str]:
        return {e.law for e in self.entries}

    def passed(self, law: str) -> bool:
        """True when every entry of ``law`` passed (and there is at least one)."""
        hits = [e for e in self.entries if e.law == law]
        return bool(hits) and all(e.passed for e in hits)

    def subset(self, laws) -> "LawReport":
        laws = set(laws)
        return LawReport(self.title, [e for e in self.entries if e.law in laws])

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok,
                "checked": len(self.entries), "failed": len(self.failures),
                "entries": [e.to_dict() for e in self.entries]}

    def __repr__(self):
        return f"LawReport({self.title!r}, {len(self.entries)} checked, failed={sorted(self.failed_laws())})"
