"""Verification reports: named pass/fail results with a first-mismatch witness."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import format_scalar


def render(value) -> str:
    """Canonical text for any exact value (rationals as "p/q")."""
    if isinstance(value, (int, Fraction)):
        return format_scalar(value)
    return str(value)


@dataclass(frozen=True)
class Witness:
    index: int
    lhs: str
    rhs: str
    label: str = ""

    def to_dict(self) -> dict:
        return {"index": self.index, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    name: str
    passed: bool
    order: int
    witness: Witness | None = None
    notes: str = ""
    resolution: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError(f"{self.name}: pass flag and witness disagree")

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        notes = self.notes
        if self.resolution:
            res = "; ".join(f"{k}: {v}" for k, v in sorted(self.resolution.items()))
            notes = f"{notes} [resolved: {res}]" if notes else f"[resolved: {res}]"
        if self.witness is not None and self.witness.label:
            notes = f"{notes} [witness: {self.witness.label}]".strip()
        return {
            "name": self.name,
            "pass": self.passed,
            "order": self.order,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "notes": notes,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} (order {self.order})"
        if self.witness is not None:
            w = self.witness
            where = f" {w.label}" if w.label else ""
            line += f": mismatch at index {w.index}{where}: {w.lhs} != {w.rhs}"
        return line


def first_mismatch(lhs: Sequence, rhs: Sequence, label: str = "",
                   start: int = 0) -> Witness | None:
    """First index where two coefficient sequences differ, or None."""
    if len(lhs) != len(rhs):
        n = min(len(lhs), len(rhs))
        return Witness(n, f"<length {len(lhs)}>", f"<length {len(rhs)}>", label)
    for i, (a, b) in enumerate(zip(lhs, rhs)):
        if i >= start and a != b:
            return Witness(i, render(a), render(b), label)
    return None


def compare(name: str, lhs: Sequence, rhs: Sequence, order: int,
            notes: str = "", label: str = "") -> VerificationReport:
    w = first_mismatch(list(lhs), list(rhs), label)
    return VerificationReport(name, w is None, order, w, notes)


class CheckBuilder:
    """Accumulates sub-comparisons; the first failure becomes the witness."""

    def __init__(self, name: str, order: int):
        self.name = name
        self.order = order
        self.witness: Witness | None = None
        self.notes: list[str] = []
        self.resolution: dict = {}

    def compare(self, lhs: Sequence, rhs: Sequence, label: str = "") -> bool:
        w = first_mismatch(list(lhs), list(rhs), label)
        if w is not None and self.witness is None:
            self.witness = w
        return w is None

    def require(self, ok: bool, label: str, lhs="", rhs="", index: int = -1) -> bool:
        if not ok and self.witness is None:
            self.witness = Witness(index, render(lhs), render(rhs), label)
        return ok

    def note(self, text: str):
        self.notes.append(text)

    def absorb(self, report: VerificationReport):
        if report.witness is not None and self.witness is None:
            self.witness = Witness(report.witness.index, report.witness.lhs,
                                   report.witness.rhs,
                                   f"{report.name} {report.witness.label}".strip())
        if report.notes:
            self.notes.append(report.notes)
        self.resolution.update(report.resolution)

    def build(self) -> VerificationReport:
        return VerificationReport(self.name, self.witness is None, self.order,
                                  self.witness, "; ".join(self.notes), dict(self.resolution))


def merge(name: str, reports: Iterable[VerificationReport], order: int) -> VerificationReport:
    b = CheckBuilder(name, order)
    for r in reports:
        b.absorb(r)
    return b.build()
