"""Structured pass/fail reports for axiom and morphism checks.

A report is a list of named check items plus a metadata dict (dimensions,
ranks, certificate digests).  Items are kept sorted by (name, witness) so
report assembly is order independent, and rendering is deterministic:
identical inputs give byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction


def fmt_scalar(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v) -> str:
    return "(" + ",".join(fmt_scalar(x) for x in v) + ")"


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: str = ""
    left: str = ""
    right: str = ""

    def line(self) -> str:
        s = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        if self.witness:
            s += f" [{self.witness}]"
        if not self.passed and (self.left or self.right):
            s += f" left={self.left} right={self.right}"
        return s


@dataclass
class Report:
    title: str = ""
    items: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, witness: str = "",
            left: str = "", right: str = "") -> bool:
        self.items.append(CheckItem(name, bool(passed), witness, left, right))
        return bool(passed)

    def require(self, name: str, passed: bool, witness: str = "",
                left: str = "", right: str = "") -> None:
        """Record a check only when it fails (for per-tuple sweeps)."""
        if not passed:
            self.items.append(CheckItem(name, False, witness, left, right))

    def sweep(self, name: str, failures_before: int) -> None:
        """Summarize a sweep: add one PASS item when no failure was recorded."""
        if len(self.items) == failures_before:
            self.items.append(CheckItem(name, True))

    def extend(self, other: "Report", prefix: str = "") -> None:
        for it in other.items:
            name = f"{prefix}{it.name}" if prefix else it.name
            self.items.append(CheckItem(name, it.passed, it.witness, it.left, it.right))
        for k, v in other.meta.items():
            key = f"{prefix}{k}" if prefix else k
            self.meta[key] = v

    @property
    def ok(self) -> bool:
        return all(it.passed for it in self.items)

    def failures(self) -> list:
        return [it for it in self.items if not it.passed]

    def sorted_items(self) -> list:
        return sorted(self.items, key=lambda it: (it.name, it.witness))

    # -- rendering ----------------------------------------------------------

    def text(self) -> str:
        lines = []
        if self.title:
            lines.append(f"== {self.title} ==")
        lines.extend(it.line() for it in self.sorted_items())
        for k in sorted(self.meta):
            lines.append(f"  {k}: {self.meta[k]}")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)

    def to_obj(self) -> dict:
        return {
            "title": self.title,
            "checks": [
                {"name": it.name, "status": "pass" if it.passed else "fail",
                 **({"witness": it.witness} if it.witness else {}),
                 **({"left": it.left, "right": it.right}
                    if not it.passed and (it.left or it.right) else {})}
                for it in self.sorted_items()
            ],
            "meta": {k: self.meta[k] for k in sorted(self.meta)},
            "result": "pass" if self.ok else "fail",
        }

    def structured(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, indent=1)


def digest(obj) -> str:
    """Stable sha256 digest of a JSON-serializable certificate."""
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]
