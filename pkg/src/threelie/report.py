"""Verification reports shared by every checker."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Defect:
    tuple: tuple
    value: object
    note: str = ""


@dataclass
class Report:
    """Outcome of a check: a list of defects plus optional sub-checks.

    ``passed`` holds iff there are no defects here or in any sub-check.
    """

    name: str
    defects: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.defects and all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def add(self, tup, value, note=""):
        self.defects.append(Defect(tuple(tup), value, note))

    def sub(self, name: str) -> Report:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self):
        """(check name, defect) of the first defect found, depth first."""
        if self.defects:
            return self.name, self.defects[0]
        for c in self.checks:
            hit = c.first_failure()
            if hit is not None:
                return hit
        return None

    def to_json(self, encode) -> dict:
        """``encode`` turns a defect value into JSON (vectors, tensors...)."""
        out = {
            "name": self.name,
            "passed": self.passed,
            "defects": [
                dict({"tuple": list(d.tuple), "defect": encode(d.value)},
                     **({"note": d.note} if d.note else {}))
                for d in self.defects
            ],
        }
        if self.checks:
            out["checks"] = [c.to_json(encode) for c in self.checks]
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def summary(self, indent: int = 0) -> str:
        pad = "  " * indent
        status = "pass" if self.passed else "FAIL"
        lines = [f"{pad}{self.name}: {status}"
                 + (f" ({len(self.defects)} defects)" if self.defects else "")]
        lines += [f"{pad}  note: {n}" for n in self.notes]
        for c in self.checks:
            lines.append(c.summary(indent + 1))
        return "\n".join(lines)
