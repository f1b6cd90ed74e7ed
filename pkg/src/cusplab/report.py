"""Structured verification reports and their text / JSON serialisations."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, fields, is_dataclass
from fractions import Fraction

__all__ = ["Check", "Report", "jsonable"]


def jsonable(x):
    """Convert exact values to JSON data (exact scalars become strings)."""
    from .linalg import Matrix
    from .lattice import GramLattice, LatticeVector

    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, (int, float)):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, Matrix):
        return [[jsonable(v) for v in r] for r in x.rows]
    if isinstance(x, GramLattice):
        return {"gram": jsonable(x.gram), "labels": list(x.labels)}
    if isinstance(x, LatticeVector):
        return [jsonable(c) for c in x.coords]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in x]
        if isinstance(x, (set, frozenset)):
            items.sort(key=lambda v: json.dumps(v, sort_keys=True))
        return items
    if hasattr(x, "to_json"):
        return x.to_json()
    if is_dataclass(x):
        return {f.name: jsonable(getattr(x, f.name)) for f in fields(x)}
    return str(x)


@dataclass
class Check:
    name: str
    passed: bool
    witness: object = None

    def __post_init__(self):
        self.passed = bool(self.passed)
        self.witness = jsonable(self.witness)

    def to_json(self):
        return {"name": self.name, "pass": self.passed, "witness": self.witness}


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    wall_time: float | None = None

    def __post_init__(self):
        self.inputs = jsonable(self.inputs)

    def add(self, name, passed, witness=None) -> Check:
        c = Check(name, passed, witness)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self):
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }
        if self.wall_time is not None:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"

    @classmethod
    def loads(cls, text: str) -> "Report":
        data = json.loads(text)
        r = cls(data["command"], data.get("inputs", {}), wall_time=data.get("wall_time_s"))
        for c in data["checks"]:
            r.checks.append(Check(c["name"], c["pass"], c["witness"]))
        return r

    def to_text(self) -> str:
        lines = [f"{self.command}"]
        for c in self.checks:
            w = "" if c.witness is None else "  " + json.dumps(c.witness)
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}{w}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        if self.wall_time is not None:
            lines.append(f"wall time: {self.wall_time:.3f} s")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return isinstance(other, Report) and self.to_json() == other.to_json()
