"""Verdict and report records shared by every checker."""

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    witness: Any = None

    def to_json(self):
        out = {"name": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = jsonify(self.witness)
        return out


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    tag: str = ""

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail="", witness=None):
        self.checks.append(Check(name, bool(ok), detail, witness))
        return ok

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self):
        return {
            "title": self.title,
            "tag": self.tag,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }

    def __str__(self):
        lines = ["%s [%s]: %s" % (self.title, self.tag, "PASS" if self.ok else "FAIL")]
        for c in self.checks:
            lines.append("  %-4s %s%s" % ("ok" if c.ok else "FAIL", c.name,
                                          (" -- " + c.detail) if c.detail else ""))
        return "\n".join(lines)


def jsonify(obj):
    """Convert matrices, field elements and containers to plain JSON data."""
    from fractions import Fraction
    from .exactla import Mat

    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, Mat):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else str(obj.numerator)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonify(x) for x in obj]
    return str(obj)
