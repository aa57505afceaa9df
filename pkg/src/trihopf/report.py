"""Axiom-by-axiom verification reports."""
from __future__ import annotations

from dataclasses import dataclass, field


def _jsonable(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


@dataclass
class Check:
    axiom: str
    ok: bool
    witness: object = None

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "ok": self.ok}
        if not self.ok:
            out["witness"] = _jsonable(self.witness)
        return out


@dataclass
class Report:
    subject: str
    checks: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def check(self, axiom: str, ok: bool, witness=None) -> bool:
        self.checks.append(Check(axiom, bool(ok), witness))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def failed(self, axiom: str) -> bool:
        return any(c.axiom == axiom and not c.ok for c in self.checks)

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(Check(prefix + c.axiom, c.ok, c.witness))
        for k, v in other.info.items():
            self.info[prefix + k] = v
        return self

    def profile(self) -> tuple:
        """Axiom names with pass/fail, the shape compared between presentations."""
        return tuple((c.axiom, c.ok) for c in self.checks)

    def to_json(self) -> dict:
        return {"subject": self.subject, "ok": self.ok,
                "checks": [c.to_json() for c in self.checks],
                "info": _jsonable(self.info)}

    def __bool__(self) -> bool:
        return self.ok
