from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one verification: pass/fail, the first failing witness and
    free-form details."""

    name: str
    passed: bool
    witness: str | None = None
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        d = {"name": self.name, "passed": self.passed, "witness": self.witness,
             "details": self.details}
        if timing:
            d["seconds"] = round(self.seconds, 6)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["name"], d["passed"], d.get("witness"), d.get("details", {}),
                   d.get("seconds", 0.0))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.seconds:.3f}s)"
        if self.witness:
            text += f": {self.witness}"
        return text
