from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Outcome of an exact check.  Truthy iff the check passed."""

    check: str
    ok: bool
    witness: Any = None
    residual: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def __str__(self):
        status = "pass" if self.ok else "fail"
        out = f"{self.check}: {status}"
        if self.witness is not None:
            out += f" (witness {self.witness})"
        if self.residual is not None and not self.ok:
            out += f" residual {self.residual}"
        return out
