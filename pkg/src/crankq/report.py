"""Outcome record for a single verification task."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

__all__ = ["CheckReport"]


@dataclass(frozen=True)
class CheckReport:
    """Result of one verification task.

    ``witness`` is present exactly when the task failed and points at the
    smallest offending index (exponent, progression step, grid point ...)
    together with whatever residue or mismatch was observed there.
    """

    task: str
    params: dict[str, Any] = field(default_factory=dict)
    order: int = 0
    outcome: str = "pass"
    witness: Optional[dict[str, Any]] = None
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.outcome not in ("pass", "fail"):
            raise ValueError(f"outcome must be 'pass' or 'fail', got {self.outcome!r}")
        if self.outcome == "fail" and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_dict(self, include_timing: bool = True) -> dict[str, Any]:
        """Plain dict with a stable key order, for JSON serialization."""
        out: dict[str, Any] = {
            "task": self.task,
            "params": self.params,
            "order": self.order,
            "outcome": self.outcome,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if include_timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=False)

    def text_line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        bits = [f"{tag} {self.task}"]
        if self.params:
            bits.append("(" + ", ".join(f"{k}={v}" for k, v in self.params.items()) + ")")
        if self.order:
            bits.append(f"order={self.order}")
        if self.witness is not None:
            bits.append("witness=" + json.dumps(self.witness, sort_keys=False))
        bits.append(f"[{self.elapsed_ms} ms]")
        return " ".join(bits)
