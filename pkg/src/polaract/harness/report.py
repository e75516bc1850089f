"""Verification records, summaries and deterministic JSON output."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

PASS, FAIL, INCONCLUSIVE, SKIPPED = "pass", "fail", "inconclusive", "skipped"
OUTCOMES = (PASS, FAIL, INCONCLUSIVE, SKIPPED)


def round_sig(x: float, digits: int = 3) -> float:
    """Round to significant digits so that last-bit noise does not reach the report."""
    if x == 0 or not math.isfinite(x):
        return x
    return float(f"{x:.{digits - 1}e}")


def _clean(obj):
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return _clean(obj.item())
    return obj


@dataclass
class Record:
    id: str
    outcome: str
    expected: object = None
    measured: object = None
    residuals: dict = field(default_factory=dict)
    seed: int | None = None
    note: str = ""
    elapsed: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        d = {"id": self.id, "outcome": self.outcome, "expected": self.expected,
             "measured": self.measured, "residuals": self.residuals, "seed": self.seed}
        if self.note:
            d["note"] = self.note
        if timing and self.elapsed is not None:
            d["elapsed"] = round(self.elapsed, 3)
        return _clean(d)


@dataclass
class VerificationReport:
    name: str
    records: list = field(default_factory=list)

    def add(self, record: Record) -> None:
        self.records.append(record)

    def extend(self, other: "VerificationReport") -> None:
        self.records.extend(other.records)

    def summary(self) -> dict:
        counts = {k: 0 for k in OUTCOMES}
        for r in self.records:
            counts[r.outcome] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def exit_code(self) -> int:
        s = self.summary()
        if s[FAIL]:
            return 1
        if s[INCONCLUSIVE]:
            return 2
        return 0

    def to_dict(self, timing: bool = False) -> dict:
        recs = sorted(self.records, key=lambda r: r.id)
        return {"report": self.name, "fixtures": [r.to_dict(timing) for r in recs],
                "summary": self.summary()}

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def lines(self) -> list[str]:
        out = [f"{r.outcome.upper():12s} {r.id}" + (f"  ({r.note})" if r.note else "")
               for r in sorted(self.records, key=lambda r: r.id)]
        s = self.summary()
        out.append(", ".join(f"{k}={s[k]}" for k in (*OUTCOMES, "total")))
        return out
