"""Check reports and their deterministic serialization."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"


@dataclass
class CheckReport:
    id: str
    params: dict[str, Any]
    verdict: str
    witness: dict[str, Any] | None = None
    elapsed_ms: float | None = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id,
            "params": {k: self.params.get(k) for k in ("n", "m", "D", "trials", "seed")},
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        # wall-clock time would break byte-identical reruns, so it is opt-in
        out["elapsed_ms"] = round(self.elapsed_ms, 3) if timings and self.elapsed_ms is not None else None
        return out

    def to_text(self, timings: bool = False) -> str:
        p = self.params
        shown = " ".join(f"{k}={p[k]}" for k in ("n", "m", "D", "trials", "seed") if p.get(k) is not None)
        line = f"{self.verdict.upper():4} {self.id}" + (f" [{shown}]" if shown else "")
        if timings and self.elapsed_ms is not None:
            line += f" {self.elapsed_ms:.1f} ms"
        if self.witness is not None:
            line += "\n     witness: " + json.dumps(self.witness, sort_keys=True, ensure_ascii=False)
        return line


def make_params(n=None, m=None, D=None, trials=None, seed=None) -> dict[str, Any]:
    return {"n": n, "m": m, "D": D, "trials": trials, "seed": seed}


def reports_to_json(reports: list[CheckReport], timings: bool = False) -> str:
    body = {
        "reports": [r.to_dict(timings) for r in reports],
        "summary": {
            "total": len(reports),
            "passed": sum(r.passed for r in reports),
            "failed": sum(not r.passed for r in reports),
        },
    }
    return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def reports_to_text(reports: list[CheckReport], timings: bool = False) -> str:
    lines = [r.to_text(timings) for r in reports]
    ok = sum(r.passed for r in reports)
    lines.append(f"{ok}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"
