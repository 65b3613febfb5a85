"""Machine-readable suite reports.

A suite run is a list of named checks, each pass/fail/skip/precondition with
optional witnesses and timing.  Exit code 0 means no check failed; caps and
usage problems surface as distinct process exit codes in the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
PRECONDITION = "precondition"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    witnesses: list = field(default_factory=list)
    seconds: float = 0.0
    truncated: bool = False


@dataclass
class SuiteReport:
    suite: str
    params: dict
    tool_version: str
    checks: list[CheckResult] = field(default_factory=list)
    seed: Optional[int] = None
    threads: int = 1

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "threads": self.threads,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "detail": c.detail,
                    "witnesses": [_jsonable(w) for w in c.witnesses],
                    "seconds": round(c.seconds, 6),
                    "truncated": c.truncated,
                }
                for c in self.checks
            ],
        }
        return json.dumps(doc, indent=2)

    def format_lines(self) -> str:
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [f"suite {self.suite}  params {self.params}"]
        for c in self.checks:
            line = f"  {c.status.upper():<12} {c.name:<{width}}  [{c.seconds:.3f}s]"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _jsonable(x):
    from .mstrings import render

    if isinstance(x, tuple) and x and all(isinstance(s, int) for s in x):
        return render(x)
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x, key=repr) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(y) for y in items]
    if isinstance(x, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in x.items()}
    return x
