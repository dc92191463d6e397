"""Pass/fail reports for identity checks."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable


@dataclass
class CheckResult:
    check: str
    params: dict[str, Any]
    passed: bool
    witness: str | None = None  # nonzero residual (or failure detail), if any

    def line(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.check}" + (f" ({params})" if params else "")
        if self.witness and not self.passed:
            text += f"\n        residual: {self.witness}"
        return text


@dataclass
class Report:
    title: str = ""
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __len__(self) -> int:
        return len(self.results)

    def __iter__(self):
        return iter(self.results)

    def record(self, check: str, residual: Any = None, *, passed: bool | None = None, **params) -> CheckResult:
        """Record a check; by default it passes iff ``residual`` is zero/falsy."""
        if passed is None:
            passed = not residual
        witness = None if passed or residual is None else str(residual)
        result = CheckResult(check, params, bool(passed), witness)
        self.results.append(result)
        return result

    def extend(self, other: Report | Iterable[CheckResult]) -> Report:
        self.results.extend(other.results if isinstance(other, Report) else other)
        return self

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def render(self) -> str:
        lines = [self.title] if self.title else []
        lines += [r.line() for r in self.results]
        n_fail = len(self.failures())
        lines.append(f"{len(self.results) - n_fail}/{len(self.results)} checks passed")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"title": self.title, "passed": self.passed, "checks": [asdict(r) for r in self.results]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)
