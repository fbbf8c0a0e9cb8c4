"""Verification reports and a small order-preserving worker pool."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable

from .compositions import format_composition


@dataclass
class Check:
    check: str
    params: dict
    status: str
    lhs: str | None = None
    rhs: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def render(value) -> str:
    to_text = getattr(value, "to_text", None)
    return to_text() if to_text is not None else str(value)


def _jsonable(v):
    if isinstance(v, tuple):
        return format_composition(v)
    if isinstance(v, (int, str, float, bool)) or v is None:
        return v
    return str(v)


def compare(check: str, params: dict, lhs, rhs) -> Check:
    """Exact comparison; renders both sides only when they differ."""
    params = {k: _jsonable(v) for k, v in params.items()}
    if lhs == rhs:
        return Check(check, params, "pass")
    return Check(check, params, "fail", render(lhs), render(rhs))


@dataclass
class Report:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)

    def add(self, check: str, params: dict, lhs, rhs) -> Check:
        c = compare(check, params, lhs, rhs)
        self.checks.append(c)
        return c

    def extend(self, checks: Iterable[Check]):
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.checks:
            out[c.check] = out.get(c.check, 0) + 1
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{status} {self.suite} {params}: {len(self.checks)} checks, {len(self.failures)} failed"]
        for name, k in self.counts().items():
            lines.append(f"  {name}: {k}")
        for c in self.failures:
            lines.append(f"  FAILED {c.check} {c.params}: lhs={c.lhs} rhs={c.rhs}")
        return "\n".join(lines)

    def to_json_list(self) -> list[dict]:
        return [asdict(c) for c in self.checks]

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_list(), ensure_ascii=False, **kw)


def pmap(fn: Callable[[Any], Any], items: list, jobs: int = 1) -> list:
    """map() that optionally fans out to processes; result order is fixed."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))
