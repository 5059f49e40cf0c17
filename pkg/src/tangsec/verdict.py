"""Pass/fail results carrying the per-instance rows that justify them."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Verdict:
    passed: bool
    rows: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.passed)

    @classmethod
    def from_rows(cls, rows: list[dict], key: str = "ok") -> "Verdict":
        return cls(all(r[key] for r in rows), rows)

    def failures(self, key: str = "ok") -> list[dict]:
        return [r for r in self.rows if not r.get(key, self.passed)]
