"""Structured verification reports shared by the verifiers and the CLI."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass
class Report:
    """Outcome of one check.

    ``hypothesis`` is ``None`` when the check has no hypothesis, otherwise
    whether the theorem's hypothesis held on this instance.  ``passed`` is
    about the asserted conclusion only.
    """

    check: str
    passed: bool
    hypothesis: bool | None = None
    instance: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    note: str = ""

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class SuiteReport:
    """Results of a suite.  Large suites keep only failing items; ``checked`` counts everything."""

    suite: str
    items: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    checked: int = 0

    def add(self, r: Report, keep: bool = True) -> None:
        self.checked += 1
        if keep or not r.passed:
            self.items.append(r)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.items)

    @property
    def failures(self) -> list:
        return [r for r in self.items if not r.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "params": self.params,
            "checked": self.checked,
            "failures": len(self.failures),
            "items": [r.to_json() for r in self.items],
        }
