"""
report.py - Check results aggregated by the structural classifier and the check suite.
"""

from dataclasses import dataclass, field
from typing import List

import pandas as pd

PASS = 'pass'
FAIL = 'fail'
SKIP = 'skip'
INFO = 'info'


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ''
    count: int = 0


@dataclass
class Report:
    """An ordered list of check results; it passes iff no result failed."""

    results: List[CheckResult] = field(default_factory=list)

    def add(self, name, status, detail='', count=0):
        result = CheckResult(name, status, detail, count)
        self.results.append(result)
        return result

    def extend(self, other: 'Report'):
        self.results.extend(other.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def status_of(self, name: str) -> str:
        for result in self.results:
            if result.name == name:
                return result.status
        raise KeyError(name)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{'check': r.name, 'status': r.status, 'count': r.count, 'detail': r.detail} for r in self.results],
            columns=['check', 'status', 'count', 'detail'],
        )
