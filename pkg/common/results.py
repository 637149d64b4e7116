"""Result records shared by the verification checks."""

from typing import List, NamedTuple

from common.enums import CheckStatus


class CheckResult(NamedTuple):
    """Result of checking one identity."""

    name: str
    anchor: str  # the identity as a formula
    status: CheckStatus
    detail: str

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAILED


class SuiteResult(NamedTuple):
    """Aggregated result of a verification suite."""

    suite: str
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


def check(name: str, anchor: str, ok: bool, detail: str = "") -> CheckResult:
    """Build a PASSED/FAILED CheckResult from a boolean."""
    return CheckResult(name, anchor, CheckStatus.PASSED if ok else CheckStatus.FAILED, detail)


def skipped(name: str, anchor: str, detail: str) -> CheckResult:
    """Build a SKIPPED CheckResult."""
    return CheckResult(name, anchor, CheckStatus.SKIPPED, detail)
