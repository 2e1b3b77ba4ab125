# harness/verify_report.py
import time
from dataclasses import dataclass, field

from qexact.laurent_series import LaurentSeries
from utils.logger import logger


@dataclass
class VerifyReport:
    """Outcome of one identity check: both sides, their difference and the verdict."""

    identity_id: str
    params: dict
    trunc_twice: object
    lhs: LaurentSeries
    rhs: LaurentSeries
    diff: LaurentSeries
    passed: bool
    elapsed_ms: int = 0
    notes: list = field(default_factory=list)

    @classmethod
    def compare(cls, identity_id, params, lhs, rhs, started, trunc_twice=None):
        """
        Builds a report from the two sides of an identity.
        Args:
            identity_id (str): Stable identity id, e.g. 'qko'.
            params (dict): JSON-friendly parameters of the check.
            lhs (LaurentSeries): Left-hand side.
            rhs (LaurentSeries): Right-hand side.
            started (float): time.time() when the check started.
            trunc_twice (int, optional): Requested comparison order; None for exact identities.
        Returns:
            VerifyReport: passed is True iff lhs - rhs vanishes up to the common truncation.
        """
        if trunc_twice is not None:
            lhs = lhs.truncate(trunc_twice)
            rhs = rhs.truncate(trunc_twice)
        diff = lhs - rhs
        notes = []
        if trunc_twice is not None and diff.trunc is not None and diff.trunc < trunc_twice:
            notes.append(f"effective truncation t^{diff.trunc} below requested t^{trunc_twice}")
            logger.warning(f"{identity_id} {params}: {notes[-1]}")
        report = cls(
            identity_id=identity_id,
            params=params,
            trunc_twice=diff.trunc,
            lhs=lhs,
            rhs=rhs,
            diff=diff,
            passed=diff.is_zero(),
            elapsed_ms=int((time.time() - started) * 1000),
            notes=notes,
        )
        if report.passed:
            logger.info(f"{identity_id} {params}: pass ({report.elapsed_ms} ms)")
        else:
            logger.warning(f"{identity_id} {params}: FAIL, difference {diff}")
        return report

    def to_json(self):
        return {
            "identity": self.identity_id,
            "params": self.params,
            "trunc_twice": self.trunc_twice,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "diff": self.diff.to_json(),
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }

    def summary_row(self):
        """Flat row for tables and CSV logs."""
        return {
            "identity": self.identity_id,
            "params": ", ".join(f"{k}={v}" for k, v in self.params.items()),
            "trunc_twice": self.trunc_twice,
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }
