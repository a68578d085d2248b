"""
Data models for verification results.
Contains ClauseResult and VerificationSummary for tracking the outcome of
each verification clause of a decomposition or embedding.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .enums import ClauseStatus, ClauseType, ExitCode


@dataclass
class ClauseResult:
    """Outcome of one verification clause."""

    clause: ClauseType
    status: ClauseStatus
    execution_time_seconds: float = 0.0

    # Where the clause broke, when it did
    message: Optional[str] = None
    witness: Optional[Dict[str, Any]] = None

    # Counts the clause looked at (matchings, faces, unions)
    checked: int = 0

    error_message: Optional[str] = None
    error_details: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert result to dictionary for serialization. Timing is left out."""
        result = {
            'clause': str(self.clause),
            'status': str(self.status),
            'checked': self.checked,
        }
        if self.message is not None:
            result['message'] = self.message
        if self.witness:
            result['witness'] = self.witness
        if self.error_message is not None:
            result['error_message'] = self.error_message
        return result

    def is_successful(self) -> bool:
        return self.status.is_successful

    def is_failure(self) -> bool:
        return self.status.is_failure

    def get_summary_text(self) -> str:
        """Get human-readable summary of the clause."""
        text = f"{self.clause}: {self.status.value}"
        if self.message:
            text += f" - {self.message}"
        elif self.error_message:
            text += f" - {self.error_message}"
        return text


@dataclass
class VerificationSummary:
    """Aggregated summary of all clause results, in canonical clause order."""

    total_clauses: int
    passed: int
    failed: int
    errors: int
    skipped: int
    total_execution_time_seconds: float
    results: List[ClauseResult] = field(default_factory=list)

    @classmethod
    def from_results(cls, results: List[ClauseResult],
                     execution_time: float = 0.0) -> 'VerificationSummary':
        """Create summary from clause results; results are reordered canonically."""
        order = {clause: index for index, clause in enumerate(ClauseType)}
        ordered = sorted(results, key=lambda r: order[r.clause])
        return cls(
            total_clauses=len(ordered),
            passed=sum(1 for r in ordered if r.status == ClauseStatus.PASSED),
            failed=sum(1 for r in ordered if r.status == ClauseStatus.FAILED),
            errors=sum(1 for r in ordered if r.status == ClauseStatus.ERROR),
            skipped=sum(1 for r in ordered if r.status == ClauseStatus.SKIPPED),
            total_execution_time_seconds=execution_time,
            results=ordered,
        )

    def to_dict(self) -> Dict[str, Any]:
        first = self.first_failure()
        return {
            'total_clauses': self.total_clauses,
            'passed': self.passed,
            'failed': self.failed,
            'errors': self.errors,
            'skipped': self.skipped,
            'first_failure': str(first.clause) if first else None,
            'results': [r.to_dict() for r in self.results],
        }

    def has_failures(self) -> bool:
        return self.failed > 0 or self.errors > 0

    def first_failure(self) -> Optional[ClauseResult]:
        """The first failed or errored clause in canonical order."""
        for result in self.results:
            if result.is_failure():
                return result
        return None

    def result_for(self, clause: ClauseType) -> Optional[ClauseResult]:
        for result in self.results:
            if result.clause == clause:
                return result
        return None

    def get_exit_code(self) -> int:
        """Exit code for the command line: success or verification failure."""
        if self.has_failures():
            return int(ExitCode.VERIFICATION_FAILURE)
        return int(ExitCode.SUCCESS)

    def get_summary_text(self) -> str:
        """Get human-readable summary text."""
        text = (f"Verification Summary: {self.passed}/{self.total_clauses} passed, "
                f"{self.failed} failed, {self.errors} errors, {self.skipped} skipped")
        first = self.first_failure()
        if first is not None:
            text += f" - first failure: {first.clause}"
        return text
