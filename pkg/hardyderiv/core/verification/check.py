"""
Property Checks

Defines the structure and lifecycle of a single numerical property check:
a named callable that measures the worst deviation of some identity or
inequality over a deterministic sample and compares it with a tolerance.
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional


class CheckState(Enum):
    """Check execution states."""
    PENDING = "pending"
    RUNNING = "running"
    PASSED = "passed"
    FAILED = "failed"
    ERRORED = "errored"


@dataclass
class CheckOutcome:
    """What a check function measured."""
    passed: bool
    worst: float
    details: Dict[str, Any] = field(default_factory=dict)


@dataclass
class CheckResult:
    """Result of check execution."""
    check_name: str
    passed: bool
    state: CheckState
    worst: Optional[float]
    tolerance: Optional[float]
    details: Dict[str, Any]
    execution_time: float
    errors: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.check_name,
            "passed": self.passed,
            "state": self.state.value,
            "worst": self.worst,
            "tolerance": self.tolerance,
            "details": self.details,
            "execution_time": self.execution_time,
            "errors": self.errors,
        }


CheckFunction = Callable[..., CheckOutcome]


class Check:
    """
    A named property check.

    The function receives ``parameters`` as keyword arguments and returns a
    CheckOutcome. Checks are synchronous; the runner moves them off the
    event loop.
    """

    def __init__(
        self,
        name: str,
        func: CheckFunction,
        parameters: Optional[Dict[str, Any]] = None,
        description: str = "",
        tolerance: Optional[float] = None,
        tags: Optional[List[str]] = None,
    ):
        """
        Initialize a check.

        Args:
            name: Unique name, used as the key of the report
            func: Callable returning a CheckOutcome
            parameters: Keyword arguments for ``func``
            description: One-line description for reports
            tolerance: Tolerance the outcome was judged against
            tags: Optional tags for selecting subsets
        """
        self.name = name
        self.func = func
        self.parameters = parameters or {}
        self.description = description
        self.tolerance = tolerance
        self.tags = tags or []

        self.state = CheckState.PENDING
        self.result: Optional[CheckResult] = None

    def start(self) -> None:
        self.state = CheckState.RUNNING

    def execute(self) -> CheckResult:
        """
        Run the check function and record its result.

        Exceptions propagate; the runner turns them into ERRORED results.

        Returns:
            CheckResult with state PASSED or FAILED
        """
        start_time = time.perf_counter()
        outcome = self.func(**self.parameters)
        execution_time = time.perf_counter() - start_time

        self.state = CheckState.PASSED if outcome.passed else CheckState.FAILED
        self.result = CheckResult(
            check_name=self.name,
            passed=outcome.passed,
            state=self.state,
            worst=float(outcome.worst),
            tolerance=self.tolerance,
            details=outcome.details,
            execution_time=execution_time,
        )
        return self.result

    def error(self, message: str, execution_time: float = 0.0, details: Optional[Dict[str, Any]] = None) -> CheckResult:
        """
        Mark the check as errored.

        Args:
            message: Error message
            execution_time: Time spent before the failure
            details: Error details, e.g. the traceback
        """
        self.state = CheckState.ERRORED
        self.result = CheckResult(
            check_name=self.name,
            passed=False,
            state=self.state,
            worst=None,
            tolerance=self.tolerance,
            details=details or {},
            execution_time=execution_time,
            errors=[message],
        )
        return self.result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "state": self.state.value,
            "tolerance": self.tolerance,
            "tags": self.tags,
        }

    def __repr__(self) -> str:
        return f"Check(name={self.name!r}, state={self.state.value})"
