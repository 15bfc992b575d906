"""
Verification

Property checks, the concurrent check runner and the acceptance battery.
"""

from .check import Check, CheckOutcome, CheckResult, CheckState
from .runner import CheckRunner, summarize
from .suite import acceptance_suite, lp_checks

__all__ = [
    "Check",
    "CheckOutcome",
    "CheckResult",
    "CheckState",
    "CheckRunner",
    "summarize",
    "acceptance_suite",
    "lp_checks",
]
