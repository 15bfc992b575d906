"""
Check Runner

Runs property checks concurrently on the default thread pool, bounded by a
semaphore, and collects their results in submission order.
"""

import asyncio
import inspect
import time
import traceback
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..config.central_config import get_config
from ..errors import HardyDerivError
from ..logging.logger import get_logger
from .check import Check, CheckResult, CheckState

logger = get_logger(__name__)

HOOK_EVENTS = ("before_execute", "after_execute", "on_success", "on_error")


class CheckRunner:
    """
    Concurrent executor for synchronous property checks.

    Hooks may be plain functions or coroutine functions; errors raised by a
    hook are logged and never change a check's result.
    """

    def __init__(self, max_concurrent_checks: Optional[int] = None):
        """
        Initialize the runner.

        Args:
            max_concurrent_checks: Concurrency bound; ``runner.max_concurrent_checks`` by default
        """
        if max_concurrent_checks is None:
            max_concurrent_checks = get_config().get("runner.max_concurrent_checks")
        self.max_concurrent_checks = max_concurrent_checks
        self.hooks: Dict[str, List[Callable]] = {event: [] for event in HOOK_EVENTS}

        self.completed_checks = 0
        self.failed_checks = 0
        self.errored_checks = 0

    def add_hook(self, event: str, hook: Callable) -> None:
        """
        Register a hook.

        Args:
            event: One of before_execute, after_execute, on_success, on_error
            hook: Called with the check (and its result after execution)
        """
        if event not in self.hooks:
            raise ValueError(f"Unknown hook event: {event}")
        self.hooks[event].append(hook)

    async def _run_hooks(self, event: str, *args: Any) -> None:
        for hook in self.hooks.get(event, []):
            try:
                outcome = hook(*args)
                if inspect.isawaitable(outcome):
                    await outcome
            except Exception as e:
                logger.warning("hook failed", hook_event=event, error=str(e))

    async def run_check(self, check: Check, semaphore: Optional[asyncio.Semaphore] = None) -> CheckResult:
        """
        Execute one check off the event loop.

        Args:
            check: Check to execute
            semaphore: Concurrency bound shared by a batch

        Returns:
            CheckResult; exceptions become ERRORED results with a traceback
        """
        if semaphore is None:
            semaphore = asyncio.Semaphore(self.max_concurrent_checks)

        async with semaphore:
            loop = asyncio.get_running_loop()
            start_time = time.perf_counter()
            check.start()
            logger.check_started(check.name, **check.parameters)

            try:
                await self._run_hooks("before_execute", check)
                result = await loop.run_in_executor(None, check.execute)
                await self._run_hooks("after_execute", check, result)

                if result.passed:
                    self.completed_checks += 1
                    await self._run_hooks("on_success", check, result)
                else:
                    self.failed_checks += 1
                    logger.warning(
                        "check failed", check_name=check.name, worst=result.worst, tolerance=result.tolerance
                    )
                    await self._run_hooks("on_error", check, result)

            except Exception as e:
                details: Dict[str, Any] = {"exception": type(e).__name__, "traceback": traceback.format_exc()}
                if isinstance(e, HardyDerivError):
                    details.update(e.details)
                result = check.error(f"Check error: {e}", time.perf_counter() - start_time, details)
                self.errored_checks += 1
                logger.error("check errored", exception=e, check_name=check.name)
                await self._run_hooks("on_error", check, result)

            logger.check_completed(check.name, result.execution_time, result.passed)
            return result

    async def run_all(self, checks: Sequence[Check]) -> List[CheckResult]:
        """
        Execute checks concurrently.

        Args:
            checks: Checks with unique names

        Returns:
            Results in submission order
        """
        names = [check.name for check in checks]
        if len(set(names)) != len(names):
            raise ValueError("Check names must be unique")

        semaphore = asyncio.Semaphore(self.max_concurrent_checks)
        return list(await asyncio.gather(*(self.run_check(check, semaphore) for check in checks)))

    def get_stats(self) -> Dict[str, Any]:
        return {
            "max_concurrent_checks": self.max_concurrent_checks,
            "completed_checks": self.completed_checks,
            "failed_checks": self.failed_checks,
            "errored_checks": self.errored_checks,
        }


def summarize(results: Sequence[CheckResult]) -> Dict[str, Any]:
    """
    Merge results into a report keyed by check name.

    Returns:
        Dictionary with counts, an overall flag and per-check entries in order
    """
    states = [result.state for result in results]
    return {
        "passed": all(result.passed for result in results),
        "total": len(results),
        "passed_count": states.count(CheckState.PASSED),
        "failed_count": states.count(CheckState.FAILED),
        "errored_count": states.count(CheckState.ERRORED),
        "checks": {result.check_name: result.to_dict() for result in results},
    }
