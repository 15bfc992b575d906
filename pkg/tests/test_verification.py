"""
Tests for the check runner and the acceptance batteries.
"""

import pytest

from hardyderiv.core.errors import PreconditionError
from hardyderiv.core.logging.logger import LogLevel
from hardyderiv.core.verification import (
    Check,
    CheckOutcome,
    CheckRunner,
    CheckState,
    acceptance_suite,
    lp_checks,
    summarize,
)
from hardyderiv.core.verification import suite


def passing(value: float = 0.0) -> CheckOutcome:
    return CheckOutcome(True, value, {"value": value})


def failing() -> CheckOutcome:
    return CheckOutcome(False, 1.0)


def exploding() -> CheckOutcome:
    raise PreconditionError("grid too small", {"grid": 8})


class TestCheck:
    """Single check lifecycle."""

    def test_execute_passing(self):
        check = Check("ok", passing, {"value": 0.5}, tolerance=1.0)
        result = check.execute()
        assert result.state is CheckState.PASSED
        assert result.worst == 0.5
        assert result.details == {"value": 0.5}
        assert check.state is CheckState.PASSED

    def test_error_result(self):
        result = Check("bad", failing).error("boom", 0.1)
        assert result.state is CheckState.ERRORED
        assert result.worst is None
        assert result.errors == ["boom"]

    def test_result_dict_keys(self):
        data = Check("ok", passing).execute().to_dict()
        assert set(data) == {"name", "passed", "state", "worst", "tolerance", "details", "execution_time", "errors"}
        assert data["state"] == "passed"


class TestCheckRunner:
    """Concurrent execution and hooks."""

    async def test_results_in_submission_order(self):
        checks = [Check(f"c{i}", passing, {"value": float(i)}) for i in range(6)]
        results = await CheckRunner(max_concurrent_checks=2).run_all(checks)
        assert [r.check_name for r in results] == [f"c{i}" for i in range(6)]
        assert [r.worst for r in results] == [float(i) for i in range(6)]

    async def test_failure_and_error_states(self, memory_log):
        runner = CheckRunner()
        results = await runner.run_all([Check("ok", passing), Check("no", failing), Check("err", exploding)])
        assert [r.state for r in results] == [CheckState.PASSED, CheckState.FAILED, CheckState.ERRORED]
        assert results[2].details["grid"] == 8
        assert "PreconditionError" in results[2].details["exception"]
        assert runner.get_stats()["errored_checks"] == 1
        errors = memory_log.get_recent_logs(level=LogLevel.ERROR)
        assert any("check errored" in entry.message for entry in errors)

    async def test_hooks(self):
        seen = []
        runner = CheckRunner()
        runner.add_hook("before_execute", lambda check: seen.append(("before", check.name)))

        async def on_error(check, result):
            seen.append(("error", check.name))

        runner.add_hook("on_error", on_error)
        runner.add_hook("on_success", lambda check, result: seen.append(("success", check.name)))
        await runner.run_all([Check("ok", passing)])
        await runner.run_all([Check("no", failing)])
        assert seen == [("before", "ok"), ("success", "ok"), ("before", "no"), ("error", "no")]

    async def test_failing_hook_does_not_change_result(self):
        runner = CheckRunner()

        def broken(check, result):
            raise RuntimeError("hook broke")

        runner.add_hook("after_execute", broken)
        results = await runner.run_all([Check("ok", passing)])
        assert results[0].passed

    def test_unknown_hook_event(self):
        with pytest.raises(ValueError):
            CheckRunner().add_hook("on_timeout", lambda check: None)

    async def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            await CheckRunner().run_all([Check("a", passing), Check("a", passing)])

    async def test_summarize(self):
        results = await CheckRunner().run_all([Check("ok", passing), Check("no", failing)])
        report = summarize(results)
        assert not report["passed"]
        assert report["total"] == 2
        assert report["passed_count"] == 1 and report["failed_count"] == 1
        assert list(report["checks"]) == ["ok", "no"]


class TestBatteries:
    """The acceptance properties at reduced sizes."""

    def test_suite_layout(self):
        checks = acceptance_suite(seed=0)
        names = [check.name for check in checks]
        assert len(names) == 14
        assert len(set(names)) == 14
        assert [check.name for check in lp_checks(0)] == names[:2]

    def test_lp_identity(self):
        assert suite.lp_identity(seed=0, pairs=10, max_degree=8).passed

    def test_moment_law(self):
        outcome = suite.moment_law()
        assert outcome.passed
        assert outcome.worst <= 1e-10

    def test_symbol_round_trip(self):
        assert suite.symbol_round_trip(seed=1, count=10, max_degree=10).passed

    def test_b_factorization(self):
        assert suite.b_factorization(seed=1, count=20).passed

    def test_leibniz(self):
        assert suite.leibniz(seed=1, count=20).passed

    def test_exp_trick(self):
        assert suite.exp_trick(seed=1, count=4).passed

    def test_square_decomposition(self):
        outcome = suite.square_decomposition(seed=1, count=8, max_degree=6)
        assert outcome.passed
        assert sum(outcome.details["c_rules"].values()) == 8

    def test_pietsch_certificates(self):
        outcome = suite.pietsch_certificates(seed=1, count=3, samples=20, degree=6)
        assert outcome.passed
        assert outcome.details["violations"] == 0

    def test_per_term(self):
        assert suite.per_term(seed=1, count=2, samples=10, degree=6).passed

    def test_finite_rank(self):
        outcome = suite.finite_rank(seed=1, max_n=4, order=8, pairs=5)
        assert outcome.passed
        assert outcome.details["ranks"] == [1, 2, 3, 4]

    def test_compactness_trend(self):
        outcome = suite.compactness_trend(seed=1, count=6, max_degree=6, order=12)
        assert outcome.passed
        assert 0.0 < outcome.details["geometric_sv_decay"] < 1.0

    def test_norm_sandwich(self):
        outcome = suite.norm_sandwich(seed=1, count=2, samples=10, degree=6)
        assert outcome.passed
        assert outcome.details["dz_gap"] <= 1e-12

    def test_bmoa_properties(self):
        assert suite.bmoa_properties(seed=1, triples=5, degree=4).passed

    def test_certificate_determinism(self):
        assert suite.certificate_determinism(seed=1, degree=6, samples=5).passed

    @pytest.mark.slow
    async def test_full_suite(self):
        results = await CheckRunner().run_all(acceptance_suite(seed=0))
        report = summarize(results)
        assert report["passed"], [name for name, entry in report["checks"].items() if not entry["passed"]]
