"""
Tests for the hardyderiv command line.
"""

import dataclasses
import json
import math

import pytest

from hardyderiv import __version__
from hardyderiv import cli
from hardyderiv.cli import main, open_storage, parse_poly_spec, parse_symbol_spec
from hardyderiv.core.errors import InputError
from hardyderiv.core.verification import Check, CheckOutcome

DZ = '{"kind": "monomial", "n": 1}'


def run(capsys, *argv):
    """Run the CLI and return (exit code, parsed stdout)."""
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def error_document(err: str) -> dict:
    """The JSON error document that follows the log lines on stderr."""
    return json.loads(err[err.index("{\n"):])


class TestSpecParsing:
    """JSON forms of symbols and polynomials."""

    def test_symbol_forms(self):
        assert parse_symbol_spec([[1, 0], [0, 2]], 0).coefficient(2) == 2j
        assert parse_symbol_spec({"coeffs": [[0, 1]]}, 0).coefficient(1) == 1j
        assert parse_symbol_spec({"kind": "monomial", "n": 3}, 0).degree == 3
        assert parse_symbol_spec({"kind": "random", "degree": 5}, 0).degree == 5

    def test_random_symbol_uses_default_seed(self):
        a = parse_symbol_spec({"kind": "random", "degree": 4}, 7)
        b = parse_symbol_spec({"kind": "random", "degree": 4, "seed": 7}, 0)
        assert a.poly.allclose(b.poly, atol=0.0)

    def test_poly_forms(self):
        assert parse_poly_spec([[1, 0], [2, 0]], 0).coefficient(1) == 2.0
        assert parse_poly_spec({"kind": "monomial", "n": 0}, 0).coefficient(0) == 1.0
        assert parse_poly_spec({"kind": "random", "degree": 3, "index": 2}, 0).degree == 3

    @pytest.mark.parametrize(
        "spec",
        [
            {"kind": "wavelet"},
            {"kind": "monomial", "n": "two"},
            {"kind": "monomial", "n": -1},
            {"kind": "random", "degree": -2},
            {"kind": "random", "degree": 3, "seed": 1.5},
            "z^2",
        ],
    )
    def test_bad_poly_specs(self, spec):
        with pytest.raises(InputError):
            parse_poly_spec(spec, 0)

    @pytest.mark.parametrize("spec", [{"coeffs": 5}, {"coeffs": "z"}, {"coeffs": [[1, 0, 2]]}, [1, 2], [[1, "x"]]])
    def test_bad_symbol_coefficients(self, spec):
        with pytest.raises(InputError):
            parse_symbol_spec(spec, 0)


class TestEvalAndExtract:
    """eval and extract commands."""

    def test_eval_dz(self, capsys):
        code, out = run(capsys, "eval", DZ, DZ, '{"coeffs": [[1, 0]]}')
        assert code == 0
        assert out["value"][0] == pytest.approx(2 * math.pi)
        assert out["value"][1] == pytest.approx(0.0)
        assert out["u_coeffs"][1] == pytest.approx([1.0, 0.0])

    def test_eval_from_file(self, capsys, tmp_path):
        symbol = tmp_path / "h.json"
        symbol.write_text('{"kind": "monomial", "n": 2}')
        code, out = run(capsys, "eval", str(symbol), DZ, DZ)
        assert code == 0
        assert out["value"][0] == pytest.approx(math.pi)

    def test_malformed_json(self, capsys):
        code, out = run(capsys, "eval", "{not json", DZ, DZ)
        assert code == 2
        assert out is None

    def test_error_document_on_stderr(self, capsys):
        code = main(["eval", '{"kind": "spline"}', DZ, DZ])
        err = capsys.readouterr().err
        assert code == 2
        document = json.loads(err[err.index("{\n"):])
        assert document["error"] == "InputError"
        assert document["exit_code"] == 2

    def test_extract_symbol(self, capsys):
        code, out = run(capsys, "extract", '{"coeffs": [[1, 0], [0, -1]]}')
        assert code == 0
        assert out["coeffs"][0] == pytest.approx([1.0, 0.0])
        assert out["coeffs"][1] == pytest.approx([0.0, -1.0])

    @pytest.mark.parametrize("symbol", ['{"coeffs": 5}', '[1, 2]', '{"coeffs": [[1]]}'])
    def test_malformed_symbol_coefficients(self, capsys, symbol):
        code = main(["eval", symbol, DZ, DZ])
        captured = capsys.readouterr()
        assert code == 2
        assert captured.out == ""
        assert error_document(captured.err)["error"] == "InputError"

    def test_extract_from_mis_sized_gram_matrix(self, capsys):
        code = main(["extract", '{"N": 3, "entries": [[[1, 0]]]}'])
        captured = capsys.readouterr()
        assert code == 2
        assert error_document(captured.err)["details"] == {"N": 3, "shape": [1, 1]}

    def test_unexpected_value_error_is_an_input_error(self, capsys, monkeypatch):
        def broken(D, f, g):
            raise ValueError("operands could not be broadcast together")

        monkeypatch.setattr(cli, "bilinear_eval", broken)
        code = main(["eval", DZ, DZ, DZ])
        document = error_document(capsys.readouterr().err)
        assert code == 2
        assert document["error"] == "InputError"
        assert "broadcast" in document["message"]

    def test_extract_from_gram_file(self, capsys, tmp_path):
        matrix = tmp_path / "m.json"
        code, out = run(capsys, "gram", '{"kind": "monomial", "n": 2}', "--order", "4", "--out", str(matrix))
        assert code == 0 and out["rank"] == 2
        code, out = run(capsys, "extract", str(matrix))
        assert code == 0
        assert len(out["coeffs"]) == 4
        assert out["coeffs"][1] == pytest.approx([1.0, 0.0])
        assert out["coeffs"][3] == pytest.approx([0.0, 0.0])


class TestGram:
    """gram command."""

    def test_rank_of_monomial_symbol(self, capsys):
        code, out = run(capsys, "gram", '{"kind": "monomial", "n": 5}', "--order", "8")
        assert code == 0
        assert out["rank"] == 5
        assert len(out["singular_values"]) == 9

    def test_order_zero_is_a_precondition_error(self, capsys):
        code, _ = run(capsys, "gram", DZ, "--order", "0")
        assert code == 3


class TestPietsch:
    """pietsch command."""

    def test_dz_certificate(self, capsys, tmp_path):
        cert = tmp_path / "cert.json"
        code, out = run(capsys, "pietsch", DZ, "--samples", "20", "--deg", "6", "--out", str(cert))
        assert code == 0
        assert out["total_mass"] == pytest.approx(20 * math.pi ** 2, rel=1e-12)
        assert out["violations"] == 0
        data = json.loads(cert.read_text())
        assert data["verification"]["violations"] == 0
        assert data["combine_factor"] == 5.0

    def test_zero_symbol(self, capsys, tmp_path):
        code, out = run(capsys, "pietsch", '{"coeffs": []}', "--samples", "5", "--deg", "4",
                        "--out", str(tmp_path / "zero.json"))
        assert code == 0
        assert out["total_mass"] == 0.0

    def test_certificates_are_byte_identical(self, capsys, tmp_path):
        symbol = '{"kind": "random", "degree": 8, "seed": 3}'
        for name in ("a.json", "b.json"):
            code, _ = run(capsys, "--seed", "5", "pietsch", symbol, "--samples", "10", "--deg", "6",
                          "--out", str(tmp_path / name))
            assert code == 0
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()

    def test_refuted_certificate(self, capsys, tmp_path, monkeypatch):
        real_build = cli.build_certificate

        def shrunken(h, n_out=None):
            cert = real_build(h, n_out)
            return dataclasses.replace(cert, mu_D=cert.mu_D.scaled(1e-6))

        monkeypatch.setattr(cli, "build_certificate", shrunken)
        cert_path = tmp_path / "weak.json"
        code = main(["pietsch", DZ, "--samples", "5", "--deg", "3", "--out", str(cert_path)])
        captured = capsys.readouterr()
        assert code == 1
        assert json.loads(captured.out)["violations"] > 0
        assert error_document(captured.err)["error"] == "VerificationError"
        assert cert_path.is_file()

    def test_unwritable_output(self, capsys, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("occupied")
        code, _ = run(capsys, "pietsch", DZ, "--samples", "5", "--deg", "3", "--out", str(blocker / "cert.json"))
        assert code == 2


class TestReport:
    """report command."""

    def test_z_cubed_series(self, capsys, tmp_path):
        out_dir = tmp_path / "reports"
        code, out = run(capsys, "report", '{"kind": "monomial", "n": 3}', "--fejer-max", "6", "--gram", "8",
                        "--out", str(out_dir))
        assert code == 0
        assert out["files"] == ["bmoa.csv", "fejer.csv", "svd.csv"]

        svd = (out_dir / "svd.csv").read_text().splitlines()
        assert svd[0] == "index,singular_value"
        values = [float(line.split(",")[1]) for line in svd[1:]]
        assert sum(v > 1e-10 * values[0] for v in values) == 3

        fejer = (out_dir / "fejer.csv").read_text().splitlines()
        assert fejer[0] == "N,tail_bound"
        assert len(fejer) == 8
        assert float(fejer[-1].split(",")[1]) == 0.0

        bmoa = (out_dir / "bmoa.csv").read_text().splitlines()
        assert [line.split(",")[0] for line in bmoa[1:]] == ["osc", "dual", "carleson"]

    def test_negative_fejer_max(self, capsys, tmp_path):
        code, _ = run(capsys, "report", DZ, "--fejer-max", "-1", "--out", str(tmp_path / "r"))
        assert code == 2


class TestGlobalOptions:
    """Flags shared by every command."""

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert capsys.readouterr().out.strip() == f"hardyderiv {__version__}"

    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_grid_must_be_power_of_two(self, capsys):
        code, _ = run(capsys, "--grid", "1000", "eval", DZ, DZ, DZ)
        assert code == 2

    def test_tolerance_must_be_positive(self, capsys):
        code, _ = run(capsys, "--tol", "0", "eval", DZ, DZ, DZ)
        assert code == 2

    def test_missing_config_file(self, capsys, tmp_path):
        code, _ = run(capsys, "--config", str(tmp_path / "absent.yaml"), "eval", DZ, DZ, DZ)
        assert code == 2

    def test_config_file_sets_sampling(self, capsys, tmp_path):
        config = tmp_path / "hardyderiv.yaml"
        config.write_text("sampling:\n  samples: 7\n  degree: 3\n")
        code, out = run(capsys, "--config", str(config), "pietsch", DZ, "--out", str(tmp_path / "c.json"))
        assert code == 0
        assert out["pairs_checked"] == 3 * 4 + 7

    def test_invalid_config_value(self, capsys, tmp_path):
        config = tmp_path / "bad.yaml"
        config.write_text("runner:\n  max_concurrent_checks: 0\n")
        code, _ = run(capsys, "--config", str(config), "lp-check")
        assert code == 2


class TestChecksAndBmoa:
    """lp-check, verify and bmoa commands."""

    def test_lp_check(self, capsys):
        code, out = run(capsys, "lp-check")
        assert code == 0
        assert out["passed"]
        assert list(out["checks"]) == ["lp_identity", "moment_law"]

    def test_verify_subset(self, capsys):
        code, out = run(capsys, "verify", "--only", "moment_law", "symbol_round_trip")
        assert code == 0
        assert out["total"] == 2

    def test_failed_check_exits_with_refutation_code(self, capsys, monkeypatch):
        def refuted() -> CheckOutcome:
            return CheckOutcome(False, 2.0)

        monkeypatch.setattr(cli, "lp_checks", lambda seed: [Check("lp_identity", refuted)])
        code = main(["lp-check"])
        captured = capsys.readouterr()
        assert code == 1
        assert not json.loads(captured.out)["passed"]
        document = error_document(captured.err)
        assert document["error"] == "VerificationError"
        assert document["details"]["failed"] == ["lp_identity"]

    def test_verify_unknown_check(self, capsys):
        code, _ = run(capsys, "verify", "--only", "riemann")
        assert code == 2

    def test_bmoa_estimates(self, capsys):
        code, out = run(capsys, "bmoa", DZ)
        assert code == 0
        assert [e["kind"] for e in out["estimates"]] == ["osc", "dual", "carleson"]
        assert out["estimates"][0]["value"] >= 1.0 - 1e-12


class TestOpenStorage:
    """Artifact storage lifecycle inside commands."""

    async def test_disconnects_on_exit(self, artifact_dir):
        async with open_storage(str(artifact_dir)) as storage:
            await storage.store("cert.json", "{}\n")
            assert storage.is_connected
        assert not storage.is_connected
        assert (artifact_dir / "cert.json").read_text() == "{}\n"

    async def test_disconnects_when_the_command_fails(self, artifact_dir):
        with pytest.raises(InputError):
            async with open_storage(str(artifact_dir)) as storage:
                raise InputError("bad symbol")
        assert not storage.is_connected
