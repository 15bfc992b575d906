#!/usr/bin/env python3
"""
Command Line Interface for hardyderiv

Evaluates derivations, extracts symbols, builds and verifies control
measures, and writes report series. Command output is JSON on stdout;
logs go to stderr.

Exit codes: 0 success, 1 refuted assertion, 2 input error, 3 precondition error.
"""

import argparse
import asyncio
import json
import sys
from contextlib import asynccontextmanager
from pathlib import Path
from typing import Any, AsyncIterator, Dict, List, Optional

from . import __version__
from .core.bmoa.seminorms import bmoa_estimates, equivalence_ratio_report
from .core.circle.grid import is_power_of_two
from .core.circle.poly import AnalyticPoly, u_of
from .core.config.central_config import CentralConfig, reload_config
from .core.derivations.form import DerivationForm, bilinear_eval, extract_symbol
from .core.derivations.gram import GramMatrix, gram_matrix, rank_and_singular_values
from .core.derivations.norms import TAIL_SCHEMES, fejer_tail_bound
from .core.errors import HardyDerivError, InputError, VerificationError
from .core.hardy.symbols import SymbolH1, random_poly, random_symbol, sample_rng
from .core.logging.config import setup_logging_from_config
from .core.logging.logger import get_logger
from .core.pietsch.certificate import build_certificate, verify_certificate
from .core.storage.artifact_storage import ArtifactStorage
from .core.storage.base_storage import dumps_json
from .core.verification.runner import CheckRunner, summarize
from .core.verification.suite import acceptance_suite, lp_checks

logger = get_logger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """Create the command line argument parser."""
    parser = argparse.ArgumentParser(
        prog="hardyderiv",
        description="hardyderiv - derivations from the disc algebra into its dual",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  hardyderiv eval '{"kind": "monomial", "n": 1}' '{"kind": "monomial", "n": 1}' '{"coeffs": [[1, 0]]}'
  hardyderiv pietsch '{"kind": "random", "degree": 12, "seed": 3}' --out cert.json
  hardyderiv report symbol.json --fejer-max 16 --gram 12 --out reports/
  hardyderiv verify --seed 0
        """
    )

    parser.add_argument("--version", action="version", version=f"hardyderiv {__version__}")
    parser.add_argument("--config", type=str, help="Path to a YAML configuration file")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Set logging level (stderr)"
    )
    parser.add_argument("--grid", type=int, help="Boundary grid size M (power of two)")
    parser.add_argument("--tol", type=float, help="Relative tolerance of the L1 quadrature refinement")
    parser.add_argument("--seed", type=int, help="Base seed for sampled polynomials")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    eval_parser = subparsers.add_parser("eval", help="Evaluate D_h(f)(g)")
    eval_parser.add_argument("symbol", help="Symbol JSON or path to a JSON file")
    eval_parser.add_argument("f", help="Polynomial JSON for f")
    eval_parser.add_argument("g", help="Polynomial JSON for g")

    extract_parser = subparsers.add_parser("extract", help="Recover the symbol of a derivation")
    extract_parser.add_argument("source", help="Symbol JSON or Gram matrix JSON ({'N', 'entries'})")
    extract_parser.add_argument("--degree", type=int, help="Degree of the recovered symbol")

    gram_parser = subparsers.add_parser("gram", help="Gram matrix rank and singular values")
    gram_parser.add_argument("symbol", help="Symbol JSON or path to a JSON file")
    gram_parser.add_argument("--order", type=int, default=12, help="Matrix order N (monomials z^0..z^N)")
    gram_parser.add_argument("--rank-tol", type=float, default=1e-10, help="Relative rank threshold")
    gram_parser.add_argument("--out", type=str, help="Write the matrix as JSON to this file")

    pietsch_parser = subparsers.add_parser("pietsch", help="Build and verify a control measure")
    pietsch_parser.add_argument("symbol", help="Symbol JSON or path to a JSON file")
    pietsch_parser.add_argument("--samples", type=int, help="Number of sampled (f, g) pairs")
    pietsch_parser.add_argument("--deg", type=int, help="Degree of the sampled polynomials")
    pietsch_parser.add_argument("--n-out", type=int, help="Truncation degree of the square roots")
    pietsch_parser.add_argument("--out", type=str, default="cert.json", help="Certificate file")

    report_parser = subparsers.add_parser("report", help="Write tail, spectrum and BMOA series as CSV")
    report_parser.add_argument("symbol", help="Symbol JSON or path to a JSON file")
    report_parser.add_argument("--fejer-max", type=int, default=16, help="Largest approximation order")
    report_parser.add_argument("--gram", type=int, default=12, help="Gram matrix order")
    report_parser.add_argument("--scheme", choices=list(TAIL_SCHEMES), help="Tail bound scheme")
    report_parser.add_argument("--out", type=str, default="reports", help="Output directory")

    bmoa_parser = subparsers.add_parser("bmoa", help="BMOA seminorm estimates of a polynomial")
    bmoa_parser.add_argument("f", help="Polynomial JSON or path to a JSON file")
    bmoa_parser.add_argument("--ratios", action="store_true", help="Also report equivalence ratios")

    subparsers.add_parser("lp-check", help="Check the Littlewood-Paley identity and moment law")

    verify_parser = subparsers.add_parser("verify", help="Run the acceptance checks")
    verify_parser.add_argument("--only", nargs="+", help="Run only the named checks")

    return parser


def load_json_argument(text: str) -> Any:
    """
    Parse an argument that is either inline JSON or a path to a JSON file.

    Raises:
        InputError: if neither reading nor parsing succeeds
    """
    path = Path(text)
    try:
        if not text.lstrip().startswith(("{", "[")) and path.is_file():
            text = path.read_text(encoding="utf-8")
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"Cannot read JSON from {text[:60]!r}: {e}")


def _require_int(data: Dict[str, Any], key: str) -> int:
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"Field '{key}' must be an integer", {"field": key, "value": value})
    return value


def parse_symbol_spec(data: Any, default_seed: int) -> SymbolH1:
    """
    Build a symbol from its JSON form.

    Accepted forms: a list of [re, im] pairs for h_1..h_N, {"coeffs": [...]},
    {"kind": "monomial", "n": n} and {"kind": "random", "degree": d, "seed": s}.
    """
    if isinstance(data, list):
        return SymbolH1.from_pairs(data)
    if not isinstance(data, dict):
        raise InputError("Symbol must be a JSON object or a coefficient list")
    if "coeffs" in data:
        return SymbolH1.from_dict(data)

    kind = data.get("kind")
    if kind == "monomial":
        return SymbolH1.monomial(_require_int(data, "n"))
    if kind == "random":
        seed = _require_int(data, "seed") if "seed" in data else default_seed
        index = _require_int(data, "index") if "index" in data else 0
        return random_symbol(_require_int(data, "degree"), seed, index)
    raise InputError(f"Unknown symbol kind: {kind!r}", {"kinds": ["coeffs", "monomial", "random"]})


def parse_poly_spec(data: Any, default_seed: int) -> AnalyticPoly:
    """
    Build a polynomial from its JSON form.

    Accepted forms: a list of [re, im] pairs from the constant term,
    {"coeffs": [...]}, {"kind": "monomial", "n": n} and
    {"kind": "random", "degree": d, "seed": s, "index": i}.
    """
    if isinstance(data, list):
        return AnalyticPoly.from_pairs(data)
    if not isinstance(data, dict):
        raise InputError("Polynomial must be a JSON object or a coefficient list")
    if "coeffs" in data:
        return AnalyticPoly.from_pairs(data["coeffs"])

    kind = data.get("kind")
    if kind == "monomial":
        n = _require_int(data, "n")
        if n < 0:
            raise InputError(f"Monomial exponent must be nonnegative, got {n}")
        return AnalyticPoly.monomial(n)
    if kind == "random":
        seed = _require_int(data, "seed") if "seed" in data else default_seed
        index = _require_int(data, "index") if "index" in data else 0
        degree = _require_int(data, "degree")
        if degree < 0:
            raise InputError(f"Polynomial degree must be nonnegative, got {degree}")
        return random_poly(sample_rng(seed, index), degree)
    raise InputError(f"Unknown polynomial kind: {kind!r}", {"kinds": ["coeffs", "monomial", "random"]})


def emit(data: Any) -> None:
    """Write a JSON document to stdout."""
    sys.stdout.write(dumps_json(data))


@asynccontextmanager
async def open_storage(base_path: str) -> AsyncIterator[ArtifactStorage]:
    """Connected artifact storage, disconnected on exit."""
    storage = ArtifactStorage(base_path)
    await storage.connect()
    try:
        yield storage
    finally:
        await storage.disconnect()


async def cmd_eval(args: argparse.Namespace, config: CentralConfig) -> int:
    seed = config.get("sampling.seed")
    h = parse_symbol_spec(load_json_argument(args.symbol), seed)
    f = parse_poly_spec(load_json_argument(args.f), seed)
    g = parse_poly_spec(load_json_argument(args.g), seed)

    value = bilinear_eval(DerivationForm(h), f, g)
    emit({"value": value, "u_coeffs": u_of(f, g).to_pairs()})
    return 0


async def cmd_extract(args: argparse.Namespace, config: CentralConfig) -> int:
    data = load_json_argument(args.source)
    if isinstance(data, dict) and "entries" in data:
        matrix = GramMatrix.from_dict(data)
        evaluator = matrix.as_evaluator()
        degree = args.degree if args.degree is not None else matrix.N
    else:
        h = parse_symbol_spec(data, config.get("sampling.seed"))
        evaluator = DerivationForm(h)
        degree = args.degree if args.degree is not None else max(h.degree, 1)

    emit(extract_symbol(evaluator, degree).to_dict())
    return 0


async def cmd_gram(args: argparse.Namespace, config: CentralConfig) -> int:
    h = parse_symbol_spec(load_json_argument(args.symbol), config.get("sampling.seed"))
    matrix = gram_matrix(DerivationForm(h), args.order)
    rank, values = rank_and_singular_values(matrix, args.rank_tol)

    if args.out:
        out = Path(args.out)
        async with open_storage(str(out.parent)) as storage:
            await storage.store_json(out.name, matrix.to_dict())

    emit({"N": args.order, "rank": rank, "singular_values": values})
    return 0


async def cmd_pietsch(args: argparse.Namespace, config: CentralConfig) -> int:
    seed = config.get("sampling.seed")
    samples = args.samples if args.samples is not None else config.get("sampling.samples")
    deg = args.deg if args.deg is not None else config.get("sampling.degree")
    h = parse_symbol_spec(load_json_argument(args.symbol), seed)

    cert = build_certificate(h, args.n_out)
    report = verify_certificate(cert, samples, deg, seed)

    out = Path(args.out)
    async with open_storage(str(out.parent)) as storage:
        await storage.store_json(out.name, cert.to_dict())

    emit({
        "certificate": str(out),
        "total_mass": cert.total_mass,
        "max_ratio": report.max_ratio,
        "pairs_checked": report.pairs_checked,
        "violations": report.violations,
    })
    if not report.passed:
        raise VerificationError(
            "Control measure refuted on sampled pairs",
            {"violations": report.violations, "max_ratio": report.max_ratio, "worst_pair": report.worst_pair},
        )
    return 0


async def cmd_report(args: argparse.Namespace, config: CentralConfig) -> int:
    seed = config.get("sampling.seed")
    h = parse_symbol_spec(load_json_argument(args.symbol), seed)
    if args.fejer_max < 0:
        raise InputError(f"--fejer-max must be nonnegative, got {args.fejer_max}")
    D = DerivationForm(h)

    fejer_rows = [(N, fejer_tail_bound(D, N, args.scheme)) for N in range(args.fejer_max + 1)]
    _, values = rank_and_singular_values(gram_matrix(D, args.gram), 1e-10)
    svd_rows = list(enumerate(values))
    bmoa_rows = [(estimate.kind.value, estimate.value) for estimate in bmoa_estimates(h.poly, seed)]

    async with open_storage(args.out) as storage:
        await storage.store_csv("fejer.csv", ["N", "tail_bound"], fejer_rows)
        await storage.store_csv("svd.csv", ["index", "singular_value"], svd_rows)
        await storage.store_csv("bmoa.csv", ["kind", "estimate"], bmoa_rows)
        files = await storage.list_keys()

    emit({"out": args.out, "files": files})
    return 0


async def cmd_bmoa(args: argparse.Namespace, config: CentralConfig) -> int:
    seed = config.get("sampling.seed")
    f = parse_poly_spec(load_json_argument(args.f), seed)
    result: Dict[str, Any] = {"estimates": [estimate.to_dict() for estimate in bmoa_estimates(f, seed)]}
    if args.ratios:
        result["equivalence"] = equivalence_ratio_report(seed)
    emit(result)
    return 0


async def _run_checks(checks) -> int:
    runner = CheckRunner()
    results = await runner.run_all(checks)
    report = summarize(results)
    emit(report)
    if not report["passed"]:
        failed = [name for name, entry in report["checks"].items() if not entry["passed"]]
        raise VerificationError(f"{len(failed)} check(s) failed", {"failed": failed})
    return 0


async def cmd_lp_check(args: argparse.Namespace, config: CentralConfig) -> int:
    return await _run_checks(lp_checks(config.get("sampling.seed")))


async def cmd_verify(args: argparse.Namespace, config: CentralConfig) -> int:
    checks = acceptance_suite(config.get("sampling.seed"))
    if args.only:
        known = {check.name for check in checks}
        unknown = sorted(set(args.only) - known)
        if unknown:
            raise InputError(f"Unknown checks: {', '.join(unknown)}", {"known": sorted(known)})
        checks = [check for check in checks if check.name in args.only]
    return await _run_checks(checks)


COMMANDS = {
    "eval": cmd_eval,
    "extract": cmd_extract,
    "gram": cmd_gram,
    "pietsch": cmd_pietsch,
    "report": cmd_report,
    "bmoa": cmd_bmoa,
    "lp-check": cmd_lp_check,
    "verify": cmd_verify,
}


def configure(args: argparse.Namespace) -> CentralConfig:
    """
    Load configuration, apply the global flags and set up logging.

    Raises:
        InputError: on an invalid configuration file or flag value
    """
    config = reload_config(args.config)
    if config.errors:
        raise InputError("Invalid configuration", {"errors": config.errors})

    if args.grid is not None:
        if not is_power_of_two(args.grid):
            raise InputError(f"--grid must be a power of two, got {args.grid}")
        config.set("numerics.grid_size", args.grid)
    if args.tol is not None:
        if not args.tol > 0:
            raise InputError(f"--tol must be positive, got {args.tol}")
        config.set("numerics.l1_rel_tol", args.tol)
    if args.seed is not None:
        config.set("sampling.seed", args.seed)
    if args.log_level:
        config.set("logging.level", args.log_level)

    setup_logging_from_config(config)
    return config


async def main_async(argv: Optional[List[str]] = None) -> int:
    """Main async function."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help(sys.stderr)
        return 2

    try:
        config = configure(args)
        logger.debug("command started", command=args.command)
        return await COMMANDS[args.command](args, config)
    except HardyDerivError as e:
        logger.error(f"{args.command} failed: {e.message}", error_type=type(e).__name__)
        sys.stderr.write(dumps_json(e.to_dict()))
        return e.exit_code
    except (TypeError, ValueError) as e:
        logger.exception(f"{args.command} failed on malformed input", error_type=type(e).__name__)
        error = InputError(f"Malformed input: {e}")
        sys.stderr.write(dumps_json(error.to_dict()))
        return error.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    try:
        return asyncio.run(main_async(argv))
    except KeyboardInterrupt:
        sys.stderr.write("\nInterrupted by user\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
