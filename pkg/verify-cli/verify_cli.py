#!/usr/bin/env python3
"""
Command-line driver for the Taft comodule verification kernel.

    verify --n 2..6 --suite all --format json
    table  --n 3 --format csv

Exit codes: 0 all cases pass, 1 verification failure, 2 usage error.
"""
import argparse
import json
import logging
import os
import sys
import traceback
from typing import Any, Dict, List, Optional

# Add the repository root so the shared package resolves
sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from shared import __version__
from shared.cyclotomic import CycContext
from shared.errors import TaftVerifyError
from shared.report import render_reports
from shared.verification_orchestrator import (
    ROOT_POLICIES,
    SUITES,
    TABLE_FORMATS,
    VerificationOrchestrator,
    expand_suites,
    identity_table,
    render_identity_table,
    root_exponents,
)
from shared.verify_config import load_environment, load_verify_config

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

REPORT_FORMATS = ("json", "csv", "text")

logger = logging.getLogger(__name__)


class UsageError(ValueError):
    """Bad command-line input; maps to exit code 2"""


def configure_logging(level: str = "INFO") -> None:
    root = logging.getLogger()
    root.setLevel(getattr(logging, str(level).upper(), logging.INFO))

    # Remove any existing handlers to avoid duplicate logs
    for existing in root.handlers[:]:
        root.removeHandler(existing)

    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    # stderr, so reports on stdout stay clean
    stream = logging.StreamHandler(sys.stderr)
    stream.setFormatter(formatter)
    root.addHandler(stream)


def parse_n_range(text: str) -> List[int]:
    """'5' -> [5], '2..6' -> [2, 3, 4, 5, 6]; every n must be >= 2"""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(text)]
    except ValueError:
        raise UsageError(f"--n expects an integer or a range a..b, got {text!r}")
    if not values:
        raise UsageError(f"--n range {text!r} is empty")
    if min(values) < 2:
        raise UsageError(f"every n must be >= 2, got {text!r}")
    return values


def _usage(message: str) -> Dict[str, Any]:
    logger.error(f"Usage error: {message}")
    return {
        "statusCode": 400,
        "exit_code": EXIT_USAGE,
        "body": json.dumps({"error": "usage", "details": message}),
    }


def _write_output(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"Wrote {len(text)} characters to {out}")


def _handle_verify(event: Dict[str, Any], config: Dict[str, Any]) -> Dict[str, Any]:
    n_values = parse_n_range(str(event.get("n", "2")))
    suites = event.get("suite") or ["all"]
    if isinstance(suites, str):
        suites = [suites]
    roots = event.get("roots") or config["roots"]
    fmt = event.get("format") or config["format"]
    if fmt not in REPORT_FORMATS:
        raise UsageError(f"unknown format {fmt!r}; choose from {', '.join(REPORT_FORMATS)}")
    if roots not in ROOT_POLICIES:
        raise UsageError(f"unknown root policy {roots!r}; choose from {', '.join(ROOT_POLICIES)}")
    try:
        expand_suites(suites)
    except ValueError as e:
        raise UsageError(str(e))

    if event.get("jobs") is not None:
        config["jobs"] = int(event["jobs"])
    orchestrator = VerificationOrchestrator(config)
    reports = orchestrator.run(n_values, suites, roots)
    exit_code = orchestrator.exit_code()
    body = render_reports(reports, fmt, __version__)
    _write_output(body, event.get("out"))
    return {
        "statusCode": 200 if exit_code == EXIT_PASS else 422,
        "exit_code": exit_code,
        "body": body,
        "reports": reports,
    }


def _handle_table(event: Dict[str, Any], config: Dict[str, Any]) -> Dict[str, Any]:
    n_values = parse_n_range(str(event.get("n", "2")))
    roots = event.get("roots") or config["roots"]
    fmt = event.get("format") or "csv"
    if fmt not in TABLE_FORMATS:
        raise UsageError(f"unknown table format {fmt!r}; choose from {', '.join(TABLE_FORMATS)}")
    if roots not in ROOT_POLICIES:
        raise UsageError(f"unknown root policy {roots!r}; choose from {', '.join(ROOT_POLICIES)}")
    contexts = [CycContext(n, t) for n in n_values for t in root_exponents(n, roots)]
    rows = identity_table(contexts, fmt)
    body = render_identity_table(rows, fmt)
    _write_output(body, event.get("out"))
    failed = sum(1 for row in rows if not row["pass"])
    exit_code = EXIT_PASS if failed == 0 else EXIT_FAIL
    return {
        "statusCode": 200 if exit_code == EXIT_PASS else 422,
        "exit_code": exit_code,
        "body": body,
    }


def handler(event: Dict[str, Any], context: Any = None) -> Dict[str, Any]:
    """
    Programmatic entry point. event keys: command (verify | table), n, suite,
    roots, format, out, jobs. Returns statusCode, exit_code and the rendered body.
    """
    command = event.get("command", "verify")
    logger.info(f"=== TAFT VERIFY {command.upper()} STARTED ===")
    logger.info(f"Event: {json.dumps({k: v for k, v in event.items() if k != 'command'})}")
    try:
        load_environment()
        config = load_verify_config()
        if command == "verify":
            result = _handle_verify(event, config)
        elif command == "table":
            result = _handle_table(event, config)
        else:
            return _usage(f"unknown command {command!r}; choose verify or table")
        logger.info(f"=== TAFT VERIFY {command.upper()} FINISHED: exit {result['exit_code']} ===")
        return result
    except UsageError as e:
        return _usage(str(e))
    except TaftVerifyError as e:
        # invalid n or root reaching the kernel is still bad input
        return _usage(str(e))
    except Exception as e:
        logger.error(f"Verification run failed with error: {str(e)}")
        logger.error(f"Error type: {type(e)}")
        logger.error(f"Full traceback: {traceback.format_exc()}")
        return {
            "statusCode": 500,
            "exit_code": EXIT_FAIL,
            "body": json.dumps({"error": "Verification run failed", "details": str(e)}),
        }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify_cli",
        description="Exact verification of the Taft algebra comodule structure on A_n(w)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    verify = subparsers.add_parser("verify", help="run verification suites")
    verify.add_argument("--n", default="2", help="n or a range a..b (each n >= 2)")
    verify.add_argument("--suite", action="append", choices=SUITES + ("all",),
                        help="suite to run; repeatable, default all")
    verify.add_argument("--roots", choices=ROOT_POLICIES, default=None,
                        help="canonical (w = zeta) or every primitive root")
    verify.add_argument("--format", choices=REPORT_FORMATS, default=None)
    verify.add_argument("--out", default=None, help="write the report to this path instead of stdout")
    verify.add_argument("--jobs", type=int, default=None, help="worker processes")

    table = subparsers.add_parser("table", help="emit the (k, s) identity table")
    table.add_argument("--n", default="2", help="n or a range a..b (each n >= 2)")
    table.add_argument("--roots", choices=ROOT_POLICIES, default=None)
    table.add_argument("--format", choices=TABLE_FORMATS, default="csv")
    table.add_argument("--out", default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad usage and 0 on --help/--version
        return int(e.code or 0)

    load_environment()
    configure_logging(load_verify_config().get("log_level", "INFO"))

    event = {key: value for key, value in vars(args).items() if value is not None}
    result = handler(event)
    if result["exit_code"] == EXIT_USAGE:
        details = json.loads(result["body"]).get("details", "")
        print(f"{parser.prog}: error: {details}", file=sys.stderr)
    elif not event.get("out"):
        sys.stdout.write(result["body"])
    return result["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
