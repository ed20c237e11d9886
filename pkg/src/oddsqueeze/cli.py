"""Command-line front end.

``oddsqueeze verify <suite> [options]`` runs a verification suite and
writes the machine-readable report (JSON by default, CSV with --format
csv) to stdout or to --out PATH. The command is a thin client of the HTTP
service: by default it mounts the FastAPI app in process, with --server
URL it talks to a running instance instead. ``oddsqueeze serve`` starts
the service.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
error, 3 I/O or transport error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Sequence

import httpx

from ._version import __version__
from .report import FORMATS, MODES, SUITES, SuiteConfig, emit_report, reload_summary

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddsqueeze", description=__doc__)
    parser.add_argument("--version", action="version", version=f"oddsqueeze {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite and emit a report")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--p-max", type=int, default=10, help="largest odd-sector index p (default 10)")
    verify.add_argument("--n-max", type=int, default=None, help="largest n (default: p-max)")
    verify.add_argument("--mode", choices=MODES, default="both")
    verify.add_argument("--tol", type=float, default=None, help="override every per-check tolerance")
    verify.add_argument("--format", choices=FORMATS, default="json")
    verify.add_argument("--out", default=None, metavar="PATH", help="write the report here instead of stdout")
    verify.add_argument("--dim", type=int, default=None, help="override the operator truncation dimension")
    verify.add_argument("--xi", type=float, default=None, help="restrict operator checks to this |xi|")
    verify.add_argument("--phi", type=float, default=None, help="restrict operator checks to this phase")
    verify.add_argument("--server", default=None, metavar="URL", help="run against a remote service")

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def parse_cli(argv: Sequence[str]) -> SuiteConfig:
    """Parse a ``verify`` invocation into a validated configuration.

    Raises SystemExit(2) on usage errors, including unknown flags and
    invalid ranges.
    """
    parser = _build_parser()
    args = parser.parse_args(list(argv))
    if args.command != "verify":
        parser.error("parse_cli handles the verify command")
    try:
        return SuiteConfig(
            suite=args.suite,
            p_max=args.p_max,
            n_max=args.n_max,
            mode=args.mode,
            tol=args.tol,
            format=args.format,
            output_path=args.out,
            dim=args.dim,
            xi=args.xi,
            phi=args.phi,
        )
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")  # parser.error raises SystemExit


def _request_body(config: SuiteConfig) -> dict:
    return {
        "suite": config.suite,
        "p_max": config.p_max,
        "n_max": config.n_max,
        "mode": config.mode,
        "tol": config.tol,
        "dim": config.dim,
        "xi": config.xi,
        "phi": config.phi,
    }


async def _post_verify(config: SuiteConfig, server: str | None) -> dict:
    if server is None:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://oddsqueeze.local", timeout=None) as client:
            response = await client.post("/verify", json=_request_body(config))
    else:
        async with httpx.AsyncClient(base_url=server, timeout=None) as client:
            response = await client.post("/verify", json=_request_body(config))
    if response.status_code == 422:
        raise SystemExit(EXIT_USAGE)
    response.raise_for_status()
    return json.loads(response.text)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    config = parse_cli(argv)
    try:
        doc = asyncio.run(_post_verify(config, args.server))
    except SystemExit:
        raise
    except httpx.HTTPError as exc:
        print(f"oddsqueeze: transport error: {exc}", file=sys.stderr)
        return EXIT_IO
    # The service does not know client-side output concerns; complete the echo.
    doc["config"]["format"] = config.format
    doc["config"]["output_path"] = config.output_path

    try:
        text = emit_report(doc, config.format, config.output_path)
    except OSError as exc:
        print(f"oddsqueeze: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    if config.output_path is None:
        sys.stdout.write(text)

    summary = reload_summary(doc)
    print(
        f"oddsqueeze: suite={config.suite} passed={summary['passed']}"
        f" failed={summary['failed']} duration={doc['duration_seconds']:.3f}s",
        file=sys.stderr,
    )
    return EXIT_OK if summary["failed"] == 0 else EXIT_CHECK_FAILED


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
