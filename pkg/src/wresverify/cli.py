"""Command-line interface.

`wres-verify` runs the verification suite in-process by default; with
`--server URL` it posts the same spec to a running service instead.
Exit codes: 0 all checks match, 1 at least one mismatch, 2 usage or
spec-parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .suite import (CHECK_NAMES, SpecError, SuiteSpec, exit_code,
                    parse_spec, render_report, run_suite)

USAGE_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wres-verify",
        description="Exact symbolic verification suite for residue-trace "
                    "computations of twisted first-order operators on "
                    "four-manifolds with boundary.")
    p.add_argument("--spec", metavar="FILE",
                   help="suite spec file (key = value lines)")
    p.add_argument("--family", choices=("dirac", "signature", "both"),
                   help="operator family (overrides the spec file)")
    p.add_argument("--only", metavar="CHECK[,CHECK...]",
                   help="comma-separated subset of checks to run")
    p.add_argument("--seed", type=int, metavar="N",
                   help="base seed for the numeric oracle")
    p.add_argument("--oracle-rank", type=int, metavar="N",
                   help="size of the random oracle matrices")
    p.add_argument("--format", choices=("json", "markdown", "md"),
                   help="report format (overrides the spec file)")
    p.add_argument("--server", metavar="URL",
                   help="post the spec to a running service instead of "
                        "verifying in-process")
    p.add_argument("--list-checks", action="store_true",
                   help="list available check names and exit")
    return p


def _spec_from_args(args: argparse.Namespace) -> SuiteSpec:
    if args.spec:
        try:
            with open(args.spec, "r", encoding="utf-8") as fh:
                spec = parse_spec(fh.read())
        except OSError as exc:
            raise SystemExit(f"wres-verify: cannot read {args.spec}: "
                             f"{exc.strerror}") from exc
    else:
        spec = SuiteSpec()
    updates = {}
    if args.family:
        updates["family"] = args.family
    if args.only:
        picked = [c.strip() for c in args.only.split(",") if c.strip()]
        unknown = [c for c in picked if c not in CHECK_NAMES]
        if unknown:
            raise SpecError(0, 0, f"unknown check(s) in --only: "
                                  f"{', '.join(unknown)}")
        updates["checks"] = tuple(c for c in CHECK_NAMES if c in picked)
    if args.seed is not None:
        if args.seed < 0:
            raise SpecError(0, 0, "--seed must be >= 0")
        updates["seed"] = args.seed
    if args.oracle_rank is not None:
        if args.oracle_rank < 1:
            raise SpecError(0, 0, "--oracle-rank must be >= 1")
        updates["oracle_rank"] = args.oracle_rank
    if args.format:
        updates["output"] = ("markdown" if args.format == "md"
                             else args.format)
    if updates:
        spec = SuiteSpec(**{**spec.to_dict(), **updates,
                            "checks": tuple(updates.get("checks",
                                                        spec.checks))})
    return spec


def _run_remote(server: str, spec: SuiteSpec) -> int:
    import httpx
    payload = spec.to_dict()
    payload["checks"] = list(spec.checks)
    url = server.rstrip("/") + "/verify"
    try:
        resp = httpx.post(url, json=payload, timeout=600.0)
    except httpx.HTTPError as exc:
        print(f"wres-verify: cannot reach {url}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if resp.status_code == 422:
        print(f"wres-verify: server rejected spec: {resp.json()}",
              file=sys.stderr)
        return USAGE_ERROR
    if resp.status_code != 200:
        print(f"wres-verify: server error {resp.status_code}: {resp.text}",
              file=sys.stderr)
        return USAGE_ERROR
    body = resp.json()
    sys.stdout.write(body["rendered"])
    return body["exit_code"]


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list_checks:
        for name in CHECK_NAMES:
            print(name)
        return 0
    try:
        spec = _spec_from_args(args)
    except SpecError as exc:
        print(f"wres-verify: spec error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SystemExit as exc:
        print(exc, file=sys.stderr)
        return USAGE_ERROR
    if args.server:
        return _run_remote(args.server, spec)
    report = run_suite(spec)
    sys.stdout.write(render_report(report, spec.output))
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
