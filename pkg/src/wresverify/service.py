"""HTTP front end for the verification suite.

POST /verify accepts either structured spec fields or a raw spec text
and returns the rendered report; GET /checks lists the available check
names; GET /health is a liveness probe.
"""

from __future__ import annotations

from typing import List, Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from .suite import (CHECK_NAMES, SCHEMA_VERSION, SpecError, SuiteSpec,
                    exit_code, parse_spec, render_report, run_suite)

app = FastAPI(title="wres-verify", version="1.0.0",
              description="Exact symbolic verification suite for "
                          "residue-trace computations of twisted "
                          "first-order operators on four-manifolds "
                          "with boundary.")


class VerifyRequest(BaseModel):
    """Either set `spec_text` or any of the structured fields."""
    spec_text: Optional[str] = None
    family: str = "both"
    checks: Optional[List[str]] = None
    oracle_rank: int = Field(default=2, ge=1)
    seed: int = Field(default=0, ge=0)
    output: str = "json"


class RecordModel(BaseModel):
    check: str
    name: str
    computed: str
    expected: str
    match: bool
    flags: List[str]
    error: str


class SummaryModel(BaseModel):
    total: int
    passed: int
    failed: int
    flags: int
    all_match: bool


class VerifyResponse(BaseModel):
    version: str
    spec: dict
    records: List[RecordModel]
    summary: SummaryModel
    exit_code: int
    wall_time_seconds: float
    rendered: str


def _spec_from_request(req: VerifyRequest) -> SuiteSpec:
    if req.spec_text is not None:
        try:
            return parse_spec(req.spec_text)
        except SpecError as exc:
            raise HTTPException(status_code=422, detail={
                "line": exc.line, "column": exc.column,
                "reason": exc.reason})
    try:
        checks = (tuple(c for c in CHECK_NAMES if c in req.checks)
                  if req.checks is not None else CHECK_NAMES)
        if req.checks is not None:
            unknown = [c for c in req.checks if c not in CHECK_NAMES]
            if unknown:
                raise ValueError(f"unknown check(s): {unknown}")
        if req.family not in ("dirac", "signature", "both"):
            raise ValueError(f"unknown family {req.family!r}")
        if req.output not in ("json", "markdown", "md"):
            raise ValueError(f"unknown output format {req.output!r}")
        return SuiteSpec(family=req.family, checks=checks,
                         oracle_rank=req.oracle_rank, seed=req.seed,
                         output="markdown" if req.output == "md"
                         else req.output)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    spec = _spec_from_request(req)
    report = run_suite(spec)
    return VerifyResponse(
        version=SCHEMA_VERSION,
        spec=spec.to_dict(),
        records=[RecordModel(**r.to_dict()) for r in report.records],
        summary=SummaryModel(
            total=len(report.records),
            passed=sum(r.match for r in report.records),
            failed=sum(not r.match for r in report.records),
            flags=report.flag_count,
            all_match=report.all_match),
        exit_code=exit_code(report),
        wall_time_seconds=report.wall_time,
        rendered=render_report(report, spec.output))


@app.get("/checks")
def checks() -> dict:
    return {"version": SCHEMA_VERSION, "checks": list(CHECK_NAMES),
            "families": ["dirac", "signature", "both"],
            "defaults": SuiteSpec().to_dict()}


@app.get("/health", response_class=PlainTextResponse)
def health() -> str:
    return "ok"
