"""HTTP facade over the pipeline, one POST route per subcommand."""

from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .parser import ParseError, parse_problem
from .runner import decomposition_payload, verdict_report


class ProblemRequest(BaseModel):
    text: str
    mdb: str = Field("least-faithful",
                     pattern="^(least-faithful|min-nonzero)$")


class MinimalRequest(ProblemRequest):
    simplify: bool = False


class VerifyRequest(MinimalRequest):
    samples: int = Field(10, ge=1, le=1000)
    seed: int = 0


class BranchOut(BaseModel):
    E: list[str]
    N: list[str]
    basis: list[str]
    lts: list[str]


class StatsOut(BaseModel):
    cgb_size: int
    mcgb_size: Optional[int]
    removed: Optional[int]


class ResultOut(BaseModel):
    branches: list[BranchOut]
    cgb: list[str]
    mcgb: Optional[list[str]]
    stats: StatsOut


class BranchReport(BaseModel):
    equal: list[str]
    nonzero: list[str]
    sampled: int
    failures: int


class WitnessReport(BaseModel):
    member: str
    essential: bool
    confirmed: bool


class VerifyOut(BaseModel):
    ok: bool
    checks: int
    failures: int
    branches: list[BranchReport]
    witnesses: list[WitnessReport]


app = FastAPI(title="mcgb", version="0.1.0")


def _parse(text):
    try:
        return parse_problem(text)
    except ParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/healthz")
def healthz():
    return {"status": "ok"}


@app.post("/v1/cgs", response_model=ResultOut)
def run_cgs(req: ProblemRequest):
    return decomposition_payload(_parse(req.text), variant=req.mdb)


@app.post("/v1/cgb", response_model=ResultOut)
def run_cgb(req: ProblemRequest):
    # same computation as /v1/cgs; kept separate to mirror the CLI
    return decomposition_payload(_parse(req.text), variant=req.mdb)


@app.post("/v1/mcgb", response_model=ResultOut)
def run_mcgb(req: MinimalRequest):
    return decomposition_payload(_parse(req.text), minimal=True,
                                 simplify=req.simplify, variant=req.mdb)


@app.post("/v1/verify", response_model=VerifyOut)
def run_verify(req: VerifyRequest):
    return verdict_report(_parse(req.text), simplify=req.simplify,
                          variant=req.mdb, samples=req.samples,
                          seed=req.seed)
