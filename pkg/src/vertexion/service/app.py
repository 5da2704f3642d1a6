"""FastAPI surface: evaluate any quantity at an exact parameter point and
run verification sweeps.  The CLI is a thin client of these endpoints."""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from ..lattice import OrdinaryModel, SpinConfig, TriangularModel, ordinary_wavefunction, wavefunction_triangular
from ..symfun import (
    CoincidentVariables,
    FrameViolation,
    GrothendieckPoint,
    Partition,
    f_triangular,
    grothendieck,
    of_ordinary,
)
from ..verify import SweepSpec, all_passed, reports_to_csv, run_suites, DEFAULT_SUITES
from ..weights import ConstraintViolation, KParams, LSiteParams, RParams
from .schemas import (
    CheckReportModel,
    EvalResponse,
    GrothendieckEvalRequest,
    OrdinaryEvalRequest,
    PairedEvalResponse,
    TriangularEvalRequest,
    VerifyRequest,
    VerifyResponse,
    scalar_str,
)

app = FastAPI(
    title="vertexion",
    description="Exact six-vertex wavefunction evaluation and verification",
)


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


def _spin_config(N: int, x: list[int]) -> SpinConfig:
    try:
        return SpinConfig(N, tuple(x))
    except ValueError as exc:
        raise _bad_request(exc)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/eval/w", response_model=PairedEvalResponse)
def eval_triangular(req: TriangularEvalRequest) -> PairedEvalResponse:
    """Triangular wavefunction: lattice oracle and closed form side by side."""
    cfg = _spin_config(len(req.w), req.x)
    try:
        model = TriangularModel(
            N=len(req.w), n=len(req.u), r=RParams(req.t), k=KParams(req.A, req.B),
            u=tuple(req.u), w=tuple(req.w),
        )
        oracle = wavefunction_triangular(model, cfg)
        formula = f_triangular(req.t, req.A, req.B, req.u, req.w, cfg)
    except (ZeroDivisionError, CoincidentVariables, ValueError) as exc:
        raise _bad_request(exc)
    return PairedEvalResponse(
        oracle=scalar_str(oracle), formula=scalar_str(formula), equal=oracle == formula
    )


@app.post("/eval/f", response_model=EvalResponse)
def eval_triangular_closed_form(req: TriangularEvalRequest) -> EvalResponse:
    cfg = _spin_config(len(req.w), req.x)
    try:
        value = f_triangular(req.t, req.A, req.B, req.u, req.w, cfg)
    except (ZeroDivisionError, CoincidentVariables, ValueError) as exc:
        raise _bad_request(exc)
    return EvalResponse(value=scalar_str(value))


def _sites(req: OrdinaryEvalRequest) -> tuple[LSiteParams, ...]:
    return tuple(
        LSiteParams(s.a, s.b, s.c, s.d, s.e, s.f) for s in req.sites
    )


@app.post("/eval/ow", response_model=EvalResponse)
def eval_ordinary(req: OrdinaryEvalRequest) -> EvalResponse:
    cfg = _spin_config(len(req.w), req.x)
    try:
        model = OrdinaryModel(
            N=len(req.w), n=len(req.u), r=RParams(req.t), sites=_sites(req),
            u=tuple(req.u), w=tuple(req.w),
        )
        value = ordinary_wavefunction(model, cfg)
    except (ConstraintViolation, ZeroDivisionError, ValueError) as exc:
        raise _bad_request(exc)
    return EvalResponse(value=scalar_str(value))


@app.post("/eval/of", response_model=EvalResponse)
def eval_ordinary_closed_form(req: OrdinaryEvalRequest) -> EvalResponse:
    cfg = _spin_config(len(req.w), req.x)
    try:
        sites = _sites(req)
        for s in sites:
            s.validate(req.t)
        value = of_ordinary(req.t, sites, req.u, req.w, cfg)
    except (ConstraintViolation, ZeroDivisionError, CoincidentVariables, ValueError) as exc:
        raise _bad_request(exc)
    return EvalResponse(value=scalar_str(value))


@app.post("/eval/groth", response_model=EvalResponse)
def eval_grothendieck(req: GrothendieckEvalRequest) -> EvalResponse:
    try:
        lam = Partition(tuple(req.lam), req.N)
        point = GrothendieckPoint(tuple(req.z), req.beta)
        value = grothendieck(lam, point)
    except (FrameViolation, CoincidentVariables, ZeroDivisionError, ValueError) as exc:
        raise _bad_request(exc)
    return EvalResponse(value=scalar_str(value))


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    spec = SweepSpec(
        n_range=(1, req.max_n), N_range=(1, req.max_N),
        trials=req.trials, seed=req.seed,
    )
    suites = tuple(req.suites) if req.suites else DEFAULT_SUITES
    try:
        reports = run_suites(spec, suites)
    except ValueError as exc:
        raise _bad_request(exc)
    return VerifyResponse(
        passed=all_passed(reports),
        reports=[CheckReportModel(**r.to_dict()) for r in reports],
        csv_summary=reports_to_csv(reports),
    )
