"""HTTP facade over the core package.

Every operation is a pure request/response computation, so the service is
stateless; the CLI is a thin client of these endpoints.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, bench, rendering, representation, verify
from .bounds import MODE_ASSERTED
from .errors import CrecError, EvaluationError, InvalidRepresentationError
from .evaluate import evaluate
from .recurrence import Recurrence
from .representation import derive_auto, derive_divmod, derive_modmod, derive_shifted
from .schemas import (
    BenchRequest,
    BenchResponse,
    BenchRowModel,
    DeriveRequest,
    DeriveResponse,
    ErrorResponse,
    EvalRequest,
    EvalResponse,
    FixtureModel,
    MismatchModel,
    PipelineCheckRequest,
    PipelineCheckResponse,
    RenderRequest,
    RenderResponse,
    RepresentationModel,
    TermValue,
    VerifyReportModel,
    VerifyRequest,
)

app = FastAPI(
    title="crec",
    version=__version__,
    description=(
        "Compile constant-coefficient linear recurrences into exact arithmetic "
        "closed forms and evaluate, verify, render and benchmark them."
    ),
)

_ERROR_RESPONSES = {400: {"model": ErrorResponse}, 422: {"model": ErrorResponse}}


@app.exception_handler(CrecError)
async def _domain_error(_: Request, exc: CrecError) -> JSONResponse:
    # validity failures get their own status so clients can distinguish them
    status = 422 if isinstance(exc, (EvaluationError, InvalidRepresentationError)) else 400
    return JSONResponse(
        status_code=status,
        content={"error": {"kind": type(exc).__name__, "message": str(exc)}},
    )


def _derive(rec: Recurrence, kind: str, base: str | None, shift_h: str | None, force: bool):
    base_int = int(base) if base is not None else None
    if kind == "divmod":
        return derive_divmod(rec, base_int, force)
    if kind == "modmod":
        return derive_modmod(rec, base_int, force)
    if kind == "shifted":
        h = int(shift_h) if shift_h is not None else None
        return derive_shifted(rec, base_int, h, force)
    return derive_auto(rec, base_int, force)


def _fixture_representation(fx, kind: str, base: str | None):
    base_int = int(base) if base is not None else None
    if kind in ("auto", fx.kind):
        return fx.representation(base_override=base_int)
    if kind == "divmod" and fx.kind == "modmod":
        return derive_divmod(fx.recurrence, base_int if base_int is not None else fx.base)
    raise CrecError(
        f"fixture {fx.name!r} compiles as {fx.kind!r}; kind {kind!r} is not available for it"
    )


def _resolve(req) -> tuple[representation.Representation, Recurrence | None]:
    """Resolve a request naming a fixture, a recurrence, or a raw representation."""
    given = [name for name in ("fixture", "recurrence", "representation") if getattr(req, name, None)]
    if len(given) != 1:
        raise CrecError("exactly one of fixture, recurrence or representation is required")
    if getattr(req, "representation", None):
        return req.representation.to_core(), None
    if req.fixture:
        fx = verify.get_fixture(req.fixture)
        return _fixture_representation(fx, getattr(req, "kind", "auto"), req.base), fx.recurrence
    rec = req.recurrence.to_core()
    rep = _derive(rec, req.kind, req.base, getattr(req, "shift_h", None), getattr(req, "force", False))
    return rep, rec


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/fixtures", response_model=list[FixtureModel])
def list_fixtures() -> list[FixtureModel]:
    return [FixtureModel(**fx.to_json_dict()) for fx in verify.fixtures()]


def _resolve_derive(req: DeriveRequest):
    if (req.fixture is None) == (req.recurrence is None):
        raise CrecError("exactly one of fixture or recurrence is required")
    if req.fixture is not None:
        fx = verify.get_fixture(req.fixture)
        return _fixture_representation(fx, req.kind, req.base), fx.recurrence
    rec = req.recurrence.to_core()
    return _derive(rec, req.kind, req.base, req.shift_h, req.force), rec


@app.post("/derive", response_model=DeriveResponse, responses=_ERROR_RESPONSES)
def derive(req: DeriveRequest) -> DeriveResponse:
    rep, _ = _resolve_derive(req)
    model = RepresentationModel.from_core(rep)
    if model.kind == "zero":
        note = "constant-zero sequence: degenerate representation"
    elif model.mode == MODE_ASSERTED:
        note = (
            f"base {model.base} (asserted): taken as given, validated only empirically; "
            "run verify to check a range"
        )
    else:
        note = (
            f"base {model.base} (certified): growth bound {model.g}, direct checks below "
            f"n={model.cutoff}, root bound {model.root_bound}"
        )
    return DeriveResponse(representation=model, note=note)


@app.post("/eval", response_model=EvalResponse, responses=_ERROR_RESPONSES)
def eval_endpoint(req: EvalRequest) -> EvalResponse:
    rep, _ = _resolve(req)
    if req.n is not None:
        indices = [req.n]
    elif req.n_lo is not None and req.n_hi is not None:
        if req.n_lo > req.n_hi:
            raise CrecError(f"bad range {req.n_lo}:{req.n_hi}")
        indices = list(range(req.n_lo, req.n_hi + 1))
    else:
        raise CrecError("provide n, or n_lo and n_hi")
    values = [TermValue(n=i, value=str(evaluate(rep, i, req.strategy))) for i in indices]
    return EvalResponse(values=values)


@app.post("/verify", response_model=VerifyReportModel, responses=_ERROR_RESPONSES)
def verify_endpoint(req: VerifyRequest) -> VerifyReportModel:
    rep, rec = _resolve(req)
    if rec is None:
        raise CrecError("verification needs the recurrence oracle; pass fixture or recurrence")
    report = verify.verify_range(
        rep, rec, req.n_lo, req.n_hi, strategy=req.strategy, exhaustive=req.exhaustive
    )
    payload = report.to_json_dict()
    mismatch = payload.pop("first_mismatch")
    return VerifyReportModel(
        **payload,
        first_mismatch=MismatchModel(**mismatch) if mismatch else None,
    )


@app.post("/pipeline-check", response_model=PipelineCheckResponse, responses=_ERROR_RESPONSES)
def pipeline_check(req: PipelineCheckRequest) -> PipelineCheckResponse:
    failures: list[str] = []
    for i in range(req.count):
        seed = req.seed + i
        rec = verify.random_natural_recurrence(seed, req.d_max, req.coeff_max, req.init_max)
        try:
            for rep in (derive_divmod(rec), derive_modmod(rec)):
                report = verify.verify_range(rep, rec, req.n_lo, req.n_hi)
                if report.status != "ok":
                    failures.append(f"seed {seed}: mismatch {report.first_mismatch}")
        except CrecError as exc:
            failures.append(f"seed {seed}: {exc}")
    return PipelineCheckResponse(
        count=req.count, status="ok" if not failures else "mismatch", failures=failures
    )


@app.post("/render", response_model=RenderResponse, responses=_ERROR_RESPONSES)
def render_endpoint(req: RenderRequest) -> RenderResponse:
    rep, _ = _resolve(req)
    return RenderResponse(formula=rendering.render(rep, req.format))


@app.post("/bench", response_model=BenchResponse, responses=_ERROR_RESPONSES)
def bench_endpoint(req: BenchRequest) -> BenchResponse:
    rows = bench.bench_eval(req.fixture, req.ns, strategies=tuple(req.strategies), reps=req.reps)
    return BenchResponse(rows=[BenchRowModel(**row.to_json_dict()) for row in rows])
