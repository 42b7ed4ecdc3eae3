"""HTTP service exposing the library.

Every computation endpoint is a POST with a JSON body; domain errors surface
as HTTP 400 with a stable {"error", "detail"} shape so thin clients can map
them back to exit codes. The service is stateless and deterministic (wall
times aside), so it can run in-process for the CLI or standalone via uvicorn.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import families
from ..closedforms import (
    bipartite3_lambda,
    edge_bound,
    kk_check,
    star_lambda,
    turan_lambda,
    uniform_weight_lambda,
)
from ..enumeration import DEFAULT_GUARD
from ..errors import AlphaspecError, BadParamsError, SearchTooLargeError
from ..extremal import (
    DensityReport,
    SearchReport,
    UniversalFamilySpec,
    check_universal,
    colex_conjecture_check,
    density_report,
    ekr_check,
    ex_s_number,
    spectral_max,
    strongstab_check,
)
from ..hypergraph import FamilySpec, Hypergraph, format_hypergraph_text
from ..spectral import SolverConfig, SpectralResult, solve
from .schemas import (
    ClosedFormRequest,
    ClosedFormResponse,
    ColexRequest,
    DensityRequest,
    DensityResponse,
    DensityRowModel,
    EkrRequest,
    ExRequest,
    FamilyField,
    FamilyRequest,
    FamilyResponse,
    GsetField,
    HypergraphModel,
    KkRequest,
    KkResponse,
    LambdaRequest,
    SearchReportModel,
    SolverOptions,
    SpectralMaxRequest,
    SpectralResultModel,
    StrongstabRequest,
    UniversalRequest,
)


def _family(field: FamilyField | None) -> FamilySpec:
    members: list[Hypergraph] = []
    if field is not None:
        if field.token:
            members.extend(families.parse_family_token(field.token))
        if field.members:
            members.extend(m.to_core() for m in field.members)
    return FamilySpec(tuple(members))


def _gset(field: GsetField, n: int) -> UniversalFamilySpec:
    explicit = None
    if field.members is not None:
        explicit = tuple(m.to_core() for m in field.members)
    return UniversalFamilySpec(
        kind=field.kind, n=n, r=field.r, k=field.k, t=field.t, explicit=explicit,
    )


def _result_model(res: SpectralResult, alpha: float) -> SpectralResultModel:
    return SpectralResultModel(
        lam=res.lam,
        alpha=alpha,
        witness=[float(x) for x in res.witness.values],
        kkt_residual=res.kkt_residual,
        iterations=res.iterations,
        converged=res.converged,
        start_label=res.start_label,
        reduced_lam=res.reduced_lam,
    )


def _report_model(rep: SearchReport) -> SearchReportModel:
    return SearchReportModel(
        question=rep.question,
        k=rep.k,
        n=rep.n,
        alpha=rep.alpha,
        optimum_value=rep.optimum_value,
        witness=HypergraphModel.from_core(rep.witness) if rep.witness else None,
        witness_iso_class_count=rep.witness_iso_class_count,
        verdict=rep.verdict,
        counterexample=(
            HypergraphModel.from_core(rep.counterexample)
            if rep.counterexample else None
        ),
        wall_time_s=rep.wall_time_s,
        details={k: _jsonable(v) for k, v in rep.details.items()},
    )


def _jsonable(v):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return repr(v)


def _density_model(rep: DensityReport) -> DensityResponse:
    return DensityResponse(
        question=rep.question,
        k=rep.k,
        alpha=rep.alpha,
        pi=rep.pi,
        n_lo=rep.n_lo,
        n_hi=rep.n_hi,
        rows=[DensityRowModel(**vars(r)) for r in rep.rows],
        wall_time_s=rep.wall_time_s,
    )


def _guard(value: int | None) -> int:
    return DEFAULT_GUARD if value is None else value


def create_app() -> FastAPI:
    app = FastAPI(title="alphaspec", version="0.1.0")

    @app.exception_handler(AlphaspecError)
    async def _domain_error(request: Request, exc: AlphaspecError):
        body = {"error": type(exc).__name__, "detail": str(exc)}
        if isinstance(exc, SearchTooLargeError):
            body.update(
                n=exc.n, k=exc.k, num_sets=exc.num_sets, guard=exc.guard,
            )
        return JSONResponse(status_code=400, content=body)

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok"}

    @app.post("/v1/lambda", response_model=SpectralResultModel)
    def lambda_endpoint(req: LambdaRequest):
        h = req.hypergraph.to_core()
        res = solve(h, req.options.to_config())
        return _result_model(res, req.options.alpha)

    @app.post("/v1/family", response_model=FamilyResponse)
    def family_endpoint(req: FamilyRequest):
        h = _named_hypergraph(req)
        return FamilyResponse(
            hypergraph=HypergraphModel.from_core(h),
            text=format_hypergraph_text(h),
        )

    @app.post("/v1/closed-form", response_model=ClosedFormResponse)
    def closed_form_endpoint(req: ClosedFormRequest):
        return _closed_form(req)

    @app.post("/v1/search/ex", response_model=SearchReportModel)
    def ex_endpoint(req: ExRequest):
        rep = ex_s_number(
            req.k, req.n, _family(req.forbid), req.s,
            guard=_guard(req.guard), force=req.force, threads=req.threads,
        )
        return _report_model(rep)

    @app.post("/v1/search/spectral-max", response_model=SearchReportModel)
    def spectral_max_endpoint(req: SpectralMaxRequest):
        cfg = req.options.to_config() if req.options else None
        rep = spectral_max(
            req.k, req.n, _family(req.forbid), req.alpha,
            config=cfg, prune=req.prune,
            guard=_guard(req.guard), force=req.force, threads=req.threads,
        )
        return _report_model(rep)

    @app.post("/v1/search/colex", response_model=SearchReportModel)
    def colex_endpoint(req: ColexRequest):
        cfg = req.options.to_config() if req.options else None
        rep = colex_conjecture_check(
            req.k, req.m, req.n, req.alpha, config=cfg,
            guard=_guard(req.guard), force=req.force, threads=req.threads,
        )
        return _report_model(rep)

    @app.post("/v1/search/ekr", response_model=SearchReportModel)
    def ekr_endpoint(req: EkrRequest):
        cfg = req.options.to_config() if req.options else None
        rep = ekr_check(
            req.k, req.t, req.n, req.alpha, config=cfg,
            guard=_guard(req.guard), force=req.force, threads=req.threads,
        )
        return _report_model(rep)

    @app.post("/v1/verify/universal", response_model=SearchReportModel)
    def universal_endpoint(req: UniversalRequest):
        rep = check_universal(
            _family(req.forbid), _gset(req.gset, req.n), req.s, req.c,
            guard=_guard(req.guard), force=req.force, threads=req.threads,
        )
        return _report_model(rep)

    @app.post("/v1/verify/strongstab", response_model=SearchReportModel)
    def strongstab_endpoint(req: StrongstabRequest):
        cfg = req.options.to_config() if req.options else None
        rep = strongstab_check(
            _family(req.forbid), _gset(req.gset, req.n), req.alpha, req.c,
            config=cfg,
            guard=_guard(req.guard), force=req.force, threads=req.threads,
        )
        return _report_model(rep)

    @app.post("/v1/verify/kk", response_model=KkResponse)
    def kk_endpoint(req: KkRequest):
        h = req.hypergraph.to_core()
        solved = False
        solve_converged = None
        lam = req.lam
        if lam is None:
            opts = req.options or SolverOptions(alpha=req.alpha)
            res = solve(h, opts.to_config())
            lam = res.lam
            solved = True
            solve_converged = res.converged
        chk = kk_check(h, req.alpha, lam)
        return KkResponse(
            x=chk.x,
            shadow_bound=chk.shadow_bound,
            shadow_size=chk.shadow_size,
            holds=chk.holds,
            lam=chk.lam,
            solved=solved,
            solve_converged=solve_converged,
        )

    @app.post("/v1/report/density", response_model=DensityResponse)
    def density_endpoint(req: DensityRequest):
        cfg = req.options.to_config() if req.options else None
        rep = density_report(
            _family(req.forbid), req.n_lo, req.n_hi, req.alpha,
            lambda n: _gset(req.gset, n), req.pi, config=cfg,
            guard=_guard(req.guard), force=req.force, threads=req.threads,
        )
        return _density_model(rep)

    return app


def _named_hypergraph(req: FamilyRequest) -> Hypergraph:
    name = req.name.lower()

    def need(**kw) -> list[int]:
        vals = []
        for label, value in kw.items():
            if value is None:
                raise BadParamsError(f"family {name!r} needs --{label}")
            vals.append(value)
        return vals

    if name == "complete":
        k, n = need(k=req.k, n=req.n)
        return families.complete(k, n)
    if name == "turan":
        r, n = need(r=req.r, n=req.n)
        return families.turan_graph(r, n)
    if name == "star":
        k, t, n = need(k=req.k, t=req.t, n=req.n)
        return families.star(k, t, n)
    if name == "bipartite3":
        (n,) = need(n=req.n)
        return families.balanced_bipartite3(n)
    if name == "tripartite3":
        (n,) = need(n=req.n)
        return families.balanced_tripartite3(n)
    if name == "fano":
        return families.fano()
    if name == "f5":
        return families.f5()
    if name == "colex":
        k, m = need(k=req.k, m=req.m)
        return families.colex_segment(k, m)
    raise BadParamsError(f"unknown family name {req.name!r}")


def _closed_form(req: ClosedFormRequest) -> ClosedFormResponse:
    def need(**kw) -> list:
        vals = []
        for label, value in kw.items():
            if value is None:
                raise BadParamsError(f"closed form {req.name!r} needs --{label}")
            vals.append(value)
        return vals

    if req.name == "star":
        k, t, n = need(k=req.k, t=req.t, n=req.n)
        v = star_lambda(k, t, n, req.alpha)
    elif req.name == "bipartite3":
        (n,) = need(n=req.n)
        v = bipartite3_lambda(n, req.alpha)
    elif req.name == "turan":
        r, n = need(r=req.r, n=req.n)
        v = turan_lambda(r, n, req.alpha)
    elif req.name == "uniform":
        if req.hypergraph is None:
            raise BadParamsError("closed form 'uniform' needs a hypergraph")
        v = uniform_weight_lambda(req.hypergraph.to_core(), req.alpha)
    else:  # edge-bound
        k, e = need(k=req.k, e=req.e)
        return ClosedFormResponse(
            lam=edge_bound(k, e, req.alpha), method="edge_bound",
        )
    return ClosedFormResponse(
        lam=v.lam,
        method=v.method,
        inner_argmax=v.inner_argmax,
        derivative_at_argmax=v.derivative_at_argmax,
    )
