"""Pydantic request/response models for the HTTP service.

These mirror the library types one-to-one; the service owns no logic beyond
converting between wire shape and core objects.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..hypergraph import Hypergraph, new_hypergraph
from ..spectral import SolverConfig


class HypergraphModel(BaseModel):
    k: int
    n: int
    edges: list[list[int]]

    @classmethod
    def from_core(cls, h: Hypergraph) -> "HypergraphModel":
        return cls(k=h.k, n=h.n, edges=[list(e) for e in h.edges])

    def to_core(self) -> Hypergraph:
        return new_hypergraph(self.k, self.n, self.edges)


class SolverOptions(BaseModel):
    alpha: float
    tol_kkt: float = 1e-10
    tol_step: float = 1e-13
    max_iter: int = 100_000
    num_random_starts: int = 16
    seed: int = 0
    method: Literal["auto", "power", "gradient"] = "auto"
    threads: int = 1

    def to_config(self) -> SolverConfig:
        return SolverConfig(
            alpha=self.alpha,
            tol_kkt=self.tol_kkt,
            tol_step=self.tol_step,
            max_iter=self.max_iter,
            num_random_starts=self.num_random_starts,
            seed=self.seed,
            method=self.method,
            threads=self.threads,
        )


class SpectralResultModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(serialization_alias="lambda", validation_alias="lambda")
    alpha: float
    witness: list[float]
    kkt_residual: float
    iterations: int
    converged: bool
    start_label: str
    reduced_lam: Optional[float] = None


class LambdaRequest(BaseModel):
    hypergraph: HypergraphModel
    options: SolverOptions


class FamilyRequest(BaseModel):
    name: str
    k: Optional[int] = None
    t: Optional[int] = None
    n: Optional[int] = None
    r: Optional[int] = None
    m: Optional[int] = None


class FamilyResponse(BaseModel):
    hypergraph: HypergraphModel
    text: str


class ClosedFormRequest(BaseModel):
    name: Literal["star", "uniform", "bipartite3", "turan", "edge-bound"]
    alpha: float
    k: Optional[int] = None
    t: Optional[int] = None
    n: Optional[int] = None
    r: Optional[int] = None
    e: Optional[int] = None
    hypergraph: Optional[HypergraphModel] = None


class ClosedFormResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(serialization_alias="lambda", validation_alias="lambda")
    method: str
    inner_argmax: Optional[float] = None
    derivative_at_argmax: Optional[float] = None


class FamilyField(BaseModel):
    """A forbidden family: a named token, an explicit member list, or both."""

    token: Optional[str] = None
    members: Optional[list[HypergraphModel]] = None


class GsetField(BaseModel):
    kind: Literal[
        "complete_multipartite", "two_colorable_3graphs", "stars", "explicit_list"
    ]
    r: Optional[int] = None
    k: Optional[int] = None
    t: Optional[int] = None
    members: Optional[list[HypergraphModel]] = None


class SearchReportModel(BaseModel):
    question: str
    k: int
    n: int
    alpha: Optional[float] = None
    optimum_value: float
    witness: Optional[HypergraphModel] = None
    witness_iso_class_count: int
    verdict: str
    counterexample: Optional[HypergraphModel] = None
    wall_time_s: float
    details: dict


class ExRequest(BaseModel):
    k: int
    n: int
    forbid: FamilyField = Field(default_factory=FamilyField)
    s: int = 0
    guard: Optional[int] = None
    force: bool = False
    threads: int = 1


class SpectralMaxRequest(BaseModel):
    k: int
    n: int
    forbid: FamilyField = Field(default_factory=FamilyField)
    alpha: float
    options: Optional[SolverOptions] = None
    prune: bool = True
    guard: Optional[int] = None
    force: bool = False
    threads: int = 1


class ColexRequest(BaseModel):
    k: int
    m: int
    n: int
    alpha: float
    options: Optional[SolverOptions] = None
    guard: Optional[int] = None
    force: bool = False
    threads: int = 1


class EkrRequest(BaseModel):
    k: int
    t: int
    n: int
    alpha: float
    options: Optional[SolverOptions] = None
    guard: Optional[int] = None
    force: bool = False
    threads: int = 1


class UniversalRequest(BaseModel):
    forbid: FamilyField
    gset: GsetField
    n: int
    s: int
    c: float
    guard: Optional[int] = None
    force: bool = False
    threads: int = 1


class StrongstabRequest(BaseModel):
    forbid: FamilyField
    gset: GsetField
    n: int
    alpha: float
    c: float
    options: Optional[SolverOptions] = None
    guard: Optional[int] = None
    force: bool = False
    threads: int = 1


class KkRequest(BaseModel):
    hypergraph: HypergraphModel
    alpha: float
    lam: Optional[float] = Field(
        default=None, serialization_alias="lambda", validation_alias="lambda"
    )
    options: Optional[SolverOptions] = None


class KkResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    x: float
    shadow_bound: float
    shadow_size: int
    holds: bool
    lam: float = Field(serialization_alias="lambda", validation_alias="lambda")
    solved: bool
    solve_converged: Optional[bool] = None


class DensityRequest(BaseModel):
    forbid: FamilyField
    gset: GsetField
    n_lo: int
    n_hi: int
    alpha: float
    pi: float
    options: Optional[SolverOptions] = None
    guard: Optional[int] = None
    force: bool = False
    threads: int = 1


class DensityRowModel(BaseModel):
    n: int
    skipped: bool = False
    reason: Optional[str] = None
    ex: Optional[int] = None
    first_diff: Optional[int] = None
    pi_term: Optional[float] = None
    resid1: Optional[float] = None
    lambda_hosts: Optional[float] = None
    uniform_term: Optional[float] = None
    resid2: Optional[float] = None
    mu_ratio: Optional[float] = None


class DensityResponse(BaseModel):
    question: str
    k: int
    alpha: float
    pi: float
    n_lo: int
    n_hi: int
    rows: list[DensityRowModel]
    wall_time_s: float
