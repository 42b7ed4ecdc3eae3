"""Desk-scale exhaustive extremal searches and verification harnesses.

Everything here enumerates complete finite classes behind a size guard:
Turán-type maxima by branch-and-bound over the colex universe of k-sets,
spectral maxima / conjecture checks by solving one representative per
isomorphism class, and containment-style verdicts (universality, stability)
by checking every qualifying representative against a generated family of
maximal hosts. All outputs except wall time are deterministic and independent
of the thread count: parallel runs use the same prefiltering decisions and a
fixed reduction order.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Callable

from .closedforms import edge_bound
from .enumeration import DEFAULT_GUARD, check_guard, enumerate_free
from .errors import (
    BadParamsError,
    SearchTooLargeError,
    UniformityMismatchError,
)
from .families import (
    balanced_bipartite3,
    balanced_tripartite3,
    complete,
    intersecting_family,
    colex_segment,
    star,
    turan_graph,
)
from .hypergraph import (
    Edge,
    FamilySpec,
    Hypergraph,
    as_family,
    colex_key,
    min_s_degree,
    new_hypergraph,
)
from .isomorphism import canonical_key, contains, creates_copy, is_family_free
from .spectral import SolverConfig, SpectralResult, solve

TIE_TOL = 1e-8


@dataclass
class SearchReport:
    question: str
    k: int
    n: int
    alpha: float | None
    optimum_value: float
    witness: Hypergraph | None
    witness_iso_class_count: int
    verdict: str  # 'confirmed' | 'refuted' | 'indeterminate'
    counterexample: Hypergraph | None
    wall_time_s: float
    details: dict = field(default_factory=dict)


def _partitions_exact(n: int, parts: int, cap: int | None = None):
    """Partitions of n into exactly `parts` positive parts, weakly decreasing."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    hi = n - parts + 1 if cap is None else min(cap, n - parts + 1)
    lo = -(-n // parts)  # ceil: first (largest) part must be >= n/parts
    for first in range(hi, lo - 1, -1):
        for rest in _partitions_exact(n - first, parts - 1, first):
            yield (first,) + rest


def _multipartite(sizes) -> Hypergraph:
    n = sum(sizes)
    bounds = []
    start = 0
    for s in sizes:
        bounds.append(range(start, start + s))
        start += s
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in bounds[i]:
                for v in bounds[j]:
                    edges.append((u, v))
    return new_hypergraph(2, n, edges)


def _two_part3(a: int, n: int) -> Hypergraph:
    edges = [
        e for e in combinations(range(n), 3)
        if 0 < sum(1 for v in e if v < a) < 3
    ]
    return new_hypergraph(3, n, edges)


@dataclass(frozen=True)
class UniversalFamilySpec:
    """A finite generated family of hosts on n vertices. Only maximal members
    are produced; containment in a dropped non-maximal member always implies
    containment in a kept one."""

    kind: str  # 'complete_multipartite' | 'two_colorable_3graphs' | 'stars' | 'explicit_list'
    n: int
    r: int | None = None
    k: int | None = None
    t: int | None = None
    explicit: tuple[Hypergraph, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise BadParamsError(f"n must be >= 0, got {self.n}")
        if self.kind == "complete_multipartite":
            if self.r is None or self.r < 1:
                raise BadParamsError("complete_multipartite needs r >= 1")
        elif self.kind == "two_colorable_3graphs":
            if self.n < 3:
                raise BadParamsError("two_colorable_3graphs needs n >= 3")
        elif self.kind == "stars":
            if self.k is None or self.t is None or not 1 <= self.t <= self.k <= self.n:
                raise BadParamsError("stars needs 1 <= t <= k <= n")
        elif self.kind == "explicit_list":
            if not self.explicit:
                raise BadParamsError("explicit_list needs at least one member")
            if any(g.n != self.n for g in self.explicit):
                raise BadParamsError("explicit members must live on n vertices")
        else:
            raise BadParamsError(f"unknown universal family kind {self.kind!r}")

    @property
    def uniformity(self) -> int:
        if self.kind == "complete_multipartite":
            return 2
        if self.kind == "two_colorable_3graphs":
            return 3
        if self.kind == "stars":
            return self.k
        return self.explicit[0].k

    def members(self) -> tuple[Hypergraph, ...]:
        if self.kind == "complete_multipartite":
            p = min(self.r, self.n)
            if p == 0:
                return ()
            return tuple(
                _multipartite(sizes) for sizes in _partitions_exact(self.n, p)
            )
        if self.kind == "two_colorable_3graphs":
            lo = 1 if self.n == 3 else 2  # one-sided splits are non-maximal
            return tuple(_two_part3(a, self.n) for a in range(lo, self.n // 2 + 1))
        if self.kind == "stars":
            return (star(self.k, self.t, self.n),)
        return self.explicit


# ---------------------------------------------------------------------------
# branch-and-bound for ex / ex_s


def _seed_graphs(k: int, n: int) -> list[Hypergraph]:
    out: list[Hypergraph] = []
    if n >= k >= 1:
        for t in range(1, k + 1):
            out.append(star(k, t, n))
        for j in range(k, n + 1):
            out.append(new_hypergraph(k, n, complete(k, j).edges))
    if k == 2:
        for r in range(2, min(n, 6) + 1):
            out.append(turan_graph(r, n))
    if k == 3 and n >= 3:
        out.append(balanced_bipartite3(n))
        out.append(balanced_tripartite3(n))
    return out


def _bb_max(k: int, n: int, fam: FamilySpec, s: int, guard: int, force: bool):
    """Maximize min_s_degree over fam-free k-graphs on [n]. Returns
    (value, witness edges, number of iso classes attaining the value)."""
    check_guard(k, n, guard, force)
    members = [f for f in fam if f.n <= n]
    if any(f.num_edges == 0 for f in members):
        raise BadParamsError("an edgeless forbidden member leaves nothing free")
    universe = sorted(combinations(range(n), k), key=colex_key)
    m_total = len(universe)
    subs = list(combinations(range(n), s))
    sub_id = {c: i for i, c in enumerate(subs)}
    cover = [[sub_id[c] for c in combinations(e, s)] for e in universe]
    possible = [0] * len(subs)
    for e in universe:
        for ci in combinations(e, s):
            possible[sub_id[ci]] += 1
    included = [0] * len(subs)

    best_val = -1
    best_edges: list[Edge] = []
    tie_keys: set = set()
    for g in _seed_graphs(k, n):
        if not is_family_free(g, members):
            continue
        val = min_s_degree(g, s)
        if val > best_val:
            best_val = val
            best_edges = list(g.edges)
            tie_keys = {canonical_key(g)}
        elif val == best_val:
            tie_keys.add(canonical_key(g))

    chosen: list[Edge] = []
    chosen_set: set[Edge] = set()

    def dfs(idx: int):
        nonlocal best_val, best_edges, tie_keys
        ub = min(possible) if subs else 0
        if ub < best_val:
            return
        if idx == m_total:
            val = min(included) if subs else 0
            if val < best_val:
                return
            key = canonical_key(new_hypergraph(k, n, chosen))
            if val > best_val:
                best_val = val
                best_edges = list(chosen)
                tie_keys = {key}
            else:
                tie_keys.add(key)
            return
        e = universe[idx]
        if not any(creates_copy(f, chosen_set, e, n) for f in members):
            chosen.append(e)
            chosen_set.add(e)
            for c in cover[idx]:
                included[c] += 1
            dfs(idx + 1)
            for c in cover[idx]:
                included[c] -= 1
            chosen.pop()
            chosen_set.remove(e)
        for c in cover[idx]:
            possible[c] -= 1
        dfs(idx + 1)
        for c in cover[idx]:
            possible[c] += 1

    dfs(0)
    return best_val, best_edges, len(tie_keys)


def _family_desc(fam: FamilySpec) -> str:
    return ";".join(f"{f.n}v{f.num_edges}e" for f in fam) or "unrestricted"


def ex_number(
    k: int, n: int, fam, *,
    guard: int = DEFAULT_GUARD, force: bool = False, threads: int = 1,
) -> SearchReport:
    """Maximum edge count of a fam-free k-graph on n vertices."""
    return ex_s_number(k, n, fam, 0, guard=guard, force=force, threads=threads)


def ex_s_number(
    k: int, n: int, fam, s: int, *,
    guard: int = DEFAULT_GUARD, force: bool = False, threads: int = 1,
) -> SearchReport:
    """Maximum of min_s_degree over fam-free k-graphs on n vertices."""
    t0 = time.perf_counter()
    spec = as_family(fam)
    if spec.k is not None and spec.k != k:
        raise UniformityMismatchError(f"family is {spec.k}-uniform, search wants {k}")
    if not 0 <= s <= k - 1:
        raise BadParamsError(f"need 0 <= s <= k-1, got s={s}")
    if s > n:
        raise BadParamsError(f"need s <= n, got s={s}, n={n}")
    val, edges, ties = _bb_max(k, n, spec, s, guard, force)
    what = "edges" if s == 0 else f"min-{s}-degree"
    name = "ex" if s == 0 else f"ex_{s}"
    return SearchReport(
        question=f"{name}: max {what} of a [{_family_desc(spec)}]-free "
                 f"{k}-graph on {n} vertices",
        k=k, n=n, alpha=None,
        optimum_value=float(val),
        witness=new_hypergraph(k, n, edges),
        witness_iso_class_count=ties,
        verdict="confirmed",
        counterexample=None,
        wall_time_s=time.perf_counter() - t0,
        details={"labeled_universe": math.comb(n, k) if n >= k else 0},
    )


# ---------------------------------------------------------------------------
# solving whole iso classes


def _solve_many(graphs, config: SolverConfig, threads: int) -> list[SpectralResult]:
    cfg = replace(config, threads=1)
    if threads > 1 and len(graphs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(lambda h: solve(h, cfg), graphs))
    return [solve(h, cfg) for h in graphs]


def _free_classes(k, n, spec, guard, force) -> list[Hypergraph]:
    reps = list(enumerate_free(k, n, spec, up_to_iso=True, guard=guard, force=force))
    if not reps:
        raise BadParamsError("the family-free class is empty")
    order = sorted(range(len(reps)), key=lambda i: (-reps[i].num_edges, i))
    return [reps[i] for i in order]


def spectral_max(
    k: int, n: int, fam, alpha: float, *,
    config: SolverConfig | None = None, prune: bool = True,
    guard: int = DEFAULT_GUARD, force: bool = False, threads: int = 1,
) -> SearchReport:
    """Maximize the spectral value over fam-free k-graphs on n vertices, one
    representative per iso class. Pruning solves the densest class first and
    skips classes whose edge bound cannot beat that value; the decision uses
    only edge counts, so results do not depend on scheduling."""
    t0 = time.perf_counter()
    spec = as_family(fam)
    if spec.k is not None and spec.k != k:
        raise UniformityMismatchError(f"family is {spec.k}-uniform, search wants {k}")
    cfg = replace(config, alpha=alpha) if config else SolverConfig(alpha=alpha)
    reps = _free_classes(k, n, spec, guard, force)
    first = solve(reps[0], replace(cfg, threads=1))
    floor = first.lam
    if prune and alpha > 1:
        keep = [
            h for h in reps[1:]
            if h.num_edges == 0 or edge_bound(k, h.num_edges, alpha) > floor
        ]
        if not reps[0].num_edges:
            keep = []  # densest class is empty: nothing else exists
    else:
        keep = reps[1:]
    results = [first] + _solve_many(keep, cfg, threads)
    solved = [reps[0]] + keep
    best_i = 0
    for i in range(1, len(results)):
        if results[i].lam > results[best_i].lam + 1e-12:
            best_i = i
    best = results[best_i]
    ties = sum(1 for r in results if r.lam >= best.lam - TIE_TOL)
    all_conv = all(r.converged for r in results)
    return SearchReport(
        question=f"max spectral value (alpha={alpha:g}) over "
                 f"[{_family_desc(spec)}]-free {k}-graphs on {n} vertices",
        k=k, n=n, alpha=alpha,
        optimum_value=best.lam,
        witness=solved[best_i],
        witness_iso_class_count=ties,
        verdict="confirmed" if all_conv else "indeterminate",
        counterexample=None,
        wall_time_s=time.perf_counter() - t0,
        details={"num_classes": len(reps), "all_converged": all_conv},
    )


def check_universal(
    fam, gset: UniversalFamilySpec, s: int, c: float, *,
    guard: int = DEFAULT_GUARD, force: bool = False, threads: int = 1,
) -> SearchReport:
    """Does every fam-free H on gset.n vertices with min_s_degree above
    c * ex_s embed into some generated member?"""
    t0 = time.perf_counter()
    spec = as_family(fam)
    if spec.k is None:
        raise BadParamsError("need a nonempty forbidden family")
    k, n = spec.k, gset.n
    if gset.uniformity != k:
        raise UniformityMismatchError(
            f"hosts are {gset.uniformity}-uniform, family is {k}-uniform"
        )
    if not 0 <= s <= k - 1 or s > n:
        raise BadParamsError(f"need 0 <= s <= k-1 and s <= n, got s={s}")
    if c <= 0:
        raise BadParamsError(f"need c > 0, got {c}")
    exs, _, _ = _bb_max(k, n, spec, s, guard, force)
    threshold = c * exs
    members = gset.members()
    num_candidates = 0
    counterexample = None
    for h in enumerate_free(k, n, spec, up_to_iso=True, guard=guard, force=force):
        if min_s_degree(h, s) <= threshold + 1e-12:
            continue
        num_candidates += 1
        if not any(contains(g, h) for g in members):
            counterexample = h
            break
    verdict = "refuted" if counterexample is not None else "confirmed"
    return SearchReport(
        question=f"universality: every [{_family_desc(spec)}]-free {k}-graph on "
                 f"{n} vertices with min-{s}-degree > {c:g}*ex_{s} embeds in a host",
        k=k, n=n, alpha=None,
        optimum_value=float(exs),
        witness=None,
        witness_iso_class_count=0,
        verdict=verdict,
        counterexample=counterexample,
        wall_time_s=time.perf_counter() - t0,
        details={
            "ex_s": exs,
            "threshold": threshold,
            "num_candidates": num_candidates,
            "num_hosts": len(members),
        },
    )


def strongstab_check(
    fam, gset: UniversalFamilySpec, alpha: float, c: float, *,
    config: SolverConfig | None = None,
    guard: int = DEFAULT_GUARD, force: bool = False, threads: int = 1,
) -> SearchReport:
    """Check the stability statement: under the hypothesis
    c < lam(hosts)^(alpha/(alpha-1)) / (k! ex), every fam-free H satisfies
    lam(H) <= lam(hosts), and every H with lam(H) > (c k! ex)^((alpha-1)/alpha)
    embeds into a host. A failed hypothesis is reported (verdict
    indeterminate), and both conclusions are still checked and recorded."""
    t0 = time.perf_counter()
    spec = as_family(fam)
    if spec.k is None:
        raise BadParamsError("need a nonempty forbidden family")
    if alpha <= 1:
        raise BadParamsError(f"needs alpha > 1, got {alpha}")
    if c <= 0:
        raise BadParamsError(f"need c > 0, got {c}")
    k, n = spec.k, gset.n
    if gset.uniformity != k:
        raise UniformityMismatchError(
            f"hosts are {gset.uniformity}-uniform, family is {k}-uniform"
        )
    cfg = replace(config, alpha=alpha) if config else SolverConfig(alpha=alpha)
    ex_val, _, _ = _bb_max(k, n, spec, 0, guard, force)
    members = gset.members()
    host_results = _solve_many(list(members), cfg, threads)
    lam_hosts = max(r.lam for r in host_results)
    hyp_ok = ex_val >= 1 and c * math.factorial(k) * ex_val < lam_hosts ** (
        alpha / (alpha - 1.0)
    )
    threshold = (c * math.factorial(k) * ex_val) ** (1.0 - 1.0 / alpha)

    reps = _free_classes(k, n, spec, guard, force)
    results = _solve_many(reps, cfg, threads)
    best_i = max(range(len(results)), key=lambda i: results[i].lam)
    c1_bad = None
    c2_bad = None
    for h, r in zip(reps, results):
        if c1_bad is None and r.lam > lam_hosts + TIE_TOL:
            c1_bad = h
        if c2_bad is None and r.lam > threshold + TIE_TOL:
            if not any(contains(g, h) for g in members):
                c2_bad = h
    conclusion1 = c1_bad is None
    conclusion2 = c2_bad is None
    if not hyp_ok:
        verdict = "indeterminate"
        counterexample = None
    elif conclusion1 and conclusion2:
        verdict = "confirmed"
        counterexample = None
    else:
        verdict = "refuted"
        counterexample = c1_bad if c1_bad is not None else c2_bad
    details = {
        "ex": ex_val,
        "lambda_hosts": lam_hosts,
        "hypothesis_ok": hyp_ok,
        "hypothesis_rhs": lam_hosts ** (alpha / (alpha - 1.0)) / (math.factorial(k) * ex_val)
        if ex_val else math.inf,
        "conclusion2_threshold": threshold,
        "conclusion1_ok": conclusion1,
        "conclusion2_ok": conclusion2,
        "num_classes": len(reps),
        "all_converged": all(r.converged for r in results + host_results),
    }
    if c1_bad is not None:
        details["conclusion1_violation"] = repr(c1_bad)
    if c2_bad is not None:
        details["conclusion2_violation"] = repr(c2_bad)
    return SearchReport(
        question=f"stability (alpha={alpha:g}, c={c:g}) for "
                 f"[{_family_desc(spec)}]-free {k}-graphs on {n} vertices",
        k=k, n=n, alpha=alpha,
        optimum_value=results[best_i].lam,
        witness=reps[best_i],
        witness_iso_class_count=sum(
            1 for r in results if r.lam >= results[best_i].lam - TIE_TOL
        ),
        verdict=verdict,
        counterexample=counterexample,
        wall_time_s=time.perf_counter() - t0,
        details=details,
    )


def colex_conjecture_check(
    k: int, m: int, n: int, alpha: float, *,
    config: SolverConfig | None = None,
    guard: int = DEFAULT_GUARD, force: bool = False, threads: int = 1,
    class_guard: int = 200_000,
) -> SearchReport:
    """Does the first-m-in-colex k-graph maximize the spectral value among all
    m-edge k-graphs on n vertices?"""
    t0 = time.perf_counter()
    num = check_guard(k, n, guard, force)
    if not 0 <= m <= num:
        raise BadParamsError(f"need 0 <= m <= {num}, got m={m}")
    if alpha < 1:
        raise BadParamsError(f"need alpha >= 1, got {alpha}")
    if not force and math.comb(num, m) > class_guard:
        raise SearchTooLargeError(
            f"{math.comb(num, m)} edge subsets exceed {class_guard}",
            n=n, k=k, num_sets=math.comb(num, m), guard=class_guard,
        )
    cfg = replace(config, alpha=alpha) if config else SolverConfig(alpha=alpha)
    reps = []
    for h in enumerate_free(k, n, (), up_to_iso=True, guard=guard, force=force):
        if h.num_edges > m:
            break
        if h.num_edges == m:
            reps.append(h)
    seg = colex_segment(k, m)
    colex_graph = new_hypergraph(k, n, seg.edges)
    colex_key_ = canonical_key(colex_graph)
    results = _solve_many(reps, cfg, threads)
    lam_colex = None
    for h, r in zip(reps, results):
        if canonical_key(h) == colex_key_:
            lam_colex = r.lam
            break
    if lam_colex is None:
        lam_colex = solve(colex_graph, replace(cfg, threads=1)).lam
    best_i = max(range(len(results)), key=lambda i: results[i].lam)
    counterexample = None
    for h, r in zip(reps, results):
        if r.lam > lam_colex + TIE_TOL:
            counterexample = h
            break
    all_conv = all(r.converged for r in results)
    if counterexample is not None:
        verdict = "refuted"
    elif all_conv:
        verdict = "confirmed"
    else:
        verdict = "indeterminate"
    return SearchReport(
        question=f"colex: does the {m}-edge colex segment maximize the spectral "
                 f"value (alpha={alpha:g}) among {m}-edge {k}-graphs on {n} vertices",
        k=k, n=n, alpha=alpha,
        optimum_value=results[best_i].lam,
        witness=reps[best_i],
        witness_iso_class_count=sum(
            1 for r in results if r.lam >= results[best_i].lam - TIE_TOL
        ),
        verdict=verdict,
        counterexample=counterexample,
        wall_time_s=time.perf_counter() - t0,
        details={
            "num_classes": len(reps),
            "lambda_colex": lam_colex,
            "all_converged": all_conv,
        },
    )


def ekr_check(
    k: int, t: int, n: int, alpha: float, *,
    config: SolverConfig | None = None,
    guard: int = DEFAULT_GUARD, force: bool = False, threads: int = 1,
) -> SearchReport:
    """Maximize the spectral value over t-intersecting k-graphs on n vertices
    and report whether the t-star is the unique maximizer up to iso."""
    t0 = time.perf_counter()
    if not 1 <= t < k:
        raise BadParamsError(f"need 1 <= t < k, got t={t}, k={k}")
    if n < k:
        raise BadParamsError(f"need n >= k, got n={n}, k={k}")
    if alpha < 1:
        raise BadParamsError(f"need alpha >= 1, got {alpha}")
    cfg = replace(config, alpha=alpha) if config else SolverConfig(alpha=alpha)
    fam = intersecting_family(k, t)
    star_graph = star(k, t, n)
    star_key = canonical_key(star_graph)
    reps = _free_classes(k, n, fam, guard, force)
    results = _solve_many(reps, cfg, threads)
    lam_star = None
    for h, r in zip(reps, results):
        if canonical_key(h) == star_key:
            lam_star = r.lam
            break
    if lam_star is None:
        lam_star = solve(star_graph, replace(cfg, threads=1)).lam
    best_i = max(range(len(results)), key=lambda i: results[i].lam)
    best = results[best_i]
    beats = [
        (h, r) for h, r in zip(reps, results)
        if r.lam > lam_star + TIE_TOL
    ]
    co_max = [
        h for h, r in zip(reps, results)
        if r.lam >= best.lam - TIE_TOL and canonical_key(h) != star_key
    ]
    all_conv = all(r.converged for r in results)
    if beats:
        verdict = "refuted"
        counterexample = beats[0][0]
    elif co_max or not all_conv:
        verdict = "indeterminate"
        counterexample = None
    else:
        verdict = "confirmed"
        counterexample = None
    return SearchReport(
        question=f"is the {t}-star the unique spectral maximizer "
                 f"(alpha={alpha:g}) among {t}-intersecting {k}-graphs on {n} vertices",
        k=k, n=n, alpha=alpha,
        optimum_value=best.lam,
        witness=reps[best_i],
        witness_iso_class_count=sum(
            1 for r in results if r.lam >= best.lam - TIE_TOL
        ),
        verdict=verdict,
        counterexample=counterexample,
        wall_time_s=time.perf_counter() - t0,
        details={
            "lambda_star": lam_star,
            "num_classes": len(reps),
            "num_strictly_above_star": len(beats),
            "all_converged": all_conv,
        },
    )


# ---------------------------------------------------------------------------
# density ingredient table


@dataclass
class DensityRow:
    n: int
    skipped: bool = False
    reason: str | None = None
    ex: int | None = None
    first_diff: int | None = None
    pi_term: float | None = None
    resid1: float | None = None
    lambda_hosts: float | None = None
    uniform_term: float | None = None
    resid2: float | None = None
    mu_ratio: float | None = None


@dataclass
class DensityReport:
    question: str
    k: int
    alpha: float
    pi: float
    n_lo: int
    n_hi: int
    rows: list[DensityRow]
    wall_time_s: float


def density_report(
    fam, n_lo: int, n_hi: int, alpha: float,
    gset_per_n: Callable[[int], UniversalFamilySpec], pi: float, *,
    config: SolverConfig | None = None,
    guard: int = DEFAULT_GUARD, force: bool = False, threads: int = 1,
) -> DensityReport:
    """Tabulate, for each n in [n_lo, n_hi]: the extremal edge count, its first
    difference against pi * C(n, k-1), and the host spectral value against the
    uniform-weight expression k! ex n^(-k/alpha), plus the growth ratio
    lam_hosts / (pi n^(k - k/alpha)). Rows whose search trips the guard are
    kept but marked skipped."""
    t0 = time.perf_counter()
    spec = as_family(fam)
    if spec.k is None:
        raise BadParamsError("need a nonempty forbidden family")
    if alpha <= 1:
        raise BadParamsError(f"needs alpha > 1, got {alpha}")
    if n_lo > n_hi or n_lo < 0:
        raise BadParamsError(f"bad range [{n_lo}, {n_hi}]")
    if pi < 0:
        raise BadParamsError(f"pi must be >= 0, got {pi}")
    k = spec.k
    cfg = replace(config, alpha=alpha) if config else SolverConfig(alpha=alpha)

    def ex_of(n: int) -> int | None:
        if n < k:
            return 0
        try:
            val, _, _ = _bb_max(k, n, spec, 0, guard, force)
        except SearchTooLargeError:
            return None
        return val

    prev = ex_of(n_lo - 1) if n_lo >= 1 else 0
    rows: list[DensityRow] = []
    for n in range(n_lo, n_hi + 1):
        ex_n = ex_of(n)
        if ex_n is None:
            rows.append(DensityRow(n=n, skipped=True, reason="search too large"))
            prev = None
            continue
        row = DensityRow(n=n, ex=ex_n)
        if prev is not None:
            row.first_diff = ex_n - prev
            row.pi_term = pi * math.comb(n, k - 1)
            row.resid1 = abs(row.first_diff - row.pi_term)
        gset = gset_per_n(n)
        if gset.uniformity != k:
            raise UniformityMismatchError(
                f"hosts are {gset.uniformity}-uniform, family is {k}-uniform"
            )
        host_results = _solve_many(list(gset.members()), cfg, threads)
        row.lambda_hosts = max(r.lam for r in host_results)
        row.uniform_term = math.factorial(k) * ex_n * n ** (-k / alpha) if n else 0.0
        row.resid2 = abs(row.lambda_hosts - row.uniform_term)
        if pi > 0 and n > 0:
            row.mu_ratio = row.lambda_hosts / (pi * n ** (k - k / alpha))
        rows.append(row)
        prev = ex_n
    return DensityReport(
        question=f"density ingredients for [{_family_desc(spec)}]-free {k}-graphs, "
                 f"n in [{n_lo}, {n_hi}], alpha={alpha:g}, pi={pi:g}",
        k=k, alpha=alpha, pi=pi, n_lo=n_lo, n_hi=n_hi,
        rows=rows,
        wall_time_s=time.perf_counter() - t0,
    )
