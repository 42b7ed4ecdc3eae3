"""Weighted polynomial optimization on the unit alpha-norm ball.

The objective is tau_H(x) = k! * sum over edges of the product of the edge's
coordinates, maximized over nonnegative x with sum(x_i^alpha) = 1. Its value
at the maximizer is the alpha-spectral radius. Stationarity reads
t_i = lambda * x_i^(alpha-1) where t_i is the partial derivative divided by k
(so sum x_i t_i = tau exactly), and the reported residual is the max deviation
from that identity (restricted to the support when alpha = 1, where mass may
lawfully sit on a face of the simplex).

Solver layout: a diagonally shifted nonlinear power iteration (the shift kills
the period-2 flip that the bare map develops on bipartite-like structures),
projected gradient ascent with backtracking for the regime alpha < k where the
power map need not contract, and a damped multiplicative correction used as a
finishing pass because plain ascent stalls once tau improvements drop below
float roundoff while the residual is still above target. Multiple deterministic
starts guard against concentration on the wrong component or face.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    BadAlphaError,
    BadParamsError,
    BoundVoidError,
    DimensionMismatchError,
    NotAutomorphismError,
    VertexRangeError,
)
from .hypergraph import Hypergraph, connected_components

_LEX_TOL = 1e-12


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights with unit alpha-norm (sum of values**alpha is 1)."""

    alpha: float
    values: np.ndarray

    def __post_init__(self):
        if self.alpha < 1:
            raise BadAlphaError(f"alpha must be >= 1, got {self.alpha}")
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1:
            raise BadParamsError("weight vector must be one-dimensional")
        if v.size and float(v.min()) < -1e-12:
            raise BadParamsError("weight vector has a negative entry")
        v = np.where(v < 0, 0.0, v)
        norm = float((v ** self.alpha).sum())
        if not math.isfinite(norm) or abs(norm - 1.0) > 1e-8:
            raise BadParamsError(f"alpha-norm^alpha is {norm}, expected 1")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def normalized(cls, alpha: float, raw) -> "WeightVector":
        v = np.clip(np.asarray(raw, dtype=float), 0.0, None)
        s = float((v ** alpha).sum())
        if not math.isfinite(s) or s <= 0:
            raise BadParamsError("cannot normalize a nonpositive vector")
        return cls(alpha, v / s ** (1.0 / alpha))

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __iter__(self):
        return iter(self.values.tolist())


@dataclass(frozen=True)
class SolverConfig:
    alpha: float
    tol_kkt: float = 1e-10
    tol_step: float = 1e-13
    max_iter: int = 100_000
    num_random_starts: int = 16
    seed: int = 0
    method: str = "auto"
    threads: int = 1

    def __post_init__(self):
        if self.alpha < 1:
            raise BadAlphaError(f"alpha must be >= 1, got {self.alpha}")
        if self.method not in ("auto", "power", "gradient"):
            raise BadParamsError(f"unknown method {self.method!r}")
        if self.method == "power" and self.alpha == 1:
            raise BadParamsError("the power map is undefined at alpha = 1")
        if self.max_iter < 1 or self.num_random_starts < 0 or self.threads < 1:
            raise BadParamsError("max_iter/num_random_starts/threads out of range")
        if self.tol_kkt <= 0 or self.tol_step <= 0:
            raise BadParamsError("tolerances must be positive")


@dataclass(frozen=True)
class SpectralResult:
    lam: float
    witness: WeightVector
    kkt_residual: float
    iterations: int
    converged: bool
    start_label: str
    reduced_lam: float | None = None


class _EdgeData:
    __slots__ = ("k", "n", "m", "idx", "kfac", "km1fac")

    def __init__(self, h: Hypergraph):
        self.k = h.k
        self.n = h.n
        self.m = h.num_edges
        self.idx = np.array(h.edges, dtype=np.intp).reshape(self.m, self.k)
        self.kfac = float(math.factorial(h.k))
        self.km1fac = float(math.factorial(h.k - 1))


@lru_cache(maxsize=512)
def _edge_data(h: Hypergraph) -> _EdgeData:
    return _EdgeData(h)


def _tau(ed: _EdgeData, v: np.ndarray) -> float:
    if ed.m == 0:
        return 0.0
    return ed.kfac * float(np.prod(v[ed.idx], axis=1).sum())


def _partials(ed: _EdgeData, v: np.ndarray) -> np.ndarray:
    """Vector t with t_i = (k-1)! * sum over edges containing i of the product
    of the other coordinates. Uses prefix/suffix products so zero entries are
    handled without division."""
    t = np.zeros(ed.n)
    if ed.m == 0:
        return t
    p = v[ed.idx]  # (m, k)
    k = ed.k
    pre = np.ones_like(p)
    suf = np.ones_like(p)
    for c in range(1, k):
        pre[:, c] = pre[:, c - 1] * p[:, c - 1]
        suf[:, k - 1 - c] = suf[:, k - c] * p[:, k - c]
    np.add.at(t, ed.idx, pre * suf)
    return ed.km1fac * t


def _vec(h: Hypergraph, w) -> np.ndarray:
    v = w.values if isinstance(w, WeightVector) else np.asarray(w, dtype=float)
    if v.ndim != 1 or v.size != h.n:
        raise DimensionMismatchError(f"weight length {v.size} != n = {h.n}")
    return v


def tau_value(h: Hypergraph, w) -> float:
    return _tau(_edge_data(h), _vec(h, w))


def partial(h: Hypergraph, w, i: int) -> float:
    if not 0 <= i < h.n:
        raise VertexRangeError(f"vertex {i} not in [0, {h.n})")
    return float(_partials(_edge_data(h), _vec(h, w))[i])


def _residual(t: np.ndarray, v: np.ndarray, lam: float, alpha: float) -> float:
    if alpha > 1:
        return float(np.abs(t - lam * v ** (alpha - 1.0)).max()) if v.size else 0.0
    sup = v > 0
    if not sup.any():
        return 0.0
    return float(np.abs(t[sup] - lam).max())


def kkt_residual(h: Hypergraph, w: WeightVector, lam: float) -> float:
    """Max stationarity violation of (w, lam); support-restricted at alpha=1."""
    if not isinstance(w, WeightVector):
        raise BadParamsError("kkt_residual needs a WeightVector")
    v = _vec(h, w)
    t = _partials(_edge_data(h), v)
    return _residual(t, v, lam, w.alpha)


# ---------------------------------------------------------------------------
# symmetry


def _swap_is_automorphism(h: Hypergraph, i: int, j: int) -> bool:
    es = h.edge_set
    for e in h.edges:
        if i in e or j in e:
            im = tuple(sorted((j if v == i else i if v == j else v) for v in e))
            if im not in es:
                return False
    return True


def symmetry_partition(h: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """Vertex classes under the equivalence generated by transposition
    automorphisms, each class sorted, classes ordered by least vertex."""
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(h.n):
        for j in range(i + 1, h.n):
            if find(i) != find(j) and _swap_is_automorphism(h, i, j):
                parent[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def symmetrize_pair(h: Hypergraph, w: WeightVector, i: int, j: int) -> WeightVector:
    """Replace w_i, w_j by their alpha-mean; requires (i j) to be an
    automorphism, in which case tau does not decrease."""
    for u in (i, j):
        if not 0 <= u < h.n:
            raise VertexRangeError(f"vertex {u} not in [0, {h.n})")
    if i == j:
        raise BadParamsError("symmetrize_pair needs two distinct vertices")
    if not isinstance(w, WeightVector):
        raise BadParamsError("symmetrize_pair needs a WeightVector")
    v = _vec(h, w)
    if not _swap_is_automorphism(h, i, j):
        raise NotAutomorphismError(f"swapping {i} and {j} is not an automorphism")
    a = w.alpha
    m = ((v[i] ** a + v[j] ** a) / 2.0) ** (1.0 / a)
    out = v.copy()
    out[i] = m
    out[j] = m
    return WeightVector(a, out)


def _block_projector(blocks, alpha: float):
    lists = [np.array(b, dtype=np.intp) for b in blocks]

    def proj(v: np.ndarray) -> np.ndarray:
        out = v.copy()
        for b in lists:
            out[b] = float((v[b] ** alpha).mean()) ** (1.0 / alpha)
        return out

    return proj


# ---------------------------------------------------------------------------
# iteration phases; each returns (vector, steps_used)


def _normalize(v: np.ndarray, alpha: float) -> np.ndarray | None:
    v = np.where(v < 0, 0.0, v)
    s = float((v ** alpha).sum())
    if not math.isfinite(s) or s <= 0:
        return None
    return v / s ** (1.0 / alpha)


def _project_simplex(v: np.ndarray) -> np.ndarray:
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ranks = np.arange(1, v.size + 1)
    mask = u - css / ranks > 0
    rho = int(ranks[mask][-1])
    theta = css[rho - 1] / rho
    return np.maximum(v - theta, 0.0)


def _power_phase(ed, v, cfg, budget, proj):
    alpha = cfg.alpha
    w = _normalize(v, alpha)
    if w is None:
        return v, 0
    inv = 1.0 / (alpha - 1.0)
    for it in range(budget):
        t = _partials(ed, w)
        lam = float((w * t).sum())
        if _residual(t, w, lam, alpha) <= cfg.tol_kkt:
            return w, it
        c = lam if lam > 1e-300 else 1.0
        wn = (t + c * w ** (alpha - 1.0)) ** inv
        if proj is not None:
            wn = proj(wn)
        wn = _normalize(wn, alpha)
        if wn is None:
            return w, it + 1
        step = float(np.abs(wn - w).max())
        w = wn
        if step < cfg.tol_step:
            return w, it + 1
    return w, budget


def _ascent_phase(ed, v, cfg, budget, proj):
    """Projected gradient ascent with backtracking; works for alpha >= 1."""
    alpha = cfg.alpha
    if alpha == 1:
        w = _normalize(v, 1.0)
    else:
        w = _normalize(v, alpha)
    if w is None:
        return v, 0
    tau = _tau(ed, w)
    eta = 0.5 / max(tau, 1.0)
    it = 0
    while it < budget:
        t = _partials(ed, w)
        lam = float((w * t).sum())
        if _residual(t, w, lam, alpha) <= cfg.tol_kkt:
            return w, it
        stepped = None
        e = eta
        for _ in range(60):
            z = w + e * t
            if alpha == 1:
                z = _project_simplex(z)
            if proj is not None:
                z = proj(z)
            z = _normalize(z, alpha)
            if z is not None:
                tz = _tau(ed, z)
                if tz > tau:
                    stepped = (z, tz, e)
                    break
            e *= 0.5
        it += 1
        if stepped is None:
            return w, it
        z, tau, e = stepped[0], stepped[1], stepped[2]
        step = float(np.abs(z - w).max())
        w = z
        eta = min(e * 2.0, 1e9)
        if step < cfg.tol_step:
            return w, it
    return w, budget


def _polish_phase(ed, v, cfg, budget, proj):
    """Damped multiplicative correction w_i <- w_i * (t_i / (lam w_i^(a-1)))^eta
    on the support; converges past the roundoff plateau of plain ascent."""
    alpha = cfg.alpha
    k = ed.k
    w = v.copy()
    eta = 1.0 / max(k + alpha - 2.0, 1.0)
    best_w, best_res = w, math.inf
    it = 0
    while it < budget:
        t = _partials(ed, w)
        lam = _tau(ed, w)
        res = _residual(t, w, lam, alpha)
        it += 1
        if res <= cfg.tol_kkt:
            return w, it
        if res < best_res:
            best_res, best_w = res, w
        elif not math.isfinite(res) or res > 100.0 * max(best_res, cfg.tol_kkt):
            eta *= 0.5
            if eta < 1e-4:
                return best_w, it
            w = best_w
            continue
        if lam <= 0:
            return best_w, it
        sup = w > 0
        wn = np.zeros_like(w)
        ratio = t[sup] / (lam * w[sup] ** (alpha - 1.0))
        wn[sup] = w[sup] * ratio ** eta
        if proj is not None:
            wn = proj(wn)
        wn = _normalize(wn, alpha)
        if wn is None:
            return best_w, it
        step = float(np.abs(wn - w).max())
        w = wn
        if step < cfg.tol_step * 1e-2:
            return w, it
    return best_w, budget


@dataclass
class _StartRecord:
    lam: float
    vector: np.ndarray
    res: float
    iters: int
    converged: bool
    label: str


_PHASE_CAP = 500


def _run_start(ed, cfg: SolverConfig, label: str, raw: np.ndarray, proj) -> _StartRecord | None:
    """Alternate rounds of (main phase, polish) under per-phase caps until the
    stationarity residual passes or two whole rounds make no headway. The
    polish turn matters: ascent alone lets dead coordinates linger at tiny
    positive weights, stalling the residual."""
    alpha = cfg.alpha
    w = _normalize(raw, alpha)
    if w is None:
        return None
    if cfg.method == "gradient" or alpha == 1 or alpha < ed.k:
        main = _ascent_phase
        can_switch = False
    else:
        main = _power_phase
        can_switch = cfg.method != "power"
    used = 0
    best_w, best_res = w, math.inf
    prev_res = math.inf
    stalled = 0
    while used < cfg.max_iter:
        for phase in (main, _polish_phase):
            if used >= cfg.max_iter:
                break
            w, steps = phase(ed, w, cfg, min(_PHASE_CAP, cfg.max_iter - used), proj)
            used += steps
        res = _residual(_partials(ed, w), w, _tau(ed, w), alpha)
        if res < best_res:
            best_res, best_w = res, w
        if res <= cfg.tol_kkt:
            break
        if res >= 0.5 * prev_res:
            stalled += 1
            if stalled >= 2:
                if not can_switch:
                    break
                main, can_switch, stalled = _ascent_phase, False, 0
        else:
            stalled = 0
        prev_res = min(prev_res, res)
    w = best_w if best_res <= cfg.tol_kkt else w
    t = _partials(ed, w)
    lam = _tau(ed, w)
    res = _residual(t, w, lam, alpha)
    return _StartRecord(lam, w, res, used, res <= cfg.tol_kkt, label)


def _build_starts(h: Hypergraph, cfg: SolverConfig, blocks):
    starts: list[tuple[str, np.ndarray, bool]] = []
    n = h.n
    starts.append(("uniform", np.ones(n), False))
    if 1 < len(blocks) < n:
        v = np.zeros(n)
        for b in blocks:
            v[list(b)] = (1.0 / (len(blocks) * len(b))) ** (1.0 / cfg.alpha)
        starts.append(("classes", v, False))
    comps = connected_components(h)
    if len(comps) > 1:
        for ci, comp in enumerate(comps):
            if len(comp) >= h.k and any(h.degree(u) for u in comp):
                v = np.zeros(n)
                v[list(comp)] = 1.0
                starts.append((f"component:{ci}", v, False))
    for j in range(cfg.num_random_starts):
        rng = np.random.default_rng([cfg.seed, j])
        starts.append((f"random:{j}", rng.random(n) + 1e-2, False))
    if len(blocks) < n:
        starts.append(("reduced", np.ones(n), True))
    # drop duplicate directions, keeping the first label
    out = []
    seen = set()
    for label, raw, reduced in starts:
        v = _normalize(raw, cfg.alpha)
        if v is None:
            continue
        key = (np.round(v, 12).tobytes(), reduced)
        if key in seen:
            continue
        seen.add(key)
        out.append((label, v, reduced))
    return out


def _lex_greater(a: np.ndarray, b: np.ndarray) -> bool:
    for x, y in zip(a.tolist(), b.tolist()):
        if x > y + _LEX_TOL:
            return True
        if x < y - _LEX_TOL:
            return False
    return False


def solve(h: Hypergraph, config: SolverConfig) -> SpectralResult:
    """Maximize tau over the nonnegative unit alpha-ball from a deterministic
    family of starts; ties between starts break toward converged records and
    then toward the lexicographically largest witness."""
    if h.n < 1:
        raise BadParamsError("solve needs at least one vertex")
    ed = _edge_data(h)
    blocks = symmetry_partition(h)
    proj = _block_projector(blocks, config.alpha)
    starts = _build_starts(h, config, blocks)
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as ex:
            records = list(
                ex.map(
                    lambda s: _run_start(ed, config, s[0], s[1], proj if s[2] else None),
                    starts,
                )
            )
    else:
        records = [
            _run_start(ed, config, label, raw, proj if reduced else None)
            for label, raw, reduced in starts
        ]
    records = [r for r in records if r is not None]
    if not records:
        raise BadParamsError("no usable starts")
    max_lam = max(r.lam for r in records)
    pool = [r for r in records if r.lam >= max_lam - _LEX_TOL]
    if any(r.converged for r in pool):
        pool = [r for r in pool if r.converged]
    best = pool[0]
    for r in pool[1:]:
        if r.lam > best.lam + _LEX_TOL or (
            r.lam >= best.lam - _LEX_TOL and _lex_greater(r.vector, best.vector)
        ):
            best = r
    reduced_lam = None
    for r in records:
        if r.label == "reduced":
            reduced_lam = r.lam
            break
    return SpectralResult(
        lam=best.lam,
        witness=WeightVector(config.alpha, best.vector),
        kkt_residual=best.res,
        iterations=best.iters,
        converged=best.converged,
        start_label=best.label,
        reduced_lam=reduced_lam,
    )


def deletion_bound(h: Hypergraph, result: SpectralResult, u: int) -> float:
    """Lower bound on the spectral value after deleting u, from a solved
    witness: lam * (1 - w_u^alpha)^(-k/alpha) * (1 - k w_u^alpha)."""
    if not 0 <= u < h.n:
        raise VertexRangeError(f"vertex {u} not in [0, {h.n})")
    alpha = result.witness.alpha
    wua = float(result.witness.values[u]) ** alpha
    if h.k * wua >= 1.0:
        raise BoundVoidError(
            f"witness mass {wua:.6g} at vertex {u} makes the bound vacuous"
        )
    return result.lam * (1.0 - wua) ** (-h.k / alpha) * (1.0 - h.k * wua)
