"""Closed-form and semi-closed-form spectral values for named families.

For stars the maximizer is known exactly. For balanced bipartite 3-graphs on
an odd vertex count and for unbalanced complete multipartite graphs the
optimal weights are uniform on each side/part, which reduces the problem to a
one-dimensional concave-like maximization over a mixing parameter a; that
scalar problem is solved numerically to machine accuracy (grid localization,
then bisection on the analytic derivative). Balanced cases need no inner
optimization: uniform weights are optimal and the value is k! e(H) n^(-k/alpha).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadAlphaError, BadParamsError, NotVertexUniformError
from .hypergraph import Hypergraph, shadow
from .spectral import symmetry_partition


@dataclass(frozen=True)
class ClosedFormValue:
    lam: float
    method: str  # 'exact_formula' | 'uniform_weight' | 'one_dim_opt'
    inner_argmax: float | None = None
    derivative_at_argmax: float | None = None


@dataclass(frozen=True)
class KkCheck:
    """Shadow-size test: the real x >= k-1 with x(x-1)...(x-k+1) equal to
    lam^(alpha/(alpha-1)), the implied lower bound C(x, k-1) on the shadow,
    and whether the actual shadow meets it."""

    x: float
    shadow_bound: float
    shadow_size: int
    holds: bool
    lam: float


def star_lambda(k: int, t: int, n: int, alpha: float) -> ClosedFormValue:
    """Spectral value of the star: all k-sets containing a fixed t-set."""
    if alpha < 1:
        raise BadAlphaError(f"alpha must be >= 1, got {alpha}")
    if not 1 <= t <= k <= n:
        raise BadParamsError(f"need 1 <= t <= k <= n, got t={t}, k={k}, n={n}")
    e = math.comb(n - t, k - t)
    if k == t:
        tail = 1.0
    else:
        tail = ((k - t) / (n - t)) ** ((k - t) / alpha)
    lam = math.factorial(k) * e * k ** (-k / alpha) * tail
    return ClosedFormValue(lam=lam, method="exact_formula", inner_argmax=t / k)


def uniform_weight_lambda(h: Hypergraph, alpha: float) -> ClosedFormValue:
    """k! e(H) n^(-k/alpha); valid when all vertices lie in one symmetry
    class, which forces the uniform vector to be optimal."""
    if alpha < 1:
        raise BadAlphaError(f"alpha must be >= 1, got {alpha}")
    if h.n < 1:
        raise BadParamsError("need at least one vertex")
    if len(symmetry_partition(h)) != 1:
        raise NotVertexUniformError(
            "vertices split into more than one symmetry class"
        )
    lam = math.factorial(h.k) * h.num_edges * h.n ** (-h.k / alpha)
    return ClosedFormValue(lam=lam, method="uniform_weight")


def _argmax_scalar(f, fp, lo: float, hi: float) -> tuple[float, float]:
    """Maximize f on (lo, hi) given its derivative fp. Grid-localize, collect
    every +to- sign change of fp, bisect each to machine width, return the
    best root (falling back to golden section if fp never changes sign)."""
    span = hi - lo
    a = lo + span * 1e-9
    b = hi - span * 1e-9
    grid = 512
    xs = [a + (b - a) * i / grid for i in range(grid + 1)]
    fps = [fp(x) for x in xs]
    roots: list[float] = []
    for i in range(grid):
        if fps[i] > 0.0 >= fps[i + 1]:
            rl, rh = xs[i], xs[i + 1]
            for _ in range(200):
                mid = 0.5 * (rl + rh)
                if fp(mid) > 0.0:
                    rl = mid
                else:
                    rh = mid
            roots.append(0.5 * (rl + rh))
    if not roots:
        gl, gh = a, b
        inv = (math.sqrt(5.0) - 1.0) / 2.0
        c = gh - inv * (gh - gl)
        d = gl + inv * (gh - gl)
        fc, fd = f(c), f(d)
        for _ in range(300):
            if fc >= fd:
                gh, d, fd = d, c, fc
                c = gh - inv * (gh - gl)
                fc = f(c)
            else:
                gl, c, fc = c, d, fd
                d = gl + inv * (gh - gl)
                fd = f(d)
        roots.append(0.5 * (gl + gh))
    best = max(roots, key=f)
    return best, f(best)


def bipartite3_lambda(n: int, alpha: float) -> ClosedFormValue:
    """Spectral value of the balanced two-part 3-graph (all triples meeting
    both parts). Even n: uniform weights. Odd n = 2t+1: weights are uniform on
    each part, leaving a scalar maximization over the imbalance a."""
    if n < 3:
        raise BadParamsError(f"need n >= 3, got {n}")
    if alpha <= 1:
        raise BadParamsError(f"needs alpha > 1, got {alpha}")
    if n % 2 == 0:
        h = n // 2
        e = math.comb(n, 3) - 2 * math.comb(h, 3)
        lam = 6.0 * e * n ** (-3.0 / alpha)
        return ClosedFormValue(lam=lam, method="uniform_weight")
    t = (n - 1) // 2
    u = 1.0 / alpha

    def xy(a: float) -> tuple[float, float]:
        return (1.0 + a) / n, (1.0 - a * t / (t + 1.0)) / n

    def f(a: float) -> float:
        x, y = xy(a)
        return (x * y) ** u * ((t - 1) * x ** u + t * y ** u)

    def fp(a: float) -> float:
        x, y = xy(a)
        g = (t - 1) * x ** u + t * y ** u
        bterm = 1.0 / x - (t / (t + 1.0)) / y
        aterm = (t - 1) * x ** (u - 1.0) - (t * t / (t + 1.0)) * y ** (u - 1.0)
        return (u / n) * (x * y) ** u * (bterm * g + aterm)

    astar, fstar = _argmax_scalar(f, fp, -1.0, (t + 1.0) / t)
    lam = 3.0 * t * (t + 1.0) * fstar
    return ClosedFormValue(
        lam=lam, method="one_dim_opt", inner_argmax=astar,
        derivative_at_argmax=fp(astar),
    )


def turan_lambda(r: int, n: int, alpha: float) -> ClosedFormValue:
    """Spectral value of the complete r-partite graph with balanced parts.
    Divisible n: uniform weights. Otherwise small parts share one weight x and
    large parts another y, and a scalar imbalance a is optimized."""
    if r < 2 or n < r:
        raise BadParamsError(f"need 2 <= r <= n, got r={r}, n={n}")
    if alpha <= 1:
        raise BadParamsError(f"needs alpha > 1, got {alpha}")
    q, s = divmod(n, r)
    if s == 0:
        e = math.comb(n, 2) - r * math.comb(q, 2)
        lam = 2.0 * e * n ** (-2.0 / alpha)
        return ClosedFormValue(lam=lam, method="uniform_weight")
    u = 1.0 / alpha
    big, small = q + 1.0, float(q)  # s parts of size q+1, r-s parts of size q

    def xy(a: float) -> tuple[float, float]:
        return (1.0 + a) / n, (1.0 - a * big * s / (small * (r - s))) / n

    def f(a: float) -> float:
        x, y = xy(a)
        return (
            big * big * s * (s - 1) * x ** (2 * u)
            + small * small * (r - s) * (r - s - 1) * y ** (2 * u)
            + 2.0 * big * small * s * (r - s) * x ** u * y ** u
        )

    def fp(a: float) -> float:
        x, y = xy(a)
        c = big * (s - 1) * x ** u + small * (r - s) * y ** u
        d = big * s * x ** u + small * (r - s - 1) * y ** u
        return (2.0 * u * big * s / n) * (x ** (u - 1.0) * c - y ** (u - 1.0) * d)

    hi = small * (r - s) / (big * s)
    astar, fstar = _argmax_scalar(f, fp, -1.0, hi)
    return ClosedFormValue(
        lam=fstar, method="one_dim_opt", inner_argmax=astar,
        derivative_at_argmax=fp(astar),
    )


def edge_bound(k: int, e: int, alpha: float) -> float:
    """Upper bound (k! e)^(1 - 1/alpha) on the spectral value of any k-graph
    with e edges; only meaningful for alpha > 1."""
    if k < 1 or e < 0:
        raise BadParamsError(f"need k >= 1 and e >= 0, got k={k}, e={e}")
    if alpha <= 1:
        raise BadParamsError(f"needs alpha > 1, got {alpha}")
    return float(math.factorial(k) * e) ** (1.0 - 1.0 / alpha)


def _falling(x: float, terms: int) -> float:
    out = 1.0
    for i in range(terms):
        out *= x - i
    return out


def kk_check(h: Hypergraph, alpha: float, lam: float) -> KkCheck:
    """Compare the shadow size against the bound implied by the spectral
    value: solve x(x-1)...(x-k+1) = lam^(alpha/(alpha-1)) for real x >= k-1
    (clamped up to k when lam > 0, since a nonzero value needs an edge) and
    require |shadow| >= C(x, k-1)."""
    if h.k < 2:
        raise BadParamsError("needs uniformity k >= 2")
    if alpha <= 1:
        raise BadParamsError(f"needs alpha > 1, got {alpha}")
    if not math.isfinite(lam) or lam < 0:
        raise BadParamsError(f"lam must be finite and >= 0, got {lam}")
    k = h.k
    shadow_size = shadow(h).num_edges
    if lam <= 0.0:
        return KkCheck(
            x=float(k - 1), shadow_bound=0.0, shadow_size=shadow_size,
            holds=True, lam=lam,
        )
    target = lam ** (alpha / (alpha - 1.0))
    lo, hi = float(k - 1), float(h.n + k)
    for _ in range(60):
        if _falling(hi, k) >= target:
            break
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _falling(mid, k) <= target:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    if x < k:
        x = float(k)
    bound = _falling(x, k - 1) / math.factorial(k - 1)
    return KkCheck(
        x=x, shadow_bound=bound, shadow_size=shadow_size,
        holds=shadow_size >= bound - 1e-9, lam=lam,
    )
