"""Named hypergraph families: complete graphs, Turan graphs, stars, the
balanced bipartite/tripartite 3-graphs, the Fano plane, small named forbidden
configurations, and colex segments."""

from __future__ import annotations

from itertools import combinations

from .errors import BadParamsError
from .hypergraph import FamilySpec, Hypergraph, colex_key, new_hypergraph


def complete(k: int, t: int) -> Hypergraph:
    """K^k_t: every k-subset of t vertices."""
    if k < 1 or t < k:
        raise BadParamsError(f"complete(k={k}, t={t}) needs t >= k >= 1")
    return new_hypergraph(k, t, combinations(range(t), k))


def balanced_parts(n: int, r: int) -> list[list[int]]:
    """Split 0..n-1 into r consecutive parts with sizes differing by <= 1;
    the n mod r larger parts come first."""
    q, s = divmod(n, r)
    parts = []
    start = 0
    for i in range(r):
        size = q + 1 if i < s else q
        parts.append(list(range(start, start + size)))
        start += size
    return parts


def turan_graph(r: int, n: int) -> Hypergraph:
    """T_{r,n}: balanced complete r-partite graph (k = 2)."""
    if r < 1 or n < 0:
        raise BadParamsError(f"turan_graph(r={r}, n={n}) needs r >= 1, n >= 0")
    parts = balanced_parts(n, r)
    part_of = {}
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    edges = [(u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]]
    return new_hypergraph(2, n, edges)


def star(k: int, t: int, n: int) -> Hypergraph:
    """t-star: all k-sets containing the fixed center {0..t-1}."""
    if not 1 <= t <= k <= n:
        raise BadParamsError(f"star(k={k}, t={t}, n={n}) needs 1 <= t <= k <= n")
    center = tuple(range(t))
    edges = [center + rest for rest in combinations(range(t, n), k - t)]
    return new_hypergraph(k, n, edges)


def balanced_bipartite3(n: int) -> Hypergraph:
    """B_n: all triples meeting both sides of a balanced bipartition
    (smaller part first: {0..floor(n/2)-1})."""
    if n < 3:
        raise BadParamsError(f"balanced_bipartite3(n={n}) needs n >= 3")
    half = n // 2
    edges = [
        e
        for e in combinations(range(n), 3)
        if any(v < half for v in e) and any(v >= half for v in e)
    ]
    return new_hypergraph(3, n, edges)


def balanced_tripartite3(n: int) -> Hypergraph:
    """All triples with exactly one vertex in each of three near-equal parts."""
    if n < 3:
        raise BadParamsError(f"balanced_tripartite3(n={n}) needs n >= 3")
    p1, p2, p3 = balanced_parts(n, 3)
    edges = [(a, b, c) for a in p1 for b in p2 for c in p3]
    return new_hypergraph(3, n, edges)


def fano() -> Hypergraph:
    """The 7-point plane: vertices are the nonzero vectors of F_2^3 (vertex
    v encodes vector v+1), edges are the triples {x, y, x xor y}."""
    edges = {
        tuple(sorted((x - 1, y - 1, (x ^ y) - 1)))
        for x in range(1, 8)
        for y in range(x + 1, 8)
        if (x ^ y) not in (x, y)
    }
    return new_hypergraph(3, 7, sorted(edges, key=colex_key))


def f5() -> Hypergraph:
    """The 5-vertex 3-graph with edges {012, 013, 234}."""
    return new_hypergraph(3, 5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])


def colex_iter(k: int):
    """All k-sets of the nonnegative integers in colex order."""
    m = k - 1
    while True:
        for rest in combinations(range(m), k - 1):
            yield rest + (m,)
        m += 1


def colex_segment(k: int, m: int) -> Hypergraph:
    """First m k-sets in colex order, on the fewest vertices containing them."""
    if k < 1 or m < 0:
        raise BadParamsError(f"colex_segment(k={k}, m={m}) needs k >= 1, m >= 0")
    edges = []
    it = colex_iter(k)
    for _ in range(m):
        edges.append(next(it))
    n = 1 + max((e[-1] for e in edges), default=-1)
    return new_hypergraph(k, n, edges)


def intersection_obstruction(k: int, i: int) -> Hypergraph:
    """Two k-edges sharing exactly i vertices (on 2k - i vertices)."""
    if not 0 <= i < k:
        raise BadParamsError(f"intersection size must be in [0, {k}), got {i}")
    a = tuple(range(k))
    b = tuple(range(i)) + tuple(range(k, 2 * k - i))
    return new_hypergraph(k, 2 * k - i, [a, b])


def intersecting_family(k: int, t: int) -> FamilySpec:
    """Forbidden configurations whose absence makes a k-graph t-intersecting:
    pairs of edges meeting in fewer than t vertices."""
    if not 1 <= t < k:
        raise BadParamsError(f"need 1 <= t < k, got t={t}, k={k}")
    return FamilySpec(tuple(intersection_obstruction(k, i) for i in range(t)))


def parse_family_token(token: str) -> FamilySpec:
    """Named forbidden families for the CLI and service: K3, K4, Kr:<r>,
    fano, F5, 2K2, intersect:<k>:<t>."""
    tok = token.strip()
    low = tok.lower()
    if low in ("k3", "k4"):
        return FamilySpec((complete(2, int(low[1])),))
    if low.startswith("kr:"):
        try:
            r = int(tok.split(":")[1])
        except (IndexError, ValueError) as exc:
            raise BadParamsError(f"bad family token {token!r}") from exc
        if r < 2:
            raise BadParamsError(f"Kr needs r >= 2, got {r}")
        return FamilySpec((complete(2, r),))
    if low == "fano":
        return FamilySpec((fano(),))
    if low == "f5":
        return FamilySpec((f5(),))
    if low == "2k2":
        return FamilySpec((intersection_obstruction(2, 0),))
    if low.startswith("intersect:"):
        bits = tok.split(":")
        try:
            k, t = int(bits[1]), int(bits[2])
        except (IndexError, ValueError) as exc:
            raise BadParamsError(f"bad family token {token!r}") from exc
        return intersecting_family(k, t)
    raise BadParamsError(f"unknown family token {token!r}")
