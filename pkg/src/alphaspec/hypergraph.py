"""k-uniform hypergraphs on labeled vertices 0..n-1.

The central invariant: edges are strictly sorted k-tuples, stored in
colexicographic order, so two hypergraphs are equal iff their edge tuples are
equal. All operations return new objects; nothing mutates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    BadParamsError,
    DuplicateEdgeError,
    EdgeArityError,
    UniformityMismatchError,
    VertexRangeError,
)

Edge = tuple[int, ...]


def colex_key(edge: Sequence[int]) -> tuple[int, ...]:
    """Sort key realizing colex order: A < B iff max(A ^ B) is in B."""
    return tuple(sorted(edge, reverse=True))


@dataclass(frozen=True)
class Hypergraph:
    k: int
    n: int
    edges: tuple[Edge, ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise VertexRangeError(f"vertex {u} not in [0, {self.n})")
        return sum(1 for e in self.edges if u in e)

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.num_edges})"


def new_hypergraph(k: int, n: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and canonicalize an edge list into a Hypergraph."""
    if k < 1:
        raise BadParamsError(f"uniformity k must be >= 1, got {k}")
    if n < 0:
        raise BadParamsError(f"vertex count must be >= 0, got {n}")
    canon: list[Edge] = []
    seen: set[Edge] = set()
    for raw in edges:
        e = tuple(sorted(raw))
        if len(e) != k or len(set(e)) != k:
            raise EdgeArityError(f"edge {tuple(raw)} does not have {k} distinct vertices")
        if e[0] < 0 or e[-1] >= n:
            raise VertexRangeError(f"edge {e} mentions a vertex outside [0, {n})")
        if e in seen:
            raise DuplicateEdgeError(f"edge {e} appears twice")
        seen.add(e)
        canon.append(e)
    canon.sort(key=colex_key)
    return Hypergraph(k=k, n=n, edges=tuple(canon))


@dataclass(frozen=True)
class FamilySpec:
    """A forbidden family: hypergraphs sharing one uniformity."""

    members: tuple[Hypergraph, ...] = field(default_factory=tuple)

    def __post_init__(self):
        ks = {f.k for f in self.members}
        if len(ks) > 1:
            raise UniformityMismatchError(f"family mixes uniformities {sorted(ks)}")

    @property
    def k(self) -> int | None:
        return self.members[0].k if self.members else None

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def as_family(fam: FamilySpec | Iterable[Hypergraph]) -> FamilySpec:
    if isinstance(fam, FamilySpec):
        return fam
    return FamilySpec(tuple(fam))


def shadow(h: Hypergraph) -> Hypergraph:
    """All (k-1)-sets contained in some edge, as a (k-1)-uniform hypergraph."""
    if h.k < 2:
        raise BadParamsError("shadow requires k >= 2")
    sub: set[Edge] = set()
    for e in h.edges:
        for s in combinations(e, h.k - 1):
            sub.add(s)
    return new_hypergraph(h.k - 1, h.n, sorted(sub, key=colex_key))


def min_s_degree(h: Hypergraph, s: int) -> int:
    """Least number of edges containing any fixed s-set of vertices."""
    if not 0 <= s <= h.k - 1:
        raise BadParamsError(f"s must be in [0, {h.k - 1}], got {s}")
    if s == 0:
        return h.num_edges
    if s > h.n:
        raise BadParamsError(f"no {s}-sets on {h.n} vertices")
    best = None
    for sub in combinations(range(h.n), s):
        subset = set(sub)
        d = sum(1 for e in h.edges if subset.issubset(e))
        if best is None or d < best:
            best = d
            if best == 0:
                break
    return best if best is not None else 0


def delete_vertex(h: Hypergraph, u: int) -> Hypergraph:
    """Remove u and all edges through it; relabeling preserves vertex order."""
    if not 0 <= u < h.n:
        raise VertexRangeError(f"vertex {u} not in [0, {h.n})")
    remap = lambda v: v if v < u else v - 1
    kept = [tuple(remap(v) for v in e) for e in h.edges if u not in e]
    return new_hypergraph(h.k, h.n - 1, kept)


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    if h1.k != h2.k:
        raise UniformityMismatchError(f"k mismatch: {h1.k} vs {h2.k}")
    shifted = [tuple(v + h1.n for v in e) for e in h2.edges]
    return new_hypergraph(h1.k, h1.n + h2.n, list(h1.edges) + shifted)


def connected_components(h: Hypergraph) -> list[list[int]]:
    """Vertex classes connected through shared edges (isolated vertices are
    singleton components)."""
    parent = list(range(h.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in h.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def parse_hypergraph_text(text: str) -> Hypergraph:
    """Read the exchange format: first line `k n`, then one edge per line as
    k space-separated 0-based vertex indices. `#` starts a comment."""
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if not lines:
        raise BadParamsError("empty hypergraph file (no `k n` header)")
    head = lines[0].split()
    if len(head) != 2:
        raise BadParamsError(f"header must be `k n`, got {lines[0]!r}")
    try:
        k, n = int(head[0]), int(head[1])
    except ValueError as exc:
        raise BadParamsError(f"non-integer header {lines[0]!r}") from exc
    edges = []
    for line in lines[1:]:
        try:
            edges.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise BadParamsError(f"non-integer vertex in edge line {line!r}") from exc
    return new_hypergraph(k, n, edges)


def format_hypergraph_text(h: Hypergraph) -> str:
    """Serialize in the exchange format; edges come out in colex order."""
    out = [f"{h.k} {h.n}"]
    out.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(out) + "\n"
