"""Exhaustive generation of family-free hypergraphs on a labeled vertex set.

The labeled walk is a depth-first include/exclude scan over all k-sets of [n]
in colex order. Including a set is only allowed when it does not complete a
copy of a forbidden member, and every copy must use the newest set (older
copies would have been caught earlier), which keeps the rejection test
anchored and cheap.

Per-isomorphism-class generation does not filter the labeled walk (one
canonical form per labeled graph is far too slow); it grows classes directly.
Freeness is closed under edge deletion, so every class with m+1 edges is
reachable from some class with m edges by re-adding an edge, and it suffices
to extend one canonically labeled representative per class by every universe
edge and deduplicate. Searches refuse to start when the k-set universe
exceeds a guard unless the caller forces them.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

from .errors import SearchTooLargeError, UniformityMismatchError
from .hypergraph import Edge, FamilySpec, Hypergraph, as_family, colex_key, new_hypergraph
from .isomorphism import _canonical_chunks, creates_copy

DEFAULT_GUARD = 36


def check_guard(k: int, n: int, guard: int = DEFAULT_GUARD, force: bool = False) -> int:
    """Number of k-sets on n vertices; raises unless forced when over guard."""
    num = comb(n, k) if 0 <= k <= n else 0
    if not force and num > guard:
        raise SearchTooLargeError(
            f"{num} candidate {k}-sets on {n} vertices exceeds the guard of {guard}; "
            f"pass force=True to run anyway",
            n=n, k=k, num_sets=num, guard=guard,
        )
    return num


def _checked_family(k: int, fam) -> FamilySpec:
    spec = as_family(fam)
    for f in spec:
        if f.k != k:
            raise UniformityMismatchError(
                f"forbidden member is {f.k}-uniform, search is {k}-uniform"
            )
    return spec


def enumerate_free(
    k: int,
    n: int,
    fam=(),
    up_to_iso: bool = False,
    guard: int = DEFAULT_GUARD,
    force: bool = False,
) -> Iterator[Hypergraph]:
    """Yield every fam-free k-graph on vertex set {0..n-1}; with up_to_iso one
    canonically labeled representative per isomorphism class, by edge count."""
    spec = _checked_family(k, fam)
    check_guard(k, n, guard, force)
    members = [f for f in spec if f.n <= n]
    if any(f.num_edges == 0 for f in members):
        return  # an edgeless member embeds in everything on >= its vertices
    universe = sorted(combinations(range(n), k), key=colex_key)

    if up_to_iso:
        yield from _classes(k, n, members, universe)
        return

    chosen: list[Edge] = []
    chosen_set: set[Edge] = set()

    def walk(idx: int) -> Iterator[Hypergraph]:
        if idx == len(universe):
            yield new_hypergraph(k, n, chosen)
            return
        e = universe[idx]
        if not any(creates_copy(f, chosen_set, e, n) for f in members):
            chosen.append(e)
            chosen_set.add(e)
            yield from walk(idx + 1)
            chosen.pop()
            chosen_set.remove(e)
        yield from walk(idx + 1)

    yield from walk(idx=0)


def _classes(k, n, members, universe) -> Iterator[Hypergraph]:
    """Breadth-first class generation: extend each free class representative
    by one universe edge, canonicalize, deduplicate."""
    level = [new_hypergraph(k, n, [])]
    yield level[0]
    seen: set[tuple] = set()
    while level:
        found: list[tuple[tuple, Hypergraph]] = []
        for rep in level:
            edges = rep.edge_set
            for e in universe:
                if e in edges:
                    continue
                if any(creates_copy(f, edges, e, n) for f in members):
                    continue
                h = new_hypergraph(k, n, rep.edges + (e,))
                chunks, perm = _canonical_chunks(h)
                key = (k, n, chunks)
                if key in seen:
                    continue
                seen.add(key)
                label = {orig: new for new, orig in enumerate(perm)}
                canon = new_hypergraph(
                    k, n, [tuple(label[v] for v in e2) for e2 in h.edges]
                )
                found.append((key, canon))
        found.sort(key=lambda item: item[0])
        level = [canon for _, canon in found]
        yield from level
