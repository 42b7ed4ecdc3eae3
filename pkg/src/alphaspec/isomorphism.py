"""Subgraph containment and canonical labeling.

Containment is a backtracking injective embedding search (edges of F must map
onto edges of H, not necessarily induced). The canonical form of a hypergraph
is the lexicographically minimal edge bitset over all vertex relabelings,
where bit positions follow the colex order of k-sets; it is computed by
branch-and-bound over partial permutations. Assigning new labels 0..j in order
pins down exactly the bits of k-sets inside {0..j}, which is a prefix of the
colex sequence, so partial permutations prune against the incumbent prefix.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .errors import UniformityMismatchError
from .hypergraph import Edge, Hypergraph, new_hypergraph


def _nonisolated(h: Hypergraph) -> list[int]:
    seen: set[int] = set()
    for e in h.edges:
        seen.update(e)
    return sorted(seen)


def _embedding_order(f: Hypergraph) -> list[int]:
    """Non-isolated vertices of F, highest degree first (ties by index)."""
    deg = {v: 0 for v in _nonisolated(f)}
    for e in f.edges:
        for v in e:
            deg[v] += 1
    return sorted(deg, key=lambda v: (-deg[v], v))


def _edge_triggers(f: Hypergraph, order: list[int]) -> list[list[Edge]]:
    """For each position p in the embedding order, the F-edges whose vertices
    are all assigned once order[p] is placed."""
    pos = {v: i for i, v in enumerate(order)}
    triggers: list[list[Edge]] = [[] for _ in order]
    for e in f.edges:
        triggers[max(pos[v] for v in e)].append(e)
    return triggers


def contains(h: Hypergraph, f: Hypergraph) -> bool:
    """True iff some injective map V(F) -> V(H) sends every edge of F to an
    edge of H."""
    if h.k != f.k:
        raise UniformityMismatchError(f"k mismatch: {h.k} vs {f.k}")
    if f.n > h.n or f.num_edges > h.num_edges:
        return False
    if f.num_edges == 0:
        return True
    order = _embedding_order(f)
    triggers = _edge_triggers(f, order)
    hdeg = [0] * h.n
    for e in h.edges:
        for v in e:
            hdeg[v] += 1
    fdeg = {v: 0 for v in order}
    for e in f.edges:
        for v in e:
            fdeg[v] += 1
    hedges = h.edge_set
    image: dict[int, int] = {}
    used = [False] * h.n

    def extend(p: int) -> bool:
        if p == len(order):
            return True
        v = order[p]
        for u in range(h.n):
            if used[u] or hdeg[u] < fdeg[v]:
                continue
            image[v] = u
            ok = all(
                tuple(sorted(image[x] for x in e)) in hedges for e in triggers[p]
            )
            if ok:
                used[u] = True
                if extend(p + 1):
                    return True
                used[u] = False
        image.pop(v, None)
        return False

    return extend(0)


def is_family_free(h: Hypergraph, fam) -> bool:
    """True iff no member of the family embeds into h."""
    return not any(contains(h, f) for f in fam)


def creates_copy(f: Hypergraph, edges: set[Edge], new_edge: Edge, n: int) -> bool:
    """Would adding new_edge to the edge set create a copy of F that uses
    new_edge? (Copies avoiding new_edge are the caller's invariant.)"""
    if f.num_edges == 0:
        return f.n <= n
    if f.n > n or f.num_edges > len(edges) + 1:
        return False
    all_edges = edges | {new_edge}
    order = _embedding_order(f)
    triggers = _edge_triggers(f, order)
    pos = {v: i for i, v in enumerate(order)}

    for anchor in f.edges:
        # anchor must land on new_edge; try every injection of its vertices
        anchor_positions = sorted(pos[v] for v in anchor)
        for perm in permutations(new_edge):
            image = dict(zip(anchor, perm))
            used = set(perm)

            def extend(p: int) -> bool:
                while p < len(order) and order[p] in image:
                    if not _check_triggers(p):
                        return False
                    p += 1
                if p == len(order):
                    return True
                v = order[p]
                for u in range(n):
                    if u in used:
                        continue
                    image[v] = u
                    if _check_triggers(p):
                        used.add(u)
                        if extend(p + 1):
                            return True
                        used.remove(u)
                image.pop(v, None)
                return False

            def _check_triggers(p: int) -> bool:
                return all(
                    tuple(sorted(image[x] for x in e)) in all_edges
                    for e in triggers[p]
                )

            start = min(anchor_positions)
            # verify triggers for preassigned positions as we pass them
            if extend(0):
                return True
    return False


@lru_cache(maxsize=None)
def _levels(n: int, k: int) -> tuple[tuple[Edge, ...], ...]:
    """Level j holds the k-sets inside {0..j} that contain j, in colex order.
    Concatenating levels 0..n-1 gives all k-sets of [n] in colex order."""
    out = []
    for j in range(n):
        if j + 1 < k:
            out.append(())
        else:
            out.append(tuple(rest + (j,) for rest in combinations(range(j), k - 1)))
    return tuple(out)


def canonical_key(h: Hypergraph) -> tuple:
    """Hashable canonical invariant: (k, n, per-level minimal bit chunks)."""
    chunks, _ = _canonical_chunks(h)
    return (h.k, h.n, chunks)


def canonical_relabel(h: Hypergraph) -> Hypergraph:
    """A canonically relabeled copy (equal for all isomorphic inputs)."""
    _, perm = _canonical_chunks(h)
    label = {orig: new for new, orig in enumerate(perm)}
    return new_hypergraph(h.k, h.n, [tuple(label[v] for v in e) for e in h.edges])


def _canonical_chunks(h: Hypergraph) -> tuple[tuple[int, ...], list[int]]:
    n, k = h.n, h.k
    if n == 0 or h.num_edges == 0:
        return tuple(0 for _ in range(n)), list(range(n))
    levels = _levels(n, k)
    hedges = h.edge_set
    deg = [0] * n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    # low-degree vertices first tends to reach small prefixes early
    cand_order = sorted(range(n), key=lambda v: (deg[v], v))

    best: list[int | None] = [None] * n
    best_perm: list[int] = list(range(n))
    sigma: list[int] = []
    used = [False] * n

    def descend(j: int):
        nonlocal best_perm
        if j == n:
            best_perm = sigma.copy()
            return
        for u in cand_order:
            if used[u]:
                continue
            chunk = 0
            for s in levels[j]:
                chunk <<= 1
                e = tuple(sorted([sigma[v] for v in s[:-1]] + [u]))
                if e in hedges:
                    chunk |= 1
            cur = best[j]
            if cur is not None and chunk > cur:
                continue
            if cur is None or chunk < cur:
                best[j] = chunk
                for jj in range(j + 1, n):
                    best[jj] = None
            used[u] = True
            sigma.append(u)
            descend(j + 1)
            sigma.pop()
            used[u] = False

    descend(0)
    return tuple(c if c is not None else 0 for c in best), best_perm
