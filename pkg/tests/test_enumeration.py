from itertools import combinations, permutations

import pytest

from alphaspec import (
    SearchTooLargeError,
    UniformityMismatchError,
    canonical_key,
    complete,
    new_hypergraph,
)
from alphaspec.enumeration import check_guard, enumerate_free
from alphaspec.families import f5, intersection_obstruction


def brute_free(k, n, members):
    """Filter all 2^C(n,k) edge subsets by brute-force containment."""

    def embeds(f, hset):
        for image in permutations(range(n), f.n):
            if all(tuple(sorted(image[v] for v in e)) in hset for e in f.edges):
                return True
        return False

    universe = list(combinations(range(n), k))
    out = []
    for mask in range(1 << len(universe)):
        edges = [universe[i] for i in range(len(universe)) if mask >> i & 1]
        hset = set(edges)
        if not any(embeds(f, hset) for f in members if f.n <= n):
            out.append(new_hypergraph(k, n, edges))
    return out


def brute_classes(graphs):
    keys = set()
    for g in graphs:
        best = None
        for perm in permutations(range(g.n)):
            edges = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in g.edges))
            if best is None or edges < best:
                best = edges
        keys.add(best)
    return keys


def test_labeled_counts_match_brute_force():
    k3 = complete(2, 3)
    for n in (3, 4, 5):
        want = brute_free(2, n, [k3])
        got = list(enumerate_free(2, n, [k3]))
        assert len(got) == len(want)
        assert {g.edges for g in got} == {g.edges for g in want}
    # no forbidden family: everything
    assert sum(1 for _ in enumerate_free(2, 4, ())) == 2 ** 6


def test_triangle_free_labeled_and_class_counts():
    # labeled counts 7, 41, 388 and class counts 3(*), 7, 14 on n = 3, 4, 5
    k3 = complete(2, 3)
    labeled = [sum(1 for _ in enumerate_free(2, n, [k3])) for n in (3, 4, 5)]
    assert labeled == [7, 41, 388]
    classes = [
        sum(1 for _ in enumerate_free(2, n, [k3], up_to_iso=True)) for n in (3, 4, 5)
    ]
    assert classes == [3, 7, 14]


def test_class_enumeration_matches_brute_classes():
    k3 = complete(2, 3)
    for n in (4, 5):
        labeled = brute_free(2, n, [k3])
        want = brute_classes(labeled)
        got = list(enumerate_free(2, n, [k3], up_to_iso=True))
        assert len(got) == len(want)
        assert len({canonical_key(g) for g in got}) == len(got)
        assert brute_classes(got) == want


def test_all_graph_classes_on_five_vertices():
    got = list(enumerate_free(2, 5, (), up_to_iso=True))
    assert len(got) == 34
    assert brute_classes(got) == brute_classes(brute_free(2, 5, ()))


def test_3uniform_enumeration():
    obs = intersection_obstruction(3, 1)  # two triples sharing one vertex
    labeled = list(enumerate_free(3, 5, [obs]))
    want = brute_free(3, 5, [obs])
    assert {g.edges for g in labeled} == {g.edges for g in want}
    classes = list(enumerate_free(3, 5, [obs], up_to_iso=True))
    assert brute_classes(classes) == brute_classes(want)


def test_f5_free_counts_small():
    labeled = list(enumerate_free(3, 5, [f5()]))
    want = brute_free(3, 5, [f5()])
    assert len(labeled) == len(want)


def test_members_yield_by_edge_count_and_start_empty():
    seq = list(enumerate_free(2, 4, [complete(2, 3)], up_to_iso=True))
    assert seq[0].num_edges == 0
    assert [g.num_edges for g in seq] == sorted(g.num_edges for g in seq)


def test_edgeless_member_kills_everything():
    empty_member = new_hypergraph(2, 2, [])
    assert list(enumerate_free(2, 4, [empty_member])) == []
    # but not when the member needs more vertices than available
    big_empty = new_hypergraph(2, 9, [])
    assert sum(1 for _ in enumerate_free(2, 3, [big_empty])) == 8


def test_guard():
    with pytest.raises(SearchTooLargeError) as info:
        list(enumerate_free(2, 10, ()))
    assert info.value.num_sets == 45
    assert info.value.guard == 36
    # forcing works
    gen = enumerate_free(2, 10, [complete(2, 3)], force=True)
    next(gen)
    assert check_guard(2, 5) == 10
    with pytest.raises(SearchTooLargeError):
        check_guard(3, 10, guard=36)


def test_uniformity_mismatch():
    with pytest.raises(UniformityMismatchError):
        list(enumerate_free(2, 4, [complete(3, 4)]))
