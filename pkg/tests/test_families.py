import math
from itertools import combinations

import pytest

from alphaspec import (
    BadParamsError,
    balanced_bipartite3,
    balanced_tripartite3,
    colex_segment,
    complete,
    f5,
    fano,
    intersecting_family,
    parse_family_token,
    star,
    turan_graph,
)
from alphaspec.families import balanced_parts, intersection_obstruction


def test_complete_counts():
    for k in (1, 2, 3):
        for t in range(k, 8):
            h = complete(k, t)
            assert h.num_edges == math.comb(t, k)
    with pytest.raises(BadParamsError):
        complete(3, 2)


def test_balanced_parts():
    assert balanced_parts(7, 3) == [[0, 1, 2], [3, 4], [5, 6]]
    assert balanced_parts(6, 2) == [[0, 1, 2], [3, 4, 5]]
    assert balanced_parts(3, 5) == [[0], [1], [2], [], []]


def test_turan_edge_count_matches_formula():
    for r in (1, 2, 3, 4):
        for n in range(0, 10):
            h = turan_graph(r, n)
            sizes = [len(p) for p in balanced_parts(n, r)]
            want = (n * n - sum(s * s for s in sizes)) // 2
            assert h.num_edges == want
    # T_{2,n} has floor(n^2/4) edges
    for n in range(2, 12):
        assert turan_graph(2, n).num_edges == n * n // 4


def test_star_structure():
    s = star(2, 1, 4)
    assert s.edges == ((0, 1), (0, 2), (0, 3))
    s = star(3, 2, 5)
    assert all(e[:2] == (0, 1) for e in s.edges)
    assert s.num_edges == 3
    # t = k means a single edge padded with isolated vertices
    s = star(3, 3, 6)
    assert s.edges == ((0, 1, 2),)
    with pytest.raises(BadParamsError):
        star(2, 3, 5)


def test_star_edge_count():
    for k in (2, 3):
        for t in range(1, k + 1):
            for n in range(k, 9):
                assert star(k, t, n).num_edges == math.comb(n - t, k - t)


def test_bipartite3_edge_count():
    # triples minus those inside one side
    for n in range(3, 12):
        h = balanced_bipartite3(n)
        a = n // 2
        b = n - a
        want = math.comb(n, 3) - math.comb(a, 3) - math.comb(b, 3)
        assert h.num_edges == want


def test_tripartite3_edge_count():
    for n in range(3, 12):
        h = balanced_tripartite3(n)
        s1, s2, s3 = (len(p) for p in balanced_parts(n, 3))
        assert h.num_edges == s1 * s2 * s3


def test_fano_is_a_projective_plane():
    h = fano()
    assert h.n == 7 and h.num_edges == 7
    # every vertex in 3 lines, every pair of lines meets in one point
    assert all(h.degree(v) == 3 for v in range(7))
    for e, f in combinations(h.edges, 2):
        assert len(set(e) & set(f)) == 1


def test_f5_shape():
    h = f5()
    assert (h.k, h.n, h.num_edges) == (3, 5, 3)


def test_colex_segment_prefix_property():
    # the m-th segment is the (m-1)-th plus one more set
    prev = colex_segment(2, 0)
    for m in range(1, 12):
        seg = colex_segment(2, m)
        assert set(prev.edges) < set(seg.edges)
        prev = seg
    # complete-graph sizes: first C(t,2) pairs form K_t
    for t in range(2, 7):
        seg = colex_segment(2, math.comb(t, 2))
        assert seg == complete(2, t)
    seg3 = colex_segment(3, 4)
    assert seg3 == complete(3, 4)


def test_intersecting_family():
    fam = intersecting_family(3, 2)
    assert len(fam) == 2
    sizes = sorted((f.n, f.num_edges) for f in fam)
    assert sizes == [(5, 2), (6, 2)]
    obs = intersection_obstruction(2, 0)
    assert obs.edges == ((0, 1), (2, 3))
    with pytest.raises(BadParamsError):
        intersecting_family(2, 2)


def test_parse_family_token():
    assert parse_family_token("K3").members[0] == complete(2, 3)
    assert parse_family_token("Kr:5").members[0] == complete(2, 5)
    assert parse_family_token("fano").members[0] == fano()
    assert parse_family_token("F5").members[0] == f5()
    assert parse_family_token("2K2").members[0] == intersection_obstruction(2, 0)
    fam = parse_family_token("intersect:3:2")
    assert len(fam) == 2
    with pytest.raises(BadParamsError):
        parse_family_token("nonsense")
