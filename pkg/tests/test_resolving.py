import itertools

import pytest

from metricdim.graph import GraphError
from metricdim.resolving import (
    doubly_offset,
    is_doubly_resolving,
    is_maximally_distant,
    is_resolving,
    is_strong_resolving,
    is_vertex_cover,
    mutually_maximally_distant,
    representation,
    strong_resolving_graph,
)

from conftest import cycle, cylinder, path, prism
from oracles import naive_doubly, naive_resolving, naive_strong, prism_distance

D1 = (1, 3, 16, 76)  # x_1^(1), x_3^(1), x_16^(1), x_16^(4) in (C_5 x P_4) x P_4
E = (1, 2, 3, 9, 45)  # x_1^(1), x_2^(1), x_3^(1), x_9^(1), x_9^(4) in (C_4 x P_3) x P_4


def test_representation_examples():
    _, d = prism(5, 4, 4)
    assert representation(1, D1, d) == (0, 2, 3, 6)
    _, d = prism(4, 3, 4)
    assert representation(12 + 7, E, d) == (4, 3, 2, 4, 5)


def test_representation_is_order_sensitive_and_zero_on_members():
    _, d = cylinder(4, 3)
    assert representation(5, (1, 5, 9), d) == (1, 0, 1)
    assert representation(5, (9, 1, 5), d) == (1, 1, 0)


def test_representation_invalid_vertex():
    _, d = cycle(4)
    with pytest.raises(IndexError):
        representation(5, (1,), d)
    with pytest.raises(IndexError):
        representation(1, (7,), d)


def test_full_set_resolves():
    g, d = cylinder(4, 3)
    assert is_resolving(tuple(g.vertices()), d)


def test_c4_antipodal_pair_does_not_resolve():
    _, d = cycle(4)
    check = is_resolving((1, 3), d)
    assert not check
    assert check.pair == (2, 4)


def test_c3_p3_first_two_vertices_resolve():
    g, d = cylinder(3, 3)
    expected = naive_resolving((1, 2), 9, prism_distance(3, 3))
    assert expected
    assert bool(is_resolving((1, 2), d)) == expected


def test_empty_set_rejected():
    _, d = cycle(4)
    with pytest.raises(GraphError):
        is_resolving((), d)
    with pytest.raises(GraphError):
        is_strong_resolving((), d)
    with pytest.raises(GraphError):
        is_doubly_resolving((1,), d)


def test_duplicates_rejected():
    _, d = cycle(4)
    with pytest.raises(GraphError, match="duplicates"):
        is_resolving((1, 1), d)


@pytest.mark.parametrize("n,k", [(3, 3), (5, 4), (7, 3)])
def test_m_family_constant_offset(n, k):
    _, d = cylinder(n, k)
    for i in range(1, (n + 1) // 2 + 1):
        m_i = (i, (n + 1) // 2 + i - 1)
        assert doubly_offset(i + n, i + 2 * n, m_i, d) == -1
        assert not is_doubly_resolving(m_i, d)


def test_example_one_set_doubly_resolves():
    _, d = prism(5, 4, 4)
    assert is_doubly_resolving(D1, d)


def test_whole_c3_doubly_resolves():
    _, d = cycle(3)
    dist = lambda a, b: 0 if a == b else 1  # noqa: E731
    assert naive_doubly((1, 2, 3), 3, dist)
    assert is_doubly_resolving((1, 2, 3), d)


def test_doubly_failure_reports_smallest_pair_and_lambda():
    _, d = cylinder(5, 4)
    check = is_doubly_resolving((1, 3), d)
    assert not check
    assert check.pair == (1, 6)
    assert check.offset == -1
    assert doubly_offset(6, 11, (1, 3), d) == -1


def test_maximally_distant():
    g, d = cycle(4)
    assert is_maximally_distant(1, 3, g, d)
    g, d = path(3)
    assert not is_maximally_distant(2, 1, g, d)
    g, d = cylinder(4, 3)
    dist = prism_distance(4, 3)
    assert all(dist(11, w) <= dist(11, 1) for w in g.neighbors(1))
    assert is_maximally_distant(1, 11, g, d)
    with pytest.raises(GraphError):
        is_maximally_distant(2, 2, g, d)


def test_maximally_distant_is_asymmetric_on_paths():
    g, d = path(4)
    # the endpoint 4 is maximally distant from 2, but not conversely
    assert is_maximally_distant(4, 2, g, d)
    assert not is_maximally_distant(2, 4, g, d)
    assert not mutually_maximally_distant(2, 4, g, d)


def test_strong_resolving_graph_examples():
    assert strong_resolving_graph(*cycle(4)).sorted_edges() == [(1, 3), (2, 4)]
    assert strong_resolving_graph(*path(3)).sorted_edges() == [(1, 3)]
    assert strong_resolving_graph(*cycle(3)).sorted_edges() == [(1, 2), (1, 3), (2, 3)]


def test_strong_resolving_examples():
    g, d = cylinder(4, 3)
    assert is_strong_resolving(tuple(g.vertices()), d)
    _, d = cycle(4)
    check = is_strong_resolving((1,), d)
    assert not check and check.pair == (2, 4)
    _, d = prism(4, 3, 2)
    assert is_strong_resolving((1, 2, 3, 4, 13, 14, 15, 16), d)


GRAPHS = [cycle(n) for n in range(3, 8)] + [path(k) for k in range(2, 7)] + [
    cylinder(3, 3), cylinder(4, 3),
]


@pytest.mark.parametrize("graph", GRAPHS, ids=lambda gd: repr(gd[0]))
def test_strong_resolving_iff_vertex_cover(graph):
    g, d = graph
    srg = strong_resolving_graph(g, d)
    a = d.as_array()
    dist = lambda u, v: int(a[u - 1, v - 1])  # noqa: E731
    for size in range(1, min(6, g.vertex_count) + 1):
        for q in itertools.combinations(g.vertices(), size):
            strong = bool(is_strong_resolving(q, d))
            assert strong == is_vertex_cover(q, srg)
            if size <= 3 or g.vertex_count <= 9:
                assert strong == naive_strong(q, g.vertex_count, dist)


@pytest.mark.parametrize("graph", GRAPHS[:6], ids=lambda gd: repr(gd[0]))
def test_predicates_match_naive_oracle(graph):
    g, d = graph
    a = d.as_array()
    dist = lambda u, v: int(a[u - 1, v - 1])  # noqa: E731
    nv = g.vertex_count
    for size in range(1, min(4, nv) + 1):
        for q in itertools.combinations(g.vertices(), size):
            assert bool(is_resolving(q, d)) == naive_resolving(q, nv, dist)
            if size >= 2:
                assert bool(is_doubly_resolving(q, d)) == naive_doubly(q, nv, dist)


def test_resolving_witness_is_lexicographic_minimum():
    g, d = cylinder(4, 3)
    q = (1, 3)
    check = is_resolving(q, d)
    clashes = [
        (u, v)
        for u, v in itertools.combinations(g.vertices(), 2)
        if representation(u, q, d) == representation(v, q, d)
    ]
    assert check.pair == min(clashes)
