from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tempspan.core import (
    DuplicateEdge,
    Edge,
    InvalidEdge,
    LocalLabelCollision,
    MissingEdge,
    MultiLabelClique,
    RankOutOfBounds,
    RankTable,
    SimpleClique,
    all_edges,
    build_simple_clique,
    extreme_edge,
    num_edges,
    rank_edge,
)
from tempspan.gen import fixture, random_clique


def test_edge_canonical_and_other():
    assert Edge.of(3, 1) == Edge(1, 3)
    assert Edge(1, 3).other(1) == 3
    with pytest.raises(InvalidEdge):
        Edge.of(2, 2)
    with pytest.raises(ValueError):
        Edge(1, 3).other(2)


def test_all_edges_lexicographic():
    assert list(all_edges(4)) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert num_edges(7) == 21


def test_build_errors():
    with pytest.raises(MissingEdge):
        build_simple_clique(3, [((0, 1), 0), ((0, 2), 1)])
    with pytest.raises(DuplicateEdge):
        build_simple_clique(3, [((0, 1), 0), ((0, 1), 1), ((0, 2), 1), ((1, 2), 2)])
    with pytest.raises(InvalidEdge):
        build_simple_clique(3, [((1, 0), 0), ((0, 2), 1), ((1, 2), 2)])
    with pytest.raises(InvalidEdge):
        build_simple_clique(3, [((0, 5), 0), ((0, 2), 1), ((1, 2), 2)])


def test_local_collision_names_vertex_and_edges():
    with pytest.raises(LocalLabelCollision) as info:
        build_simple_clique(3, [((0, 1), 4), ((0, 2), 4), ((1, 2), 2)])
    assert info.value.vertex == 0
    assert set(info.value.edges) == {Edge(0, 1), Edge(0, 2)}
    assert info.value.label == 4


def test_global_repeats_allowed():
    # ab and cd share a label but are not adjacent
    c = build_simple_clique(4, [((0, 1), 0), ((2, 3), 0), ((0, 2), 1), ((0, 3), 2), ((1, 2), 3), ((1, 3), 4)])
    assert c.label(2, 3) == 0


def test_extremes_on_fix6():
    c = fixture("fix6")
    assert c.min_edge(0) == Edge(0, 3)  # ad:3
    assert c.max_edge(0) == Edge(0, 1)  # ab:10
    assert extreme_edge(c, 3, "max") == Edge(3, 5)  # df:14
    with pytest.raises(ValueError):
        extreme_edge(c, 0, "middle")


def test_matrix_is_read_only_and_symmetric():
    c = fixture("fix8")
    assert np.array_equal(c.matrix, c.matrix.T)
    with pytest.raises(ValueError):
        c.matrix[0, 1] = 99


def test_from_matrix_checks():
    with pytest.raises(ValueError):
        SimpleClique.from_matrix(np.array([[0, 1], [2, 0]]))
    with pytest.raises(LocalLabelCollision):
        SimpleClique.from_matrix(np.array([[0, 1, 1], [1, 0, 2], [1, 2, 0]]))
    with pytest.raises(TypeError):
        SimpleClique(2, np.zeros((2, 2)))


def test_induced_and_negated():
    c = fixture("fix6")
    sub = c.induced([1, 3, 5])
    assert sub.label(0, 1) == c.label(1, 3)
    assert sub.label(1, 2) == c.label(3, 5)
    neg = c.negated()
    assert neg.label(0, 1) == -10
    assert neg.min_edge(0) == c.max_edge(0)


def test_equality_and_hash():
    a, b = fixture("fix6"), fixture("fix6")
    assert a == b and hash(a) == hash(b)
    assert a.content_hash == b.content_hash
    assert a != fixture("fix8")


def test_rank_table():
    c = fixture("fix6")
    rt = RankTable(c)
    assert rt.degree(0) == 5
    assert [c.label(*e) for e in rt.ordered(0)] == [3, 6, 7, 8, 10]
    assert rank_edge(rt, 0, 1) == Edge(0, 3)
    assert rt.rank(0, Edge(0, 1)) == 5
    with pytest.raises(RankOutOfBounds):
        rt.edge(0, 6)
    sub = RankTable(c, [(0, 1), (0, 2)])
    assert sub.degree(0) == 2 and sub.degree(3) == 0


def test_multi_label_clique():
    m = MultiLabelClique(3, {(0, 1): [3, 1, 3], (0, 2): [2], (1, 2): [0, 5]})
    assert m.labels_of(Edge(0, 1)) == (1, 3)
    with pytest.raises(ValueError):
        MultiLabelClique(3, {(0, 1): [], (0, 2): [2], (1, 2): [0]})
    with pytest.raises(MissingEdge):
        MultiLabelClique(3, {(0, 1): [1]})


@given(st.integers(2, 12), st.integers(0, 2**32))
def test_min_max_partner_brute_force(n, seed):
    c = random_clique(n, seed)
    for v in range(n):
        others = [u for u in range(n) if u != v]
        assert int(c.min_partner[v]) == min(others, key=lambda u: c.label(u, v))
        assert int(c.max_partner[v]) == max(others, key=lambda u: c.label(u, v))
