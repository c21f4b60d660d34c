from __future__ import annotations

import naive
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tempspan.core import Edge, build_simple_clique
from tempspan.dismount import dismount_fully, dismount_sequence, find_dismountable
from tempspan.gen import fixture, gen_non_dismountable, random_clique
from tempspan.reach import verify_spanner


def labelled(c, edges):
    return {(Edge.of(*e), c.label(*e)) for e in edges}


def test_fixd5_first_step():
    c = fixture("fixd5")
    st_ = find_dismountable(c, 1)
    assert st_.v == 0
    assert [tuple(h) for h in st_.out_journey.hops] == [(0, 2, 3)]
    assert [tuple(h) for h in st_.in_journey.hops] == [(4, 0, 9)]


def test_fixd5_full_sequence():
    c = fixture("fixd5")
    steps = dismount_sequence(c, 1)
    assert [s.v for s in steps] == [0, 4, 1]  # a, e, b
    s = dismount_fully(c, 1)
    want = {("ac", 3), ("ae", 9), ("be", 1), ("ce", 7), ("bc", 4), ("bd", 6), ("cd", 5)}
    got = {(chr(97 + e.u) + chr(97 + e.v), c.label(*e)) for e in s.edges}
    assert got == want
    assert len(s) == 2 * c.n - 3 and verify_spanner(c, s)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fixnd4_not_dismountable(k):
    assert find_dismountable(fixture("fixnd4"), k) is None
    assert naive.dismountable_k(fixture("fixnd4"), k) == set()


def test_triangle():
    c = build_simple_clique(3, [((0, 1), 0), ((0, 2), 1), ((1, 2), 2)])
    assert naive.dismountable_k1(c) == {1}
    assert find_dismountable(c, 1).v == 1


def test_two_vertices():
    c = random_clique(2, 0)
    s = dismount_fully(c, 1)
    assert s.edges == {Edge(0, 1)}


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        find_dismountable(fixture("fix6"), 0)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_generated_gadgets_resist_all_k(m):
    c = gen_non_dismountable(m)
    for k in range(1, c.n + 1):
        assert find_dismountable(c, k) is None


@given(st.integers(3, 6), st.integers(0, 2**32))
def test_k1_agrees_with_triple_scan(n, seed):
    c = random_clique(n, seed)
    want = naive.dismountable_k1(c)
    got = find_dismountable(c, 1)
    if not want:
        assert got is None
    else:
        assert got.v == min(want)


@settings(max_examples=25)
@given(st.integers(3, 6), st.integers(0, 2**32))
def test_k2_agrees_with_enumeration(n, seed):
    c = random_clique(n, seed)
    want = naive.dismountable_k(c, 2)
    got = find_dismountable(c, 2)
    assert (got is None) == (not want)
    if got is not None:
        assert got.v == min(want)


@given(st.integers(3, 14), st.integers(0, 2**32), st.integers(1, 3))
def test_witness_shape_and_spanner_size(n, seed, k):
    c = random_clique(n, seed)
    st_ = find_dismountable(c, k)
    if st_ is not None:
        out, inn = st_.out_journey, st_.in_journey
        assert out.is_valid(c) and inn.is_valid(c)
        assert out.source == st_.v == inn.target
        assert len(out) <= k and len(inn) <= k
        assert Edge.of(*out.hops[-1][:2]) == c.min_edge(out.target)
        assert Edge.of(*inn.hops[0][:2]) == c.max_edge(inn.source)
    s = dismount_fully(c, k)
    if s is not None:
        assert verify_spanner(c, s)
        assert len(s) <= 2 * k * (n - 2) + 1
        if k == 1:
            assert len(s) == 2 * n - 3
