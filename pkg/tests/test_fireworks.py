from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tempspan.core import Edge
from tempspan.fireworks import (
    IsSink,
    MalformedArcSet,
    backward_cover,
    bidirectional_cover,
    build_max_digraph,
    build_min_digraph,
    forward_cover,
    max_trees,
    min_trees,
    to_in_trees,
    two_hop_extreme_journey,
)
from tempspan.gen import fixture, random_clique
from tempspan.reach import verify_spanner


def names(text: str) -> set[Edge]:
    return {Edge.of(ord(p[0]) - 97, ord(p[1]) - 97) for p in text.split()}


def arcs(text: str) -> set[tuple[int, int]]:
    return {(ord(p[0]) - 97, ord(p[1]) - 97) for p in text.split()}


def test_fix6_min_digraph_and_trees():
    c = fixture("fix6")
    assert build_min_digraph(c) == arcs("bc cd da ef")
    tm = min_trees(c)
    assert tm.roots == {0, 5}
    assert tm.arcs == arcs("bc cd da ef")


def test_fix6_max_side():
    c = fixture("fix6")
    tp = max_trees(c)
    assert tp.kind == "out"
    assert tp.roots == {0, 2}
    assert tp.arcs == arcs("ab be cf fd")


def test_fix6_forward_cover_exact():
    c = fixture("fix6")
    fw = forward_cover(c)
    everything = set(c.edges())
    assert everything - fw.edges == names("ce be bd de")
    assert len(fw) == 11 and verify_spanner(c, fw.spanner)


def test_fix6_backward_cover():
    c = fixture("fix6")
    bw = backward_cover(c)
    assert set(c.edges()) - bw.edges == names("bd bf de ef")
    assert verify_spanner(c, bw.spanner)


def test_fix6_bidirectional_cover_exact():
    c = fixture("fix6")
    bi = bidirectional_cover(c)
    assert bi.edges == names("ab ac ad af bc be cd cf df ef")
    assert bi.emitters == {0, 5} and bi.collectors == {0, 2}
    assert verify_spanner(c, bi.spanner)


def test_fix8_trees_follow_tie_rule():
    c = fixture("fix8")
    tm, tp = min_trees(c), max_trees(c)
    assert tm.roots == {0, 5, 6, 7}
    assert tm.arcs == arcs("bh ca df eg")
    assert tp.roots == {1, 2, 3, 4}
    assert tp.arcs == arcs("ba ch dg ef")
    assert build_max_digraph(c) == arcs("af ba ch dg ef")


def test_to_in_trees_rejects_indegree_two():
    c = fixture("fix6")
    with pytest.raises(MalformedArcSet):
        to_in_trees(frozenset({(0, 2), (1, 2)}), c)


def test_two_hop_on_roots_raises():
    c = fixture("fix6")
    with pytest.raises(IsSink):
        two_hop_extreme_journey(min_trees(c), 0, c)
    with pytest.raises(IsSink):
        two_hop_extreme_journey(max_trees(c), 2, c)


def test_flipped_arcs_give_two_hop_journeys():
    seen = 0
    for seed in range(40):
        c = random_clique(10, seed)
        tm = min_trees(c)
        for a, b in tm.flipped:
            j = two_hop_extreme_journey(tm, a, c)
            assert len(j) == 2 and j.is_valid(c)
            assert Edge.of(*j.hops[-1][:2]) == c.min_edge(j.target)
            seen += 1
    assert seen > 0


@given(st.integers(3, 24), st.integers(0, 2**32))
def test_cover_properties(n, seed):
    c = random_clique(n, seed)
    tm, tp = min_trees(c), max_trees(c)
    assert 1 <= len(tm.roots) <= n // 2
    assert 1 <= len(tp.roots) <= n // 2
    # every tree is rooted and every vertex reaches a root
    assert {tm.tree[v] for v in range(n)} == set(tm.roots)
    for cover in (forward_cover(c), backward_cover(c), bidirectional_cover(c)):
        assert verify_spanner(c, cover.spanner)
    for v in range(n):
        if v not in tm.roots:
            j = two_hop_extreme_journey(tm, v, c)
            assert j.is_valid(c) and j.source == v and len(j) <= 2
            assert Edge.of(*j.hops[-1][:2]) == c.min_edge(j.target)
        if v not in tp.roots:
            j = two_hop_extreme_journey(tp, v, c)
            assert j.is_valid(c) and j.target == v and len(j) <= 2
            assert Edge.of(*j.hops[0][:2]) == c.max_edge(j.source)
