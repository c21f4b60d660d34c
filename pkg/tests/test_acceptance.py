"""Acceptance criteria 1-12, one reported line each.

Run through pytest (the lines also appear in the terminal summary) or
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import statistics
import sys
import time
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import naive
from acceptance_log import report

from tempspan.basic import find_pivot, pivot_spanner
from tempspan.bench import ALGORITHMS, conjecture_stats, run_algorithm
from tempspan.core import Edge, num_edges
from tempspan.dismount import dismount_fully, find_dismountable
from tempspan.fireworks import bidirectional_cover, forward_cover
from tempspan.gen import (
    fixture,
    gen_bipartite_case2,
    gen_non_pivotable,
    random_clique,
    random_multi_clique,
)
from tempspan.layered import BipartiteResidual, layered_selection, rank_intervals
from tempspan.oracle import min_spanner
from tempspan.pipeline import Case2Residual, classify_residual, spanner_nlogn
from tempspan.reach import (
    NONSTRICT,
    is_temporally_connected,
    reach_sets,
    verify_spanner,
)
from tempspan.reduce import lift_spanner, to_simple


def names(text: str) -> set[Edge]:
    return {Edge.of(ord(p[0]) - 97, ord(p[1]) - 97) for p in text.split()}


def test_criterion_01_forward_fix6():
    c = fixture("fix6")
    times = []
    for _ in range(20):
        t0 = time.perf_counter()
        fw = forward_cover(c)
        edges = fw.edges
        times.append(time.perf_counter() - t0)
    missing = set(c.edges()) - edges
    best = min(times) * 1000
    ok = len(edges) == 11 and missing == names("ce be bd de") and best < 1.0
    report(1, "forward cover on fix6", ok, f"{len(edges)} edges, excluded {len(missing)}, {best:.3f} ms")
    assert ok


def test_criterion_02_bidirectional_fix6():
    c = fixture("fix6")
    bi = bidirectional_cover(c)
    ok = (
        bi.edges == names("ab ac ad af bc be cd cf df ef")
        and bi.emitters == {0, 5}
        and bi.collectors == {0, 2}
    )
    report(2, "bidirectional cover on fix6", ok, f"{len(bi)} edges")
    assert ok


def test_criterion_03_case2_fix8():
    c = fixture("fix8")
    cl = classify_residual(c, bidirectional_cover(c))
    ok = isinstance(cl, Case2Residual)
    detail = type(cl).__name__
    if ok:
        r = cl.r
        sm = sorted(c.label(*e) for e in r.s_minus_edges)
        sp = sorted(c.label(*e) for e in r.s_plus_edges)
        s, _ = spanner_nlogn(c)
        ok = (
            set(r.emitters) == {0, 5, 6, 7}
            and sm == [1, 2, 4, 6]
            and sp == [21, 24, 25, 26]
            and s.edges == r.h_edges
            and len(s) == 16
            and verify_spanner(c, s)
        )
        detail = f"S- {sm}, S+ {sp}, pipeline {len(s)} edges"
    report(3, "fix8 bipartite residual", ok, detail)
    assert ok


def test_criterion_04_dismounting():
    c = fixture("fixd5")
    s = dismount_fully(c, 1)
    want = {("ac", 3), ("ae", 9), ("be", 1), ("ce", 7), ("bc", 4), ("bd", 6), ("cd", 5)}
    got = set() if s is None else {(chr(97 + e.u) + chr(97 + e.v), c.label(*e)) for e in s.edges}
    nd = fixture("fixnd4")
    none_k = all(find_dismountable(nd, k) is None for k in range(1, 5))
    ok = got == want and len(got) == 2 * c.n - 3 and verify_spanner(c, s) and none_k
    report(4, "dismounting fixd5 / fixnd4", ok, f"{len(got)} edges; fixnd4 blocked for k<=4: {none_k}")
    assert ok


def test_criterion_05_pivoting():
    c = fixture("fixp5")
    cert = find_pivot(c)
    ok = cert is not None
    detail = "no pivot on fixp5"
    if ok:
        s = pivot_spanner(c, cert)
        ok = len(s) <= 2 * (c.n - 1) and verify_spanner(c, s)
        detail = f"pivot {chr(97 + cert.p)} t={cert.t}, {len(s)} edges"
    blocked = [find_pivot(fixture("fixnp5")) is None] + [
        find_pivot(gen_non_pivotable(n)) is None for n in (6, 8, 12)
    ]
    ok = ok and all(blocked)
    report(5, "pivoting", ok, f"{detail}; non-pivotable inputs rejected {sum(blocked)}/4")
    assert ok


def test_criterion_06_structural_bounds():
    bad = 0
    total = 0
    for n in (8, 16, 32, 64):
        for seed in range(500):
            c = random_clique(n, seed)
            fw = forward_cover(c)
            bi = bidirectional_cover(c)
            total += 1
            if not (
                len(bi.emitters) <= n // 2
                and len(bi.collectors) <= n // 2
                and len(fw) <= 3 * num_edges(n) / 4 + n
                and len(bi) <= n * n / 4 + 2 * n
            ):
                bad += 1
    report(6, "fireworks structural bounds", bad == 0, f"{bad} violations over {total} instances")
    assert bad == 0


def test_criterion_07_pipeline():
    bad = 0
    worst = 0.0
    times = []
    for n in (8, 16, 32, 64, 128):
        bound = 4 * n * math.ceil(math.log2(n)) + 14 * n
        for seed in range(200):
            c = random_clique(n, 10_000 + seed)
            t0 = time.perf_counter()
            s, _ = spanner_nlogn(c)
            dt = time.perf_counter() - t0
            if n == 128:
                times.append(dt)
            worst = max(worst, len(s) / n)
            if not verify_spanner(c, s) or len(s) > bound:
                bad += 1
    med = statistics.median(times)
    ok = bad == 0 and med < 1.0
    report(7, "pipeline validity and size", ok,
           f"{bad} failures over 1000, max {worst:.2f} edges/vertex, median {med * 1000:.0f} ms at n=128")
    assert ok


def _emitters_reach_collectors(r: BipartiteResidual, edges) -> bool:
    reached = reach_sets(r.clique, universe=edges)
    need = sum(1 << x for x in r.emitters)
    return all(reached[y] & need == need for y in r.collectors)


def test_criterion_08_layered():
    closed = rank_intervals(128) == ((1, 8), (9, 24), (25, 56), (57, 120))
    failures = 0
    for k in (16, 32, 64):
        for seed in range(50):
            c = gen_bipartite_case2(k, seed)
            r = BipartiteResidual.from_partition(c, range(k, 2 * k), range(k))
            sel = layered_selection(r)
            costs_ok = all(
                cost <= 1 << (st.j + 3) for st in sel.steps for cost in st.cost.values()
            )
            if sel.stalled or not costs_ok or not _emitters_reach_collectors(r, sel.edges):
                failures += 1
    ok = closed and failures == 0
    report(8, "layered delegations", ok, f"schedule matches: {closed}; {failures} failures over 150 residuals")
    assert ok


def test_criterion_09_oracle_floor():
    below = above = 0
    t0 = time.perf_counter()
    for n in (4, 5, 6):
        for seed in range(100):
            c = random_clique(n, seed)
            size = min_spanner(c).size
            if size < 2 * n - 4:
                below += 1
            for algo in ALGORITHMS:
                s = run_algorithm(algo, c)
                if s is not None and len(s) < size:
                    above += 1
    dt = time.perf_counter() - t0
    ok = below == 0 and above == 0 and dt < 300
    report(9, "oracle floor", ok, f"{below} below 2n-4, {above} beaten by an algorithm, {dt:.1f} s")
    assert ok


def test_criterion_10_reduction():
    passed = 0
    for seed in range(50):
        m = random_multi_clique(8, seed, max_labels=3)
        c, lmap = to_simple(m)
        labs = c.matrix
        simple = all(
            len({int(labs[v, u]) for u in range(c.n) if u != v}) == c.n - 1 for v in range(c.n)
        )
        s, _ = spanner_nlogn(c)
        if simple and verify_spanner(m, lift_spanner(s, lmap), NONSTRICT):
            passed += 1
    report(10, "multi-label reduction", passed == 50, f"{passed}/50 lifted spanners valid (non-strict)")
    assert passed == 50


def test_criterion_11_reachability_cross_check():
    agree = total = 0
    for seed in range(200):
        rng = random.Random(seed)
        n = 2 + seed % 4
        c = random_clique(n, seed)
        edges = list(combinations(range(n), 2))
        for _ in range(5):
            universe = [e for e in edges if rng.random() < 0.7]
            total += 1
            ours = is_temporally_connected(c, universe=universe)
            pairs = naive.reachable_pairs(c, universe)
            reached = reach_sets(c, universe=universe)
            mine = {(s, t) for t in range(n) for s in range(n) if s != t and reached[t] >> s & 1}
            if ours == naive.connected(c, universe) and mine == pairs:
                agree += 1
    report(11, "reachability cross-check", agree == total, f"{agree}/{total} edge subsets agree")
    assert agree == total


def test_criterion_12_conjecture_harness():
    rows = conjecture_stats([4, 5, 6], 100, 0) + conjecture_stats([7], 15, 0)
    rows += conjecture_stats([8, 16, 32], 50, 0)
    parts = []
    for r in rows:
        if r.min_2n_4 is None:
            parts.append(f"n={r.n}: pivotable {r.pivotable:.2f}, dismountable {r.dismountable:.2f}")
        else:
            parts.append(f"n={r.n}: minima 2n-4 {r.min_2n_4}, 2n-3 {r.min_2n_3}, other {r.min_other}")
    report(12, "conjecture statistics", True, "; ".join(parts), informational=True)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
