"""Baseline spanners: pivot vertices and K4 sparsification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .core import Edge, SimpleClique, TempSpanError
from .reach import (
    Spanner,
    _sweep,
    contacts,
    earliest_arrivals,
    foremost_tree,
    is_temporally_connected,
    latest_departures,
    latest_tree,
)


class InvalidCertificate(TempSpanError, ValueError):
    pass


@dataclass(frozen=True)
class PivotCertificate:
    """Everyone reaches ``p`` by label ``t`` through ``in_tree``; ``p`` reaches
    everyone with labels above ``t`` through ``out_tree``."""

    p: int
    t: int
    in_tree: frozenset[Edge]
    out_tree: frozenset[Edge]

    @property
    def edges(self) -> frozenset[Edge]:
        return self.in_tree | self.out_tree


def _tree_edges(hops) -> frozenset[Edge]:
    return frozenset(Edge.of(h.u, h.v) for h in hops if h is not None)


def find_pivot(c: SimpleClique) -> PivotCertificate | None:
    """Smallest-id pivot with the earliest possible threshold, or None."""
    n = c.n
    cts = contacts(c)
    # arrival[u][p]: earliest arrival at p starting from u
    arrival = [_sweep(n, cts, u, True, -math.inf)[0] for u in range(n)]
    for p in range(n):
        t_in = max(arrival[u][p] for u in range(n) if u != p)
        if t_in == math.inf:
            continue
        t = int(t_in)
        arr, pred = foremost_tree(c, p, min_start=t + 1)
        if any(a == math.inf for a in arr):
            continue
        _, succ = latest_tree(c, p, max_end=t)
        return PivotCertificate(p, t, _tree_edges(succ), _tree_edges(pred))
    return None


def check_certificate(c: SimpleClique, cert: PivotCertificate) -> bool:
    dep = latest_departures(c, cert.p, universe=cert.in_tree, max_end=cert.t)
    if any(d == -math.inf for d in dep):
        return False
    arr = earliest_arrivals(c, cert.p, universe=cert.out_tree, min_start=cert.t + 1)
    return all(a != math.inf for a in arr)


def pivot_spanner(c: SimpleClique, cert: PivotCertificate) -> Spanner:
    if not (0 <= cert.p < c.n) or not check_certificate(c, cert):
        raise InvalidCertificate(f"certificate for pivot {cert.p} at t={cert.t} does not hold")
    return Spanner.of(c, cert.edges)


def _pack_quads(n: int) -> list[tuple[int, int, int, int]]:
    quads = [tuple(range(i, i + 4)) for i in range(0, n - n % 4, 4)]
    used = {e for q in quads for e in combinations(q, 2)}
    for q in combinations(range(n), 4):
        es = list(combinations(q, 2))
        if not any(e in used for e in es):
            quads.append(q)
            used.update(es)
    return quads


def k4_sparsify(c: SimpleClique) -> Spanner:
    """Drop one edge per packed, edge-disjoint K4 while the clique stays
    temporally connected."""
    if c.n < 4:
        raise ValueError("need at least 4 vertices")
    kept = set(c.edges())
    for q in _pack_quads(c.n):
        local = c.induced(q)
        for a, b in combinations(range(4), 2):
            inner = [e for e in local.edges() if e != (a, b)]
            if not is_temporally_connected(local, universe=inner):
                continue
            e = Edge(q[a], q[b])
            kept.discard(e)
            if is_temporally_connected(c, universe=kept):
                break
            kept.add(e)
    return Spanner.of(c, kept)
