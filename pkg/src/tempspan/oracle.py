"""Exhaustive minimum spanner search for very small cliques.

Subsets are enumerated by increasing size starting at ``n - 1`` (a spanner
must at least connect the underlying graph).  Edges are pre-sorted by label,
so each subset is already a time-ordered contact list and connectivity is a
single sweep of bitset merges.  In a simple clique two edges sharing a label
are never adjacent, so the sweep order among them does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import SimpleClique, TempSpanError
from .reach import Spanner


class InstanceTooLarge(TempSpanError, ValueError):
    pass


@dataclass(frozen=True)
class MinSpannerResult:
    size: int
    witness: Spanner
    explored: int


def min_spanner(c: SimpleClique, max_n: int = 7) -> MinSpannerResult:
    n = c.n
    if n > max_n:
        raise InstanceTooLarge(f"n={n} exceeds the exhaustive-search guard {max_n}")
    order = sorted(c.edges(), key=lambda e: (c.label(*e), e))
    pairs = [(e.u, e.v) for e in order]
    masks = [(1 << u) | (1 << v) for u, v in pairs]
    full = (1 << n) - 1
    start = [1 << v for v in range(n)]
    explored = 0
    for size in range(max(1, n - 1), len(pairs) + 1):
        for idx in combinations(range(len(pairs)), size):
            explored += 1
            cover = 0
            for i in idx:
                cover |= masks[i]
            if cover != full:
                continue
            reach = list(start)
            for i in idx:
                u, v = pairs[i]
                reach[u] = reach[v] = reach[u] | reach[v]
            if all(r == full for r in reach):
                return MinSpannerResult(size, Spanner.of(c, (order[i] for i in idx)), explored)
    raise AssertionError("the full clique is always a spanner")  # pragma: no cover
