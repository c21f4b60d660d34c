"""Dismountability: delegating a vertex's emissions and receptions.

A vertex ``v`` is k-hop dismountable when some journey of at most ``k`` hops
leaves ``v`` and arrives at a vertex ``u`` through ``u``'s minimum edge, and
some journey of at most ``k`` hops reaches ``v`` after leaving a vertex ``w``
through ``w``'s maximum edge.  Any spanner of the clique without ``v`` then
extends to a spanner of the whole clique by adding the two journeys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Edge, SimpleClique
from .reach import Hop, Journey, Spanner


@dataclass(frozen=True)
class DismountStep:
    v: int
    out_journey: Journey
    in_journey: Journey

    def edges(self) -> set[Edge]:
        return set(self.out_journey.edges()) | set(self.in_journey.edges())

    def relabel(self, names) -> DismountStep:
        """Rename vertices through ``names[i]`` (e.g. back to original ids)."""

        def ren(j: Journey) -> Journey:
            return Journey(tuple(Hop(names[h.u], names[h.v], h.t) for h in j.hops))

        return DismountStep(names[self.v], ren(self.out_journey), ren(self.in_journey))


def _witness(mat: np.ndarray, partner: np.ndarray, v: int, k: int) -> Journey | None:
    """Journey from ``v`` of at most ``k`` hops ending through the head's
    minimum edge (``partner[u]`` is u's min-edge partner in ``mat``).

    Among witnesses with the fewest hops the largest arrival label wins, then
    the smallest head id.
    """
    n = mat.shape[0]
    labels = mat.astype(float)
    np.fill_diagonal(labels, math.inf)
    arr = np.full(n, math.inf)
    arr[v] = -math.inf
    levels = [arr]
    preds: list[np.ndarray] = [np.full(n, -1)]
    heads = np.arange(n)
    last = labels[partner, heads]
    for _ in range(k):
        prev = levels[-1]
        ok = (prev[partner] < last) & (heads != v)
        if ok.any():
            cand = np.flatnonzero(ok)
            # largest arrival label; argmax keeps the first (smallest id) on ties
            u = int(cand[np.argmax(last[cand])])
            x = int(partner[u])
            hops = [Hop(x, u, int(mat[x, u]))]
            lvl = len(levels) - 1
            while x != v:
                if levels[lvl][x] < levels[lvl - 1][x]:
                    p = int(preds[lvl][x])
                    hops.append(Hop(p, x, int(mat[p, x])))
                    x = p
                lvl -= 1
            return Journey(tuple(reversed(hops)))
        usable = np.where(labels > prev[:, None], labels, math.inf)
        best = usable.min(axis=0)
        cur = np.minimum(prev, best)
        cur[v] = -math.inf
        levels.append(cur)
        preds.append(usable.argmin(axis=0))
    return None


def _step_for(c: SimpleClique, v: int, k: int) -> DismountStep | None:
    out = _witness(c.matrix, c.min_partner, v, k)
    if out is None:
        return None
    back = _witness(-c.matrix, c.max_partner, v, k)
    if back is None:
        return None
    return DismountStep(v, out, back.negated().reversed())


def find_dismountable(c: SimpleClique, k: int = 1) -> DismountStep | None:
    """First vertex (ascending id) that is k-hop dismountable, with witnesses."""
    if k < 1:
        raise ValueError("k must be at least 1")
    for v in range(c.n):
        step = _step_for(c, v, k)
        if step is not None:
            return step
    return None


def dismount_sequence(c: SimpleClique, k: int = 1) -> list[DismountStep] | None:
    """Dismount until two vertices remain; steps use the original ids.

    Returns None as soon as a residual clique has no dismountable vertex.
    """
    verts = list(range(c.n))
    steps = []
    while len(verts) > 2:
        sub = c.induced(verts)
        step = find_dismountable(sub, k)
        if step is None:
            return None
        steps.append(step.relabel(verts))
        del verts[step.v]
    return steps


def dismount_fully(c: SimpleClique, k: int = 1) -> Spanner | None:
    steps = dismount_sequence(c, k)
    if steps is None:
        return None
    edges: set[Edge] = set()
    for st in steps:
        edges |= st.edges()
    gone = {st.v for st in steps}
    a, b = (x for x in range(c.n) if x not in gone)
    edges.add(Edge.of(a, b))
    return Spanner.of(c, edges)
