"""The O(n log n) spanner: fireworks, two-hop dismounting, layered delegations.

Each level recomputes both fireworks on the current clique.  A vertex that is
neither emitter nor collector is dismounted with its two-hop tree journeys.
Otherwise the clique splits into n/2 emitters and n/2 collectors joined by two
perfect matchings; a matching edge that is not extreme on its other side
yields a dismountable vertex, and if none exists the bipartite residual goes
to layered delegations and the recursion stops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import Edge, SimpleClique, TempSpanError
from .dismount import DismountStep
from .fireworks import FireworksCover, bidirectional_cover, two_hop_extreme_journey
from .layered import BipartiteResidual, LayeredSelection, layered_selection
from .reach import Hop, Journey, Spanner


class InconsistentFireworks(TempSpanError, RuntimeError):
    pass


@dataclass(frozen=True)
class Case1:
    v: int
    step: DismountStep


@dataclass(frozen=True)
class Case2Dismount:
    v: int
    step: DismountStep


@dataclass(frozen=True)
class Case2Residual:
    r: BipartiteResidual


ResidualClassification = Case1 | Case2Dismount | Case2Residual


def _hop(c: SimpleClique, a: int, b: int) -> Hop:
    return Hop(a, b, c.label(a, b))


def _matching(edges, side: frozenset[int], n: int) -> dict[int, int]:
    """Map each vertex of ``side`` to its partner; edges must pair ``side``
    with its complement one-to-one."""
    out: dict[int, int] = {}
    for e in edges:
        a, b = (e.u, e.v) if e.u in side else (e.v, e.u)
        if a not in side or b in side or a in out:
            raise InconsistentFireworks(f"tree edge {tuple(e)} does not fit a perfect matching")
        out[a] = b
    if len(out) != n // 2:
        raise InconsistentFireworks("tree edges do not form a perfect matching")
    return out


def classify_residual(c: SimpleClique, fw: FireworksCover) -> ResidualClassification:
    xm, xp = fw.emitters, fw.collectors
    n = c.n
    outside = [v for v in range(n) if v not in xm and v not in xp]
    if outside:
        v = outside[0]
        step = DismountStep(
            v,
            two_hop_extreme_journey(fw.tminus, v, c),
            two_hop_extreme_journey(fw.tplus, v, c),
        )
        return Case1(v, step)

    if xm & xp or len(xm) != len(xp) or 2 * len(xm) != n:
        raise InconsistentFireworks("emitters and collectors must split the vertices in halves")
    sm = _matching(fw.tminus.edges(), xm, n)  # emitter -> collector
    sp = _matching(fw.tplus.edges(), xp, n)  # collector -> emitter
    m = c.matrix
    ems, cols = sorted(xm), sorted(xp)
    for u in ems:
        if int(c.min_partner[u]) != sm[u]:
            raise InconsistentFireworks(f"matching edge of emitter {u} is not its minimum")
    for y in cols:
        if int(c.max_partner[y]) != sp[y]:
            raise InconsistentFireworks(f"matching edge of collector {y} is not its maximum")

    emitter_of = {y: x for x, y in sm.items()}
    collector_of = {x: y for y, x in sp.items()}
    for u in ems:
        v = sm[u]
        u2 = min(ems, key=lambda x: m[x, v])
        if u2 != u:
            # u2 -> v -> u arrives through e-(u); receptions come straight
            # from u2's collector along that collector's maximum edge
            y = collector_of[u2]
            step = DismountStep(
                u2,
                Journey((_hop(c, u2, v), _hop(c, v, u))),
                Journey((_hop(c, y, u2),)),
            )
            return Case2Dismount(u2, step)
    for y in cols:
        x = sp[y]
        y2 = max(cols, key=lambda z: m[x, z])
        if y2 != y:
            e = emitter_of[y2]
            step = DismountStep(
                y2,
                Journey((_hop(c, y2, e),)),
                Journey((_hop(c, y, x), _hop(c, x, y2))),
            )
            return Case2Dismount(y2, step)
    sp_by_emitter = {x: y for y, x in sp.items()}
    return Case2Residual(BipartiteResidual(c, tuple(ems), tuple(cols), sm, sp_by_emitter))


@dataclass
class PipelineReport:
    """``n1`` vertices were dismounted, ``n2`` went to layered delegations and
    ``n_base`` were left for the all-edges base case; the three sum to n."""

    n: int
    n1: int = 0
    n2: int = 0
    n_base: int = 0
    cases: list[str] = field(default_factory=list)
    dismount_edges: int = 0
    base_edges: int = 0
    matching_edges: int = 0
    layered_edges: int = 0
    stalled: bool = False

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "n1": self.n1,
            "n2": self.n2,
            "n_base": self.n_base,
            "cases": {k: self.cases.count(k) for k in sorted(set(self.cases))},
            "edges": {
                "dismount": self.dismount_edges,
                "base": self.base_edges,
                "matchings": self.matching_edges,
                "layered": self.layered_edges,
            },
            "stalled": self.stalled,
        }


def size_bound(n1: int, n2: int) -> int:
    lg = math.ceil(math.log2(n2)) if n2 > 1 else 0
    return 4 * n1 + 4 * n2 * lg + 10 * n2 + 6


def spanner_nlogn(c: SimpleClique) -> tuple[Spanner, PipelineReport]:
    """Spanner of size O(n log n) for any simple clique, plus a report."""
    if c.n < 2:
        raise ValueError("need at least 2 vertices")
    verts = list(range(c.n))
    chosen: set[Edge] = set()
    rep = PipelineReport(c.n)
    while True:
        sub = c.induced(verts)
        if len(verts) <= 4:
            base = {Edge.of(verts[e.u], verts[e.v]) for e in sub.edges()}
            rep.base_edges = len(base - chosen)
            rep.n_base = len(verts)
            chosen |= base
            break
        cls = classify_residual(sub, bidirectional_cover(sub))
        if isinstance(cls, Case2Residual):
            r = cls.r
            sel: LayeredSelection = layered_selection(r, on_stall="keep")
            lifted = {Edge.of(verts[e.u], verts[e.v]) for e in sel.edges}
            match = {Edge.of(verts[e.u], verts[e.v]) for e in sel.matchings}
            rep.n2 = len(verts)
            rep.cases.append("residual")
            rep.matching_edges = len(match - chosen)
            rep.layered_edges = len(lifted - match - chosen)
            rep.stalled = sel.stalled
            chosen |= lifted
            break
        step = cls.step.relabel(verts)
        new = step.edges() - chosen
        rep.dismount_edges += len(new)
        rep.n1 += 1
        rep.cases.append("case1" if isinstance(cls, Case1) else "case2")
        chosen |= new
        del verts[cls.v]
    return Spanner.of(c, chosen), rep
