"""Forward, backward and bidirectional fireworks covers.

The forward machinery orients every vertex's minimum edge toward it, turns the
resulting out-forest into in-trees whose sinks are the *emitters*, and keeps
the tree edges plus the edges around emitters.  Everything backward is the
forward machinery run on the label-negated clique, with arcs reversed
afterwards: sinks of the negated in-trees become the *collectors*, sources of
out-trees in the original time direction.

Tie rule: when two vertices share their extreme edge only the arc oriented
from the lower id to the higher id is kept, orientation being read in the
direction of travel (G- arcs enter a vertex through its minimum edge, G+ arcs
leave a vertex through its maximum edge).  In the negated frame used for the
backward side this is the high-to-low arc.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from .core import Edge, SimpleClique, TempSpanError
from .reach import Hop, Journey, Spanner

Arc = tuple[int, int]


class MalformedArcSet(TempSpanError, ValueError):
    pass


class IsSink(TempSpanError, ValueError):
    pass


def build_min_digraph(c: SimpleClique, *, low_to_high: bool = True) -> frozenset[Arc]:
    """Arcs ``(u, v)`` with ``{u, v} = e-(v)``, one arc per shared minimum."""
    mp = c.min_partner
    arcs = set()
    for v in range(c.n):
        p = int(mp[v])
        if mp[p] == v and (p > v) == low_to_high:
            continue
        arcs.add((p, v))
    return frozenset(arcs)


def build_max_digraph(c: SimpleClique) -> frozenset[Arc]:
    """Arcs ``(v, u)`` with ``{u, v} = e+(v)``, one arc per shared maximum."""
    neg = build_min_digraph(c.negated(), low_to_high=False)
    return frozenset((b, a) for a, b in neg)


@dataclass(frozen=True)
class TreeDecomposition:
    """In-trees (``kind='in'``, roots are sinks/emitters) or out-trees
    (``kind='out'``, roots are sources/collectors)."""

    kind: str
    arcs: frozenset[Arc]
    roots: frozenset[int]
    tree: tuple[int, ...]
    flipped: frozenset[Arc] = field(default=frozenset())

    def edges(self) -> frozenset[Edge]:
        return frozenset(Edge.of(a, b) for a, b in self.arcs)

    @cached_property
    def out_arc(self) -> dict[int, int]:
        return {a: b for a, b in self.arcs}

    @cached_property
    def in_arc(self) -> dict[int, int]:
        return {b: a for a, b in self.arcs}

    def reversed(self) -> TreeDecomposition:
        kind = "out" if self.kind == "in" else "in"
        return TreeDecomposition(
            kind,
            frozenset((b, a) for a, b in self.arcs),
            self.roots,
            self.tree,
            frozenset((b, a) for a, b in self.flipped),
        )


def to_in_trees(arcs: frozenset[Arc], c: SimpleClique) -> TreeDecomposition:
    """Turn the out-forest of minimum arcs into in-trees.

    For each vertex with two or more out-arcs, keep the largest-label one;
    the others are flipped when their head is a sink of the input forest and
    dropped otherwise.  Sink status is read from the input arcs: a flip only
    ever touches a sink, and sinks have no out-arcs to lose, so it would not
    change if re-evaluated on the fly.
    """
    n = c.n
    outs: dict[int, list[int]] = defaultdict(list)
    indeg = [0] * n
    for a, b in arcs:
        outs[a].append(b)
        indeg[b] += 1
        if indeg[b] > 1:
            raise MalformedArcSet(f"vertex {b} has indegree > 1")
    sinks = {v for v in range(n) if not outs[v]}
    result = set(arcs)
    flipped = set()
    m = c.matrix
    for v in sorted(outs):
        heads = outs[v]
        if len(heads) < 2:
            continue
        keep = max(heads, key=lambda u: m[v, u])
        for u in heads:
            if u == keep:
                continue
            result.discard((v, u))
            if u in sinks:
                result.add((u, v))
                flipped.add((u, v))
    out_of = {a: b for a, b in result}
    roots = frozenset(v for v in range(n) if v not in out_of)
    tree = []
    for v in range(n):
        w = v
        while w in out_of:
            w = out_of[w]
        tree.append(w)
    return TreeDecomposition("in", frozenset(result), roots, tuple(tree), frozenset(flipped))


def min_trees(c: SimpleClique) -> TreeDecomposition:
    """T-: in-trees whose sinks are the emitters."""
    return to_in_trees(build_min_digraph(c), c)


def max_trees(c: SimpleClique) -> TreeDecomposition:
    """T+: out-trees whose sources are the collectors."""
    neg = c.negated()
    return to_in_trees(build_min_digraph(neg, low_to_high=False), neg).reversed()


@dataclass(frozen=True)
class FireworksCover:
    """One of the three covers; ``kind`` is 'forward', 'backward' or
    'bidirectional'.  The edge set is built on first access."""

    clique: SimpleClique = field(repr=False)
    kind: str
    tminus: TreeDecomposition | None
    tplus: TreeDecomposition | None

    @property
    def emitters(self) -> frozenset[int]:
        return self.tminus.roots if self.tminus is not None else frozenset()

    @property
    def collectors(self) -> frozenset[int]:
        return self.tplus.roots if self.tplus is not None else frozenset()

    @cached_property
    def edges(self) -> frozenset[Edge]:
        n = self.clique.n
        if self.kind == "forward":
            return self.tminus.edges() | _star_edges(n, self.emitters)
        if self.kind == "backward":
            return self.tplus.edges() | _star_edges(n, self.collectors)
        hedges = {Edge.of(x, y) for x in self.emitters for y in self.collectors if x != y}
        return self.tminus.edges() | self.tplus.edges() | hedges

    @cached_property
    def spanner(self) -> Spanner:
        return Spanner.of(self.clique, self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def _star_edges(n: int, centers) -> frozenset[Edge]:
    return frozenset(Edge.of(s, x) for s in centers for x in range(n) if x != s)


def forward_cover(c: SimpleClique) -> FireworksCover:
    """Tree edges of T- plus every edge touching an emitter."""
    return FireworksCover(c, "forward", min_trees(c), None)


def backward_cover(c: SimpleClique) -> FireworksCover:
    return FireworksCover(c, "backward", None, max_trees(c))


def bidirectional_cover(c: SimpleClique) -> FireworksCover:
    """Edges of T- and T+ plus all emitter-collector edges."""
    return FireworksCover(c, "bidirectional", min_trees(c), max_trees(c))


def _two_hop_in(td: TreeDecomposition, v: int, c: SimpleClique) -> Journey:
    if v in td.roots:
        raise IsSink(f"vertex {v} is the sink of its tree")
    w = td.out_arc[v]
    first = Hop(v, w, c.label(v, w))
    if (v, w) not in td.flipped:
        return Journey((first,))
    x = td.out_arc[w]
    return Journey((first, Hop(w, x, c.label(w, x))))


def two_hop_extreme_journey(td: TreeDecomposition, v: int, c: SimpleClique) -> Journey:
    """Journey of at most two hops inside v's tree.

    On T- it starts at ``v`` and ends through the minimum edge of its last
    vertex; on T+ it ends at ``v`` and starts through the maximum edge of its
    first vertex.
    """
    if td.kind == "in":
        return _two_hop_in(td, v, c)
    if v in td.roots:
        raise IsSink(f"vertex {v} is the source of its tree")
    j = _two_hop_in(td.reversed(), v, c.negated())
    return j.negated().reversed()
