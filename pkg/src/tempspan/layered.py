"""Layered delegations on the bipartite residual between emitters and
collectors.

Ranks are taken at emitters over the residual's edges (rank 1 is the S-
edge, rank k the S+ edge).  Step ``j`` only looks at edges whose rank at
their emitter falls in the interval ``I_j``.  Half of the alive emitters
(more precisely, all but the next power of two) route a two-hop journey to a
surviving emitter and pay direct edges for the collectors the survivor can no
longer serve.  Eight finalists keep all their edges.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from .core import Edge, RankTable, SimpleClique, TempSpanError


class SplitStalled(TempSpanError, RuntimeError):
    pass


class InvalidResidual(TempSpanError, ValueError):
    pass


Interval = tuple[int, int]


@dataclass(frozen=True, eq=False)
class BipartiteResidual:
    """Complete bipartite residual inside ``clique``.

    ``s_minus`` and ``s_plus`` map each emitter to its matched collector.
    """

    clique: SimpleClique = field(repr=False)
    emitters: tuple[int, ...]
    collectors: tuple[int, ...]
    s_minus: dict[int, int]
    s_plus: dict[int, int]

    @property
    def k(self) -> int:
        return len(self.emitters)

    @cached_property
    def h_edges(self) -> frozenset[Edge]:
        return frozenset(Edge.of(x, y) for x in self.emitters for y in self.collectors)

    @cached_property
    def ranks(self) -> RankTable:
        return RankTable(self.clique, self.h_edges)

    @property
    def s_minus_edges(self) -> frozenset[Edge]:
        return frozenset(Edge.of(u, c) for u, c in self.s_minus.items())

    @property
    def s_plus_edges(self) -> frozenset[Edge]:
        return frozenset(Edge.of(u, c) for u, c in self.s_plus.items())

    @classmethod
    def from_partition(
        cls, c: SimpleClique, emitters: Iterable[int], collectors: Iterable[int]
    ) -> BipartiteResidual:
        """Derive both matchings from the ranks and check every invariant."""
        xs, ys = tuple(sorted(emitters)), tuple(sorted(collectors))
        if set(xs) & set(ys) or len(xs) != len(ys) or not xs:
            raise InvalidResidual("emitters and collectors must be disjoint and of equal size")
        m = c.matrix
        ys_arr = list(ys)
        sm = {u: min(ys_arr, key=lambda y: m[u, y]) for u in xs}
        sp = {u: max(ys_arr, key=lambda y: m[u, y]) for u in xs}
        r = cls(c, xs, ys, sm, sp)
        r.check()
        return r

    def check(self) -> None:
        m = self.clique.matrix
        for name, match, pick in (("S-", self.s_minus, min), ("S+", self.s_plus, max)):
            if sorted(match.values()) != list(self.collectors):
                raise InvalidResidual(f"{name} is not a perfect matching")
            for u, y in match.items():
                if pick(self.collectors, key=lambda z: m[u, z]) != y:
                    raise InvalidResidual(f"{name} edge {u}-{y} is not extreme at emitter {u}")
                if pick(self.emitters, key=lambda x: m[x, y]) != u:
                    raise InvalidResidual(f"{name} edge {u}-{y} is not extreme at collector {y}")


def rank_intervals(k: int) -> tuple[Interval, ...]:
    """Rank intervals ``[2^(j+2)-7, 2^(j+3)-8]`` for ``j = 1..ceil(log2 k)-3``,
    capped at ``k``; empty when ``k <= 8``."""
    if k < 1:
        raise ValueError("k must be positive")
    if k <= 8:
        return ()
    steps = (k - 1).bit_length() - 3
    return tuple(
        ((1 << (j + 2)) - 7, min((1 << (j + 3)) - 8, k)) for j in range(1, steps + 1)
    )


@dataclass(frozen=True)
class Delegation:
    """``u`` reaches ``delegate`` through ``via``, arriving at rank ``arrival``."""

    u: int
    via: int
    delegate: int
    arrival: int


@dataclass(frozen=True)
class SplitResult:
    eliminated: tuple[Delegation, ...]
    survivors: frozenset[int]


def split_alive(
    r: BipartiteResidual, alive: Iterable[int], interval: Interval, target_survivors: int
) -> SplitResult:
    """Greedy split of ``alive`` into eliminated emitters (each with a
    two-hop journey to a survivor inside the step's edge band) and survivors."""
    alive = sorted(alive)
    need = len(alive) - target_survivors
    if need <= 0:
        raise ValueError("target_survivors must be below the alive count")
    lo, hi = interval
    rt, m = r.ranks, r.clique.matrix
    band: dict[int, list[int]] = {}
    touching: dict[int, set[int]] = {y: set() for y in r.collectors}
    for u in alive:
        ys = [e.other(u) for e in rt.ordered(u)[lo - 1 : hi]]
        band[u] = ys
        for y in ys:
            touching[y].add(u)
    out: list[Delegation] = []
    while len(out) < need:
        y = max(r.collectors, key=lambda z: (len(touching[z]), -z))
        batch = touching[y]
        if len(batch) < 2:
            raise SplitStalled(
                f"no collector of degree >= 2 in band {interval} with {need - len(out)} eliminations left"
            )
        delegate = max(batch, key=lambda x: m[x, y])
        arrival = rt.rank(delegate, Edge.of(delegate, y))
        others = sorted(x for x in batch if x != delegate)[: need - len(out)]
        out.extend(Delegation(x, y, delegate, arrival) for x in others)
        for x in list(batch):
            for z in band[x]:
                touching[z].discard(x)
    gone = {d.u for d in out}
    return SplitResult(tuple(out), frozenset(x for x in alive if x not in gone))


@dataclass(frozen=True)
class StepSelection:
    j: int
    interval: Interval
    split: SplitResult
    journeys: frozenset[Edge]
    direct: frozenset[Edge]
    cost: dict[int, int]

    @property
    def edges(self) -> frozenset[Edge]:
        return self.journeys | self.direct


@dataclass(frozen=True)
class LayeredSelection:
    steps: tuple[StepSelection, ...]
    finalists: frozenset[int]
    last: frozenset[Edge]
    matchings: frozenset[Edge]
    stalled: bool = False

    @cached_property
    def edges(self) -> frozenset[Edge]:
        out = set(self.last) | self.matchings
        for st in self.steps:
            out |= st.edges
        return frozenset(out)


def _select_step(r: BipartiteResidual, j: int, interval: Interval, split: SplitResult) -> StepSelection:
    rt = r.ranks
    journeys, direct = set(), set()
    cost = {}
    for d in split.eliminated:
        mine = {Edge.of(d.u, d.via), Edge.of(d.via, d.delegate)}
        for e in rt.ordered(d.delegate)[: d.arrival - 1]:
            mine.add(Edge.of(d.u, e.other(d.delegate)))
        cost[d.u] = len(mine)
        assert cost[d.u] <= 1 << (j + 3), "per-emitter step cost exceeded"
        journeys |= {Edge.of(d.u, d.via), Edge.of(d.via, d.delegate)}
        direct |= mine
    direct -= journeys
    return StepSelection(j, interval, split, frozenset(journeys), frozenset(direct), cost)


def layered_selection(r: BipartiteResidual, *, on_stall: str = "raise") -> LayeredSelection:
    """Run all steps.  ``on_stall='keep'`` stops at a stalled split and keeps
    every still-alive emitter as a finalist instead of raising."""
    if on_stall not in ("raise", "keep"):
        raise ValueError("on_stall must be 'raise' or 'keep'")
    alive = frozenset(r.emitters)
    steps = []
    stalled = False
    for j, iv in enumerate(rank_intervals(r.k), start=1):
        target = 1 << ((len(alive) - 1).bit_length() - 1)
        try:
            split = split_alive(r, alive, iv, target)
        except SplitStalled:
            if on_stall == "raise":
                raise
            stalled = True
            break
        steps.append(_select_step(r, j, iv, split))
        alive = split.survivors
    last = frozenset(Edge.of(x, y) for x in alive for y in r.collectors)
    return LayeredSelection(
        tuple(steps), alive, last, r.s_minus_edges | r.s_plus_edges, stalled
    )


def layered_delegation(r: BipartiteResidual) -> frozenset[Edge]:
    return layered_selection(r).edges


def size_bound(k: int) -> int:
    """``4(2k)ceil(log2 k) + 8k + 2k``."""
    return 8 * k * max(0, (k - 1).bit_length()) + 10 * k
