"""Temporal reachability: journeys, earliest arrivals, latest departures,
temporal connectivity and spanner verification.

All sweeps scan the contacts ``(label, edge)`` of an edge universe in
increasing label order (ties by canonical edge id).  In strict mode a hop
labelled ``t`` may follow an arrival strictly before ``t``; in non-strict mode
an arrival at ``t`` suffices, so blocks of equal labels are re-scanned until
no relaxation happens.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import groupby
from typing import NamedTuple

from .core import Edge, MultiLabelClique, SimpleClique, TempSpanError

Instance = SimpleClique | MultiLabelClique

STRICT = "strict"
NONSTRICT = "nonstrict"


class InstanceMismatch(TempSpanError, ValueError):
    pass


class Hop(NamedTuple):
    u: int
    v: int
    t: int


@dataclass(frozen=True)
class Journey:
    hops: tuple[Hop, ...]

    @classmethod
    def of(cls, hops: Iterable[Sequence[int]]) -> Journey:
        return cls(tuple(Hop(int(u), int(v), int(t)) for u, v, t in hops))

    @property
    def source(self) -> int:
        return self.hops[0].u

    @property
    def target(self) -> int:
        return self.hops[-1].v

    def __len__(self) -> int:
        return len(self.hops)

    def edges(self) -> list[Edge]:
        return [Edge.of(h.u, h.v) for h in self.hops]

    def reversed(self) -> Journey:
        """Hops in reverse order and direction (labels untouched)."""
        return Journey(tuple(Hop(h.v, h.u, h.t) for h in reversed(self.hops)))

    def negated(self) -> Journey:
        return Journey(tuple(Hop(h.u, h.v, -h.t) for h in self.hops))

    def is_valid(self, inst: Instance | None = None, mode: str = STRICT) -> bool:
        """Chaining, monotone labels and (if given) labels present in ``inst``."""
        if not self.hops:
            return False
        for a, b in zip(self.hops, self.hops[1:]):
            if a.v != b.u:
                return False
            if b.t < a.t or (mode == STRICT and b.t == a.t):
                return False
        verts = [self.hops[0].u] + [h.v for h in self.hops]
        if len(set(verts)) != len(verts):
            return False
        if inst is not None:
            for h in self.hops:
                if h.t not in _labels_of(inst, Edge.of(h.u, h.v)):
                    return False
        return True


@dataclass(frozen=True)
class Spanner:
    """An edge subset of an instance identified by its content hash."""

    instance_hash: str
    edges: frozenset[Edge]

    @classmethod
    def of(cls, inst: Instance, edges: Iterable[Sequence[int]]) -> Spanner:
        return cls(inst.content_hash, frozenset(Edge.of(*e) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)


def _labels_of(inst: Instance, e: Edge) -> tuple[int, ...]:
    if isinstance(inst, SimpleClique):
        return (inst.label(e.u, e.v),)
    return inst.labels_of(e)


def contacts(inst: Instance, universe: Iterable[Sequence[int]] | None = None) -> list[tuple[int, Edge]]:
    """Sorted ``(label, edge)`` pairs of the universe (default: all edges)."""
    es = inst.edges() if universe is None else {Edge.of(*e) for e in universe}
    out = [(t, e) for e in es for t in _labels_of(inst, e)]
    out.sort()
    return out


def _sweep(
    n: int,
    cts: Sequence[tuple[int, Edge]],
    source: int,
    strict: bool,
    min_start: float,
) -> tuple[list[float], list[Hop | None]]:
    arr: list[float] = [math.inf] * n
    pred: list[Hop | None] = [None] * n
    arr[source] = -math.inf
    for t, block in groupby(cts, key=lambda c: c[0]):
        if t < min_start:
            continue
        es = [e for _, e in block]
        while True:
            changed = False
            for e in es:
                for x, y in ((e.u, e.v), (e.v, e.u)):
                    ax = arr[x]
                    if (ax < t if strict else ax <= t) and t < arr[y]:
                        arr[y] = t
                        pred[y] = Hop(x, y, t)
                        changed = True
            if strict or not changed:
                break
    return arr, pred


def _check_mode(mode: str) -> bool:
    if mode not in (STRICT, NONSTRICT):
        raise ValueError(f"mode must be {STRICT!r} or {NONSTRICT!r}, not {mode!r}")
    return mode == STRICT


def earliest_arrivals(
    inst: Instance,
    source: int,
    mode: str = STRICT,
    universe: Iterable[Sequence[int]] | None = None,
    min_start: float = -math.inf,
) -> list[float]:
    """Earliest arrival label per vertex (``inf`` if unreachable).

    The source itself gets ``-inf``.  Only contacts labelled ``>= min_start``
    are used.
    """
    strict = _check_mode(mode)
    arr, _ = _sweep(inst.n, contacts(inst, universe), source, strict, min_start)
    return arr


def foremost_tree(
    inst: Instance,
    source: int,
    mode: str = STRICT,
    universe: Iterable[Sequence[int]] | None = None,
    min_start: float = -math.inf,
) -> tuple[list[float], list[Hop | None]]:
    """Earliest arrivals together with one predecessor hop per vertex."""
    strict = _check_mode(mode)
    return _sweep(inst.n, contacts(inst, universe), source, strict, min_start)


def journey_from_tree(pred: Sequence[Hop | None], target: int) -> Journey | None:
    hops = []
    v = target
    while pred[v] is not None:
        h = pred[v]
        hops.append(h)
        v = h.u
    if not hops:
        return None
    return Journey(tuple(reversed(hops)))


def latest_tree(
    inst: Instance,
    target: int,
    mode: str = STRICT,
    universe: Iterable[Sequence[int]] | None = None,
    max_end: float = math.inf,
) -> tuple[list[float], list[Hop | None]]:
    """Latest departures toward ``target`` with one successor hop per vertex.

    Computed as the earliest-arrival sweep of the time-reversed instance.
    """
    strict = _check_mode(mode)
    cts = sorted((-t, e) for t, e in contacts(inst, universe))
    arr, pred = _sweep(inst.n, cts, target, strict, -max_end)
    dep = [-a for a in arr]
    succ = [None if h is None else Hop(h.v, h.u, -h.t) for h in pred]
    return dep, succ


def latest_departures(
    inst: Instance,
    target: int,
    mode: str = STRICT,
    universe: Iterable[Sequence[int]] | None = None,
    max_end: float = math.inf,
) -> list[float]:
    """Latest label of a first hop still reaching ``target`` (``-inf`` if none).

    ``target`` itself gets ``+inf``.  Only contacts labelled ``<= max_end``
    are used.
    """
    return latest_tree(inst, target, mode, universe, max_end)[0]


def journey_along_successors(succ: Sequence[Hop | None], source: int) -> Journey | None:
    hops = []
    v = source
    while succ[v] is not None:
        h = succ[v]
        hops.append(h)
        v = h.v
    return Journey(tuple(hops)) if hops else None


def reach_sets(
    inst: Instance,
    mode: str = STRICT,
    universe: Iterable[Sequence[int]] | None = None,
) -> list[int]:
    """Bitmask per vertex of the sources that can reach it (all sources at once)."""
    strict = _check_mode(mode)
    n = inst.n
    reached = [1 << v for v in range(n)]
    for _, block in groupby(contacts(inst, universe), key=lambda c: c[0]):
        es = [e for _, e in block]
        if len(es) == 1:
            u, v = es[0]
            merged = reached[u] | reached[v]
            reached[u] = reached[v] = merged
            continue
        if strict:
            snap = list(reached)
            for u, v in es:
                reached[u] |= snap[v]
                reached[v] |= snap[u]
            continue
        changed = True
        while changed:
            changed = False
            for u, v in es:
                merged = reached[u] | reached[v]
                if merged != reached[u] or merged != reached[v]:
                    reached[u] = reached[v] = merged
                    changed = True
    return reached


def is_temporally_connected(
    inst: Instance,
    mode: str = STRICT,
    universe: Iterable[Sequence[int]] | None = None,
) -> bool:
    full = (1 << inst.n) - 1
    return all(r == full for r in reach_sets(inst, mode, universe))


def verify_spanner(inst: Instance, s: Spanner, mode: str = STRICT) -> bool:
    if s.instance_hash != inst.content_hash:
        raise InstanceMismatch("spanner was built for a different instance")
    for e in s.edges:
        if not (0 <= e.u < e.v < inst.n):
            raise InstanceMismatch(f"edge {tuple(e)} is not an edge of the instance")
    return is_temporally_connected(inst, mode, s.edges)
