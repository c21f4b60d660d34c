"""One-way reduction from multi-label cliques (non-strict journeys) to
simple cliques, and lifting spanners back.

Each edge keeps its smallest label as representative; edges are then ranked
by ``(representative, edge)`` and relabelled ``0..m-1``.  Labels become
globally distinct, and any strict journey of the result is a non-strict
journey of the original along the same edges.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .core import (
    Edge,
    MultiLabelClique,
    SimpleClique,
    TempSpanError,
    build_simple_clique,
)
from .reach import Spanner


class MapMismatch(TempSpanError, ValueError):
    pass


@dataclass(frozen=True)
class LabelMap:
    """``new label -> (edge, original label)`` plus both instance hashes."""

    source_hash: str
    target_hash: str
    table: dict[int, tuple[Edge, int]]

    def __iter__(self) -> Iterator[tuple[int, Edge, int]]:
        for new, (e, old) in sorted(self.table.items()):
            yield new, e, old

    def to_json(self) -> dict:
        return {
            "source_hash": self.source_hash,
            "target_hash": self.target_hash,
            "entries": [[e.u, e.v, new, old] for new, e, old in self],
        }

    @classmethod
    def from_json(cls, data: dict) -> LabelMap:
        table = {int(new): (Edge.of(int(u), int(v)), int(old)) for u, v, new, old in data["entries"]}
        return cls(data["source_hash"], data["target_hash"], table)


def to_simple(m: MultiLabelClique) -> tuple[SimpleClique, LabelMap]:
    reps = sorted((labs[0], e) for e, labs in m.items())
    labels = {e: i for i, (_, e) in enumerate(reps)}
    c = build_simple_clique(m.n, labels.items())
    table = {i: (e, rep) for i, (rep, e) in enumerate(reps)}
    return c, LabelMap(m.content_hash, c.content_hash, table)


def lift_spanner(s: Spanner, lmap: LabelMap) -> Spanner:
    """Same edges, re-keyed to the original instance."""
    if s.instance_hash != lmap.target_hash:
        raise MapMismatch("spanner does not belong to the reduced instance of this map")
    known = {e for e, _ in lmap.table.values()}
    stray = s.edges - known
    if stray:
        raise MapMismatch(f"edge {tuple(min(stray))} is not covered by the map")
    return Spanner(lmap.source_hash, s.edges)
