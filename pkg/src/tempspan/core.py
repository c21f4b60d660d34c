"""Instance data model: temporal cliques, edges, labels and ranks.

Vertices are the integers ``0..n-1``.  An edge is identified by its
canonical pair ``(u, v)`` with ``u < v``; every iteration over edges in this
package is lexicographic in that pair so that arbitrary choices made by the
algorithms are reproducible.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import cached_property
from itertools import combinations
from typing import NamedTuple

import numpy as np

_BIG = np.iinfo(np.int64).max
_SMALL = np.iinfo(np.int64).min


class TempSpanError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEdge(TempSpanError, ValueError):
    pass


class MissingEdge(TempSpanError, ValueError):
    pass


class DuplicateEdge(TempSpanError, ValueError):
    pass


class LocalLabelCollision(TempSpanError, ValueError):
    def __init__(self, vertex: int, e1: Edge, e2: Edge, label: int):
        super().__init__(
            f"vertex {vertex}: edges {tuple(e1)} and {tuple(e2)} share label {label}"
        )
        self.vertex = vertex
        self.edges = (e1, e2)
        self.label = label


class RankOutOfBounds(TempSpanError, IndexError):
    pass


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        if a == b:
            raise InvalidEdge(f"self-loop on vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError(f"vertex {w} is not an endpoint of {tuple(self)}")


def all_edges(n: int) -> Iterator[Edge]:
    """Canonical edges of K_n in lexicographic order."""
    for u, v in combinations(range(n), 2):
        yield Edge(u, v)


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def _check_edge(e: Sequence[int], n: int) -> Edge:
    u, v = int(e[0]), int(e[1])
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidEdge(f"edge {(u, v)} out of range for n={n}")
    if u >= v:
        raise InvalidEdge(f"edge {(u, v)} is not canonical (need u < v)")
    return Edge(u, v)


class SimpleClique:
    """Complete graph with one integer label per edge, locally injective.

    Labels are held in a symmetric ``n x n`` int64 matrix; the diagonal is
    meaningless.  Instances are immutable after construction.
    """

    def __init__(self, n: int, matrix: np.ndarray, *, _trusted: bool = False):
        if not _trusted:
            raise TypeError("use build_simple_clique() or SimpleClique.from_matrix()")
        self.n = n
        mat = np.array(matrix, dtype=np.int64, copy=True)
        np.fill_diagonal(mat, 0)
        mat.setflags(write=False)
        self._mat = mat

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> SimpleClique:
        mat = np.asarray(matrix, dtype=np.int64)
        n = mat.shape[0]
        if mat.shape != (n, n) or not np.array_equal(mat, mat.T):
            raise ValueError("label matrix must be square and symmetric")
        c = cls(n, mat, _trusted=True)
        _check_injective(c)
        return c

    @property
    def matrix(self) -> np.ndarray:
        return self._mat

    def label(self, u: int, v: int) -> int:
        if u == v:
            raise InvalidEdge(f"self-loop on vertex {u}")
        return int(self._mat[u, v])

    def edges(self) -> Iterator[Edge]:
        return all_edges(self.n)

    def items(self) -> Iterator[tuple[Edge, int]]:
        m = self._mat
        for e in all_edges(self.n):
            yield e, int(m[e.u, e.v])

    def labels(self) -> dict[Edge, int]:
        return dict(self.items())

    @property
    def num_edges(self) -> int:
        return num_edges(self.n)

    @cached_property
    def min_partner(self) -> np.ndarray:
        """``min_partner[v]`` is the other endpoint of e-(v)."""
        m = self._mat.copy()
        np.fill_diagonal(m, _BIG)
        return m.argmin(axis=1)

    @cached_property
    def max_partner(self) -> np.ndarray:
        m = self._mat.copy()
        np.fill_diagonal(m, _SMALL)
        return m.argmax(axis=1)

    def min_edge(self, v: int) -> Edge:
        return Edge.of(v, int(self.min_partner[v]))

    def max_edge(self, v: int) -> Edge:
        return Edge.of(v, int(self.max_partner[v]))

    def induced(self, vertices: Sequence[int]) -> SimpleClique:
        """Sub-clique on ``vertices``; new vertex ``i`` is ``vertices[i]``."""
        idx = np.asarray(vertices, dtype=np.intp)
        return SimpleClique(len(idx), self._mat[np.ix_(idx, idx)], _trusted=True)

    def negated(self) -> SimpleClique:
        """Same clique with every label negated (reverses time)."""
        return SimpleClique(self.n, -self._mat, _trusted=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleClique):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._mat, other._mat)

    def __hash__(self) -> int:
        return hash((self.n, self._mat.tobytes()))

    @cached_property
    def content_hash(self) -> str:
        from .formats import content_hash

        return content_hash(self)

    def __repr__(self) -> str:
        return f"SimpleClique(n={self.n})"


def _check_injective(c: SimpleClique) -> None:
    n = c.n
    if n < 2:
        return
    m = c.matrix.copy()
    np.fill_diagonal(m, _BIG)
    srt = np.sort(m, axis=1)[:, : n - 1]
    dup = np.nonzero((np.diff(srt, axis=1) == 0).any(axis=1))[0]
    if len(dup) == 0:
        return
    w = int(dup[0])
    seen: dict[int, Edge] = {}
    for x in range(n):
        if x == w:
            continue
        lab = int(c.matrix[w, x])
        if lab in seen:
            raise LocalLabelCollision(w, seen[lab], Edge.of(w, x), lab)
        seen[lab] = Edge.of(w, x)


def build_simple_clique(n: int, labels: Iterable[tuple[Sequence[int], int]]) -> SimpleClique:
    """Validate an edge/label listing and return the clique.

    Raises MissingEdge, DuplicateEdge or LocalLabelCollision.
    """
    if n < 2:
        raise ValueError("a temporal clique needs at least 2 vertices")
    mat = np.zeros((n, n), dtype=np.int64)
    seen = np.zeros((n, n), dtype=bool)
    for e, lab in labels:
        u, v = _check_edge(e, n)
        if seen[u, v]:
            raise DuplicateEdge(f"edge {(u, v)} listed twice")
        seen[u, v] = True
        mat[u, v] = mat[v, u] = int(lab)
    for e in all_edges(n):
        if not seen[e.u, e.v]:
            raise MissingEdge(f"edge {tuple(e)} has no label")
    c = SimpleClique(n, mat, _trusted=True)
    _check_injective(c)
    return c


def extreme_edge(c: SimpleClique, v: int, side: str) -> Edge:
    """e-(v) for ``side='min'``, e+(v) for ``side='max'``."""
    if side == "min":
        return c.min_edge(v)
    if side == "max":
        return c.max_edge(v)
    raise ValueError(f"side must be 'min' or 'max', not {side!r}")


class MultiLabelClique:
    """Complete graph whose edges carry non-empty sets of integer labels."""

    def __init__(self, n: int, labels: Mapping[Sequence[int], Iterable[int]]):
        if n < 2:
            raise ValueError("a temporal clique needs at least 2 vertices")
        table: dict[Edge, tuple[int, ...]] = {}
        for e, labs in labels.items():
            edge = _check_edge(e, n)
            if edge in table:
                raise DuplicateEdge(f"edge {tuple(edge)} listed twice")
            ls = tuple(sorted({int(x) for x in labs}))
            if not ls:
                raise ValueError(f"edge {tuple(edge)} has an empty label set")
            table[edge] = ls
        for e in all_edges(n):
            if e not in table:
                raise MissingEdge(f"edge {tuple(e)} has no label")
        self.n = n
        self._labels = {e: table[e] for e in all_edges(n)}

    def labels_of(self, e: Edge) -> tuple[int, ...]:
        return self._labels[e]

    def items(self) -> Iterator[tuple[Edge, tuple[int, ...]]]:
        return iter(self._labels.items())

    def edges(self) -> Iterator[Edge]:
        return iter(self._labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiLabelClique):
            return NotImplemented
        return self.n == other.n and self._labels == other._labels

    @cached_property
    def content_hash(self) -> str:
        from .formats import content_hash

        return content_hash(self)

    def __repr__(self) -> str:
        return f"MultiLabelClique(n={self.n})"


class RankTable:
    """Incident edges of each vertex, sorted by label, over an edge universe.

    Rank ``i`` (1-based) at ``v`` is the edge with the i-th smallest label
    among the universe edges touching ``v``.
    """

    def __init__(self, c: SimpleClique, universe: Iterable[Edge] | None = None):
        es = list(c.edges()) if universe is None else [Edge.of(*e) for e in universe]
        inc: dict[int, list[Edge]] = {}
        for e in es:
            inc.setdefault(e.u, []).append(e)
            inc.setdefault(e.v, []).append(e)
        m = c.matrix
        self._order = {
            v: sorted(lst, key=lambda e: (int(m[e.u, e.v]), e)) for v, lst in inc.items()
        }
        self._rank = {
            v: {e: i + 1 for i, e in enumerate(lst)} for v, lst in self._order.items()
        }

    def degree(self, v: int) -> int:
        return len(self._order.get(v, ()))

    def edge(self, v: int, i: int) -> Edge:
        lst = self._order.get(v, [])
        if not 1 <= i <= len(lst):
            raise RankOutOfBounds(f"rank {i} outside [1, {len(lst)}] at vertex {v}")
        return lst[i - 1]

    def rank(self, v: int, e: Edge) -> int:
        return self._rank[v][e]

    def ordered(self, v: int) -> list[Edge]:
        return list(self._order.get(v, ()))


def rank_edge(t: RankTable, v: int, i: int) -> Edge:
    return t.edge(v, i)
