"""Instance generators: random permutation cliques, the adversarial
non-pivotable and non-dismountable families, and small hand-made fixtures.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .core import (
    Edge,
    MultiLabelClique,
    SimpleClique,
    TempSpanError,
    all_edges,
    build_simple_clique,
    num_edges,
)


class NTooSmall(TempSpanError, ValueError):
    pass


class UnknownFixture(TempSpanError, KeyError):
    pass


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)


def random_clique(n: int, seed: int) -> SimpleClique:
    """Labels form a uniformly random permutation of ``0..C(n,2)-1``."""
    if n < 2:
        raise NTooSmall("n must be at least 2")
    perm = _rng(seed).permutation(num_edges(n))
    return build_simple_clique(n, zip(all_edges(n), perm.tolist()))


def random_multi_clique(n: int, seed: int, max_labels: int = 3, span: int | None = None) -> MultiLabelClique:
    """Each edge receives 1..max_labels labels drawn from ``[0, span)``.

    The default span is small enough to produce plenty of label collisions.
    """
    rng = _rng(seed)
    span = num_edges(n) if span is None else span
    labels = {}
    for e in all_edges(n):
        k = int(rng.integers(1, max_labels + 1))
        labels[e] = rng.integers(0, span, size=k).tolist()
    return MultiLabelClique(n, labels)


def gen_non_pivotable(n: int) -> SimpleClique:
    """Two-period construction where no vertex can serve as a pivot.

    Vertices 0, 1, 2 play u, v, w.  First period: uv=0, vw=1, then the
    sub-clique on V minus {v, w} in lexicographic order.  Second period: v's
    remaining edges, then uw, then w's remaining edges.
    """
    if n < 6:
        raise NTooSmall("non-pivotable construction needs n >= 6")
    u, v, w = 0, 1, 2
    rest = list(range(3, n))
    labels: dict[Edge, int] = {Edge(u, v): 0, Edge(v, w): 1}
    nxt = 2
    for a, b in combinations([u, *rest], 2):
        labels[Edge(a, b)] = nxt
        nxt += 1
    for x in rest:
        labels[Edge.of(v, x)] = nxt
        nxt += 1
    labels[Edge(u, w)] = nxt
    nxt += 1
    for x in rest:
        labels[Edge.of(w, x)] = nxt
        nxt += 1
    return build_simple_clique(n, labels.items())


def gen_bipartite_case2(k: int, seed: int) -> SimpleClique:
    """Clique on ``2k`` vertices whose fireworks end in a bipartite residual.

    Collectors are ``0..k-1`` and emitters ``k..2k-1``.  A random perfect
    matching gets the ``k`` smallest labels and a second, disjoint one the
    ``k`` largest, so both are extreme at both endpoints; every other edge
    draws from the labels in between.  Labels are globally distinct.
    """
    if k < 2:
        raise NTooSmall("need k >= 2 for two disjoint matchings")
    rng = _rng(seed)
    n = 2 * k
    top = num_edges(n)
    low = rng.permutation(k)
    while True:
        high = rng.permutation(k)
        if not (high == low).any():
            break
    labels: dict[Edge, int] = {}
    lo_labels = rng.permutation(k)
    hi_labels = rng.permutation(k) + top - k
    for i in range(k):
        labels[Edge(int(low[i]), k + i)] = int(lo_labels[i])
        labels[Edge(int(high[i]), k + i)] = int(hi_labels[i])
    rest = [e for e in all_edges(n) if e not in labels]
    mid = rng.permutation(len(rest)) + k
    for e, lab in zip(rest, mid.tolist()):
        labels[e] = lab
    return build_simple_clique(n, labels.items())


# per-copy gadget: (edge, offset) for the three minima then the three maxima
_GADGET_MIN = [((0, 1), 0), ((1, 3), 1), ((0, 2), 2)]
_GADGET_MAX = [((1, 2), 0), ((0, 3), 1), ((2, 3), 2)]


def gen_non_dismountable(m: int) -> SimpleClique:
    """``m`` copies of a non-dismountable K4 glued with intermediate labels."""
    if m < 1:
        raise NTooSmall("need at least one copy")
    n = 4 * m
    top = num_edges(n)
    labels: dict[Edge, int] = {}
    for i in range(m):
        base = 4 * i
        for (a, b), off in _GADGET_MIN:
            labels[Edge(base + a, base + b)] = 3 * i + off
        for (a, b), off in _GADGET_MAX:
            labels[Edge(base + a, base + b)] = top - 3 * m + 3 * i + off
    nxt = 3 * m
    for e in all_edges(n):
        if e.u // 4 != e.v // 4:
            labels[e] = nxt
            nxt += 1
    assert nxt == top - 3 * m
    return build_simple_clique(n, labels.items())


def _letters(text: str) -> SimpleClique:
    pairs = []
    for tok in text.split():
        name, lab = tok.split(":")
        pairs.append(((ord(name[0]) - 97, ord(name[1]) - 97), int(lab)))
    n = max(max(e) for e, _ in pairs) + 1
    return build_simple_clique(n, pairs)


_FIXTURES = {
    "fix6": "ab:10 ac:7 ad:3 ae:8 af:6 bc:0 bd:5 be:12 bf:13 cd:2 ce:4 cf:11 de:9 df:14 ef:1",
    "fix8": (
        "ab:26 ac:2 ad:19 ae:13 af:27 ag:17 ah:3 bc:0 bd:5 be:15 bf:12 bg:11 bh:1 "
        "cd:23 ce:10 cf:9 cg:8 ch:24 de:20 df:4 dg:25 dh:22 ef:21 eg:6 eh:14 "
        "fg:18 fh:7 gh:16"
    ),
    "fixp5": "ab:5 ac:7 ad:2 ae:3 bc:8 bd:1 be:6 cd:9 ce:0 de:4",
    "fixnp5": "ab:0 ac:5 ad:1 ae:3 bc:4 bd:6 be:7 cd:2 ce:9 de:8",
    "fixd5": "ab:0 ac:3 ad:2 ae:9 bc:4 bd:6 be:1 cd:5 ce:7 de:8",
    # vertices v0..v3 written as a..d
    "fixnd4": "ab:2 bd:0 cd:1 ad:3 bc:4 ac:5",
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name: str) -> SimpleClique:
    try:
        text = _FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(_FIXTURES)}") from None
    return _letters(text)


def vertex_name(v: int) -> str:
    """Letter names used by the fixtures (a, b, ...)."""
    return chr(97 + v) if v < 26 else str(v)
