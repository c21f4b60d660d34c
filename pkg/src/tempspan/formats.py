"""Text instance format, content hashing and spanner/report JSON artifacts.

Instance files look like::

    tg 1 <n> <m> <simple|multi>
    u v l1[,l2,...]
    ...

with 0-indexed vertices, one line per canonical edge.  Blank lines and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .core import (
    Edge,
    LocalLabelCollision,
    MultiLabelClique,
    SimpleClique,
    TempSpanError,
    build_simple_clique,
    num_edges,
)

Instance = SimpleClique | MultiLabelClique

FORMAT_VERSION = 1


class FormatError(TempSpanError, ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


def dumps_instance(inst: Instance) -> str:
    if isinstance(inst, SimpleClique):
        kind = "simple"
        body = [f"{e.u} {e.v} {lab}" for e, lab in inst.items()]
    else:
        kind = "multi"
        body = [f"{e.u} {e.v} {','.join(map(str, labs))}" for e, labs in inst.items()]
    head = f"tg {FORMAT_VERSION} {inst.n} {num_edges(inst.n)} {kind}"
    return "\n".join([head, *body]) + "\n"


def loads_instance(text: str) -> Instance:
    lines = [
        (i, ln.strip())
        for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty instance file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 5 or parts[0] != "tg":
        raise FormatError("expected header 'tg <version> <n> <m> <simple|multi>'", lineno)
    try:
        version, n, m = int(parts[1]), int(parts[2]), int(parts[3])
    except ValueError:
        raise FormatError("non-integer field in header", lineno) from None
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {version}", lineno)
    kind = parts[4]
    if kind not in ("simple", "multi"):
        raise FormatError(f"unknown instance kind {kind!r}", lineno)
    if n < 2:
        raise FormatError("n must be at least 2", lineno)
    if m != num_edges(n):
        raise FormatError(f"m={m} but a clique on {n} vertices has {num_edges(n)} edges", lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}")
    entries: dict[Edge, tuple[int, ...]] = {}
    where: dict[Edge, int] = {}
    for lineno, ln in body:
        fields = ln.split()
        if len(fields) != 3:
            raise FormatError("expected 'u v labels'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
            labs = tuple(int(x) for x in fields[2].split(","))
        except ValueError:
            raise FormatError("non-integer vertex or label", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"invalid edge {u} {v}", lineno)
        e = Edge.of(u, v)
        if e in entries:
            raise FormatError(f"duplicate edge {e.u} {e.v}", lineno)
        if kind == "simple" and len(labs) != 1:
            raise FormatError("simple instances carry exactly one label per edge", lineno)
        entries[e] = labs
        where[e] = lineno
    try:
        if kind == "simple":
            return build_simple_clique(n, ((e, labs[0]) for e, labs in entries.items()))
        return MultiLabelClique(n, entries)
    except LocalLabelCollision as exc:
        raise FormatError(str(exc), max(where[e] for e in exc.edges)) from exc
    except TempSpanError as exc:
        raise FormatError(str(exc)) from exc


def read_instance(path: str | Path) -> Instance:
    return loads_instance(Path(path).read_text(encoding="utf-8"))


def write_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(inst), encoding="utf-8")


def content_hash(inst: Instance) -> str:
    digest = hashlib.sha256(dumps_instance(inst).encode("utf-8")).hexdigest()
    return f"sha256:{digest}"


def dump_json(payload: Any, path: str | Path) -> None:
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def spanner_payload(spanner, algorithm: str, n: int) -> dict[str, Any]:
    return {
        "format": "tempspan-spanner",
        "version": FORMAT_VERSION,
        "algorithm": algorithm,
        "instance_hash": spanner.instance_hash,
        "n": n,
        "size": len(spanner.edges),
        "edges": [list(e) for e in sorted(spanner.edges)],
    }


def load_spanner(path: str | Path):
    from .reach import Spanner

    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        edges = frozenset(Edge.of(int(u), int(v)) for u, v in data["edges"])
        return Spanner(data["instance_hash"], edges), data
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed spanner file {path}: {exc}") from exc
