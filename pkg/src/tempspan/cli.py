"""Command line front-end: ``tempspan gen|span|verify|minimize|reduce|bench``.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 a freshly built spanner failed its own check, 4 the chosen method does not
apply to the instance (no pivot, not dismountable).
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections.abc import Sequence
from pathlib import Path

from .bench import (
    ALGORITHMS,
    StatsRow,
    conjecture_stats,
    run_algorithm,
    run_bench,
    size_bound,
)
from .core import MultiLabelClique, SimpleClique, TempSpanError
from .dot import fireworks_roles, to_dot
from .formats import (
    FormatError,
    dump_json,
    load_spanner,
    read_instance,
    spanner_payload,
    write_instance,
)
from .gen import (
    FIXTURE_NAMES,
    fixture,
    gen_bipartite_case2,
    gen_non_dismountable,
    gen_non_pivotable,
    random_clique,
    random_multi_clique,
)
from .oracle import InstanceTooLarge, min_spanner
from .pipeline import spanner_nlogn
from .reach import NONSTRICT, STRICT, InstanceMismatch, verify_spanner
from .reduce import lift_spanner, to_simple

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_SELFCHECK, EXIT_NA = 0, 1, 2, 3, 4


def _err(msg: str) -> None:
    print(f"tempspan: {msg}", file=sys.stderr)


def _load(path: str):
    try:
        return read_instance(path)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def cmd_gen(a: argparse.Namespace) -> int:
    kind = a.kind
    if kind == "fixture":
        if not a.name:
            _err("--name is required for --kind fixture")
            return EXIT_INPUT
        inst = fixture(a.name)
    elif kind == "non-dismountable":
        inst = gen_non_dismountable(a.m)
    elif kind == "non-pivotable":
        inst = gen_non_pivotable(a.n)
    elif kind == "random":
        inst = random_clique(a.n, a.seed)
    elif kind == "multi":
        inst = random_multi_clique(a.n, a.seed, a.max_labels)
    else:  # bipartite
        if a.n % 2:
            _err("--kind bipartite needs an even --n")
            return EXIT_INPUT
        inst = gen_bipartite_case2(a.n // 2, a.seed)
    write_instance(inst, a.out)
    print(f"wrote {a.out} (n={inst.n}, {inst.content_hash})")
    return EXIT_OK


def _span_simple(c: SimpleClique, algo: str, k: int):
    report = None
    if algo == "pipeline":
        s, rep = spanner_nlogn(c)
        report = rep.as_dict()
    else:
        s = run_algorithm(algo, c, k)
    return s, report


def cmd_span(a: argparse.Namespace) -> int:
    inst = _load(a.inp)
    lifted_from = None
    if isinstance(inst, MultiLabelClique):
        simple, lmap = to_simple(inst)
        lifted_from = simple
    else:
        simple = inst
    s, report = _span_simple(simple, a.algo, a.k)
    if s is None:
        _err(f"algorithm {a.algo!r} does not apply to this instance")
        return EXIT_NA
    mode = STRICT
    if lifted_from is not None:
        s = lift_spanner(s, lmap)
        mode = NONSTRICT
    if not verify_spanner(inst, s, mode):
        _err("self-check failed: the computed spanner is not temporally connected")
        return EXIT_SELFCHECK
    dump_json(spanner_payload(s, a.algo, inst.n), a.out)
    print(f"{a.algo}: {len(s)} edges (bound {size_bound(a.algo, inst.n, a.k)}) -> {a.out}")
    if a.report:
        body = {
            "algorithm": a.algo,
            "instance_hash": inst.content_hash,
            "n": inst.n,
            "size": len(s),
            "bound": size_bound(a.algo, inst.n, a.k),
            "mode": mode,
            "valid": True,
        }
        if a.algo == "dismount":
            body["k"] = a.k
        if report is not None:
            body["pipeline"] = report
        dump_json(body, a.report)
    if a.dot:
        em, co = fireworks_roles(simple)
        Path(a.dot).write_text(to_dot(inst, s.edges, em, co), encoding="utf-8")
    return EXIT_OK


def cmd_verify(a: argparse.Namespace) -> int:
    inst = _load(a.graph)
    try:
        s, _ = load_spanner(a.spanner)
    except OSError as exc:
        raise FormatError(f"cannot read {a.spanner}: {exc.strerror}") from exc
    try:
        ok = verify_spanner(inst, s, a.mode)
    except InstanceMismatch as exc:
        _err(str(exc))
        return EXIT_INVALID
    print(f"{'valid' if ok else 'INVALID'}: {len(s)} edges, {a.mode} journeys")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_minimize(a: argparse.Namespace) -> int:
    inst = _load(a.inp)
    if not isinstance(inst, SimpleClique):
        _err("minimize expects a simple instance")
        return EXIT_INPUT
    try:
        res = min_spanner(inst, a.max_n)
    except InstanceTooLarge as exc:
        _err(str(exc))
        return EXIT_INPUT
    n = inst.n
    print(f"minimum spanner: {res.size} edges (2n-4 = {2 * n - 4}, 2n-3 = {2 * n - 3}); "
          f"{res.explored} subsets explored")
    if a.out:
        dump_json(spanner_payload(res.witness, "oracle", n), a.out)
    return EXIT_OK


def cmd_reduce(a: argparse.Namespace) -> int:
    inst = _load(a.inp)
    if not isinstance(inst, MultiLabelClique):
        _err("reduce expects a multi-label instance")
        return EXIT_INPUT
    c, lmap = to_simple(inst)
    write_instance(c, a.out)
    dump_json(lmap.to_json(), a.map)
    print(f"wrote {a.out} and {a.map}")
    return EXIT_OK


def cmd_bench(a: argparse.Namespace) -> int:
    from .plots import plot_bench

    algos = a.algo.split(",")
    for al in algos:
        if al not in ALGORITHMS:
            _err(f"unknown algorithm {al!r}; choose from {', '.join(ALGORITHMS)}")
            return EXIT_INPUT
    rows = run_bench(algos, a.n_list, a.trials, a.seed, a.k, a.jobs)
    out = Path(a.csv)
    with out.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "seed", "algo", "edges", "bound", "valid", "millis"])
        for r in rows:
            w.writerow(r.cells(timing=not a.no_timing))
    fig = plot_bench(rows, a.fig or out.with_suffix(".png"))
    bad = [r for r in rows if r.valid is False or (r.edges is not None and r.edges > r.bound)]
    print(f"{len(rows)} rows -> {out}, figure -> {fig}; {len(bad)} invalid or over bound")
    if a.stats:
        stats = conjecture_stats(a.n_list, a.trials, a.seed, a.oracle_max_n)
        with Path(a.stats).open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(StatsRow.HEADER)
            for s in stats:
                w.writerow(s.cells())
        print(f"statistics -> {a.stats}")
    return EXIT_INVALID if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tempspan", description="Sparse temporal spanners of temporal cliques.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", required=True,
                   choices=["random", "non-pivotable", "non-dismountable", "fixture", "multi", "bipartite"])
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--m", type=int, default=1, help="gadget copies for non-dismountable")
    g.add_argument("--name", choices=FIXTURE_NAMES)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-labels", type=int, default=3)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("span", help="build a spanner")
    s.add_argument("--algo", required=True, choices=ALGORITHMS)
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--k", type=int, default=1, help="hop bound for dismount")
    s.add_argument("--report")
    s.add_argument("--dot")
    s.set_defaults(func=cmd_span)

    v = sub.add_parser("verify", help="check a spanner file against an instance")
    v.add_argument("--graph", required=True)
    v.add_argument("--spanner", required=True)
    v.add_argument("--mode", choices=[STRICT, NONSTRICT], default=STRICT)
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("minimize", help="exact minimum spanner for tiny instances")
    m.add_argument("--in", dest="inp", required=True)
    m.add_argument("--max-n", type=int, default=7)
    m.add_argument("--out")
    m.set_defaults(func=cmd_minimize)

    r = sub.add_parser("reduce", help="multi-label to simple instance")
    r.add_argument("--in", dest="inp", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--map", required=True)
    r.set_defaults(func=cmd_reduce)

    b = sub.add_parser("bench", help="random-instance benchmark, CSV plus PNG")
    b.add_argument("--algo", default="pipeline", help="comma-separated algorithms")
    b.add_argument("--n-list", type=_int_list, default=[8, 16, 32, 64, 128])
    b.add_argument("--trials", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--k", type=int, default=1)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--csv", required=True)
    b.add_argument("--fig", help="PNG path (default: next to the CSV)")
    b.add_argument("--no-timing", action="store_true", help="write millis as 0 for byte-identical output")
    b.add_argument("--stats", help="also write pivot/dismount/min-size statistics CSV")
    b.add_argument("--oracle-max-n", type=int, default=7)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        _err(str(exc))
        return EXIT_INPUT
    except TempSpanError as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
