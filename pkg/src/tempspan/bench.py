"""Algorithm registry and the benchmark / statistics harness behind ``bench``."""

from __future__ import annotations

import math
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .basic import find_pivot, k4_sparsify, pivot_spanner
from .core import SimpleClique, num_edges
from .dismount import dismount_fully
from .fireworks import backward_cover, bidirectional_cover, forward_cover
from .gen import random_clique
from .oracle import min_spanner
from .pipeline import spanner_nlogn
from .reach import Spanner, verify_spanner

ALGORITHMS = ("pipeline", "fw", "bw", "bi", "dismount", "pivot", "k4")


def _pivot(c: SimpleClique, k: int) -> Spanner | None:
    cert = find_pivot(c)
    return None if cert is None else pivot_spanner(c, cert)


_RUNNERS: dict[str, Callable[[SimpleClique, int], Spanner | None]] = {
    "pipeline": lambda c, k: spanner_nlogn(c)[0],
    "fw": lambda c, k: forward_cover(c).spanner,
    "bw": lambda c, k: backward_cover(c).spanner,
    "bi": lambda c, k: bidirectional_cover(c).spanner,
    "dismount": lambda c, k: dismount_fully(c, k),
    "pivot": _pivot,
    "k4": lambda c, k: k4_sparsify(c),
}


def run_algorithm(algo: str, c: SimpleClique, k: int = 1) -> Spanner | None:
    """Spanner from ``algo`` or None when the method does not apply."""
    try:
        runner = _RUNNERS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}") from None
    return runner(c, k)


def size_bound(algo: str, n: int, k: int = 1) -> int:
    """Guaranteed edge count for ``algo`` on n vertices."""
    m = num_edges(n)
    lg = math.ceil(math.log2(n)) if n > 1 else 0
    if algo == "pipeline":
        return 4 * n * lg + 14 * n
    if algo in ("fw", "bw"):
        return 3 * m // 4 + n
    if algo == "bi":
        return n * n // 4 + 2 * n
    if algo == "dismount":
        return 2 * k * (n - 2) + 1 if n > 2 else 1
    if algo == "pivot":
        return 2 * (n - 1)
    if algo == "k4":
        return m - n // 4 if n >= 4 else m
    raise ValueError(f"unknown algorithm {algo!r}")


def trial_seed(seed: int, n: int, trial: int) -> int:
    """Instance seed for one trial; ``gen --kind random`` reproduces it."""
    return int(np.random.SeedSequence([seed, n, trial]).generate_state(1, dtype=np.uint32)[0])


@dataclass(frozen=True)
class BenchRow:
    n: int
    seed: int
    algo: str
    edges: int | None
    bound: int
    valid: bool | None
    millis: float

    def cells(self, timing: bool = True) -> list[str]:
        edges = "" if self.edges is None else str(self.edges)
        valid = "na" if self.valid is None else str(self.valid).lower()
        millis = f"{self.millis:.3f}" if timing else "0"
        return [str(self.n), str(self.seed), self.algo, edges, str(self.bound), valid, millis]


def _trial(args: tuple[str, int, int, int]) -> BenchRow:
    algo, n, seed, k = args
    c = random_clique(n, seed)
    t0 = time.perf_counter()
    s = run_algorithm(algo, c, k)
    ms = (time.perf_counter() - t0) * 1000.0
    if s is None:
        return BenchRow(n, seed, algo, None, size_bound(algo, n, k), None, ms)
    return BenchRow(n, seed, algo, len(s), size_bound(algo, n, k), verify_spanner(c, s), ms)


def run_bench(
    algos: Sequence[str], ns: Sequence[int], trials: int, seed: int, k: int = 1, jobs: int = 1
) -> list[BenchRow]:
    tasks = [(a, n, trial_seed(seed, n, t), k) for n in ns for t in range(trials) for a in algos]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_trial, tasks, chunksize=4))
    else:
        rows = [_trial(t) for t in tasks]
    order = {a: i for i, a in enumerate(algos)}
    return sorted(rows, key=lambda r: (r.n, r.seed, order[r.algo]))


@dataclass(frozen=True)
class StatsRow:
    n: int
    trials: int
    pivotable: float
    dismountable: float
    min_2n_4: int | None
    min_2n_3: int | None
    min_other: int | None

    HEADER = ("n", "trials", "pivotable", "dismountable", "min_2n-4", "min_2n-3", "min_other")

    def cells(self) -> list[str]:
        opt = lambda x: "" if x is None else str(x)
        return [
            str(self.n),
            str(self.trials),
            f"{self.pivotable:.4f}",
            f"{self.dismountable:.4f}",
            opt(self.min_2n_4),
            opt(self.min_2n_3),
            opt(self.min_other),
        ]


def conjecture_stats(ns: Sequence[int], trials: int, seed: int, oracle_max_n: int = 7) -> list[StatsRow]:
    """Fractions of pivotable and 1-hop fully dismountable random cliques, and
    the distribution of exact minimum spanner sizes where the oracle runs."""
    rows = []
    for n in ns:
        piv = dis = 0
        hist = {"lo": 0, "hi": 0, "other": 0}
        for t in range(trials):
            c = random_clique(n, trial_seed(seed, n, t))
            piv += find_pivot(c) is not None
            dis += dismount_fully(c, 1) is not None
            if n <= oracle_max_n:
                size = min_spanner(c, oracle_max_n).size
                key = {2 * n - 4: "lo", 2 * n - 3: "hi"}.get(size, "other")
                hist[key] += 1
        exact = n <= oracle_max_n
        rows.append(
            StatsRow(
                n,
                trials,
                piv / trials,
                dis / trials,
                hist["lo"] if exact else None,
                hist["hi"] if exact else None,
                hist["other"] if exact else None,
            )
        )
    return rows
