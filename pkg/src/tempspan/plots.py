"""Figure for benchmark results: spanner size per vertex against n."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .bench import BenchRow

STYLE = {
    "figure.figsize": (6.0, 4.0),
    "figure.dpi": 120,
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.bbox": "tight",
}


def plot_bench(rows: Sequence[BenchRow], path: str | Path) -> Path:
    """Median edges/n per algorithm (bars span min to max) and each
    algorithm's guaranteed bound as a dashed line."""
    by_algo: dict[str, dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
    bounds: dict[str, dict[int, int]] = defaultdict(dict)
    for r in rows:
        bounds[r.algo][r.n] = r.bound
        if r.edges is not None:
            by_algo[r.algo][r.n].append(r.edges)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for i, algo in enumerate(sorted(bounds)):
            color = f"C{i}"
            ns = sorted(by_algo[algo])
            if ns:
                med = np.array([np.median(by_algo[algo][n]) / n for n in ns])
                lo = np.array([min(by_algo[algo][n]) / n for n in ns])
                hi = np.array([max(by_algo[algo][n]) / n for n in ns])
                ax.errorbar(ns, med, yerr=np.vstack([med - lo, hi - med]), marker="o", ms=4,
                            capsize=3, color=color, label=algo)
            bn = sorted(bounds[algo])
            ax.plot(bn, [bounds[algo][n] / n for n in bn], ls="--", lw=1, color=color,
                    label=f"{algo} bound")
        ax.set_xscale("log", base=2)
        ax.set_yscale("log")
        ax.set_xlabel("n (vertices)")
        ax.set_ylabel("spanner edges / n")
        ax.legend(frameon=False, fontsize=7, loc="upper left", bbox_to_anchor=(1.01, 1.0))
        out = Path(path)
        fig.savefig(out, metadata={"Software": None})  # no version stamp: stable bytes
        plt.close(fig)
    return out
