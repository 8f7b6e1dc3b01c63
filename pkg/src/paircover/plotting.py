"""Figure rendering for the report commands. Always writes to a file."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .bounds import bounds_curve, worst_ratio_capacity
from .core import Assignment, CoverageReport

STYLE = {
    "font.size": 10,
    "axes.labelsize": 11,
    "axes.titlesize": 11,
    "legend.fontsize": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    # fixed metadata keeps SVG/PDF output byte-stable
    "svg.hashsalt": "paircover",
}


def _save(fig, path):
    meta = {"Date": None} if str(path).endswith((".svg", ".pdf")) else {}
    fig.savefig(path, dpi=150, bbox_inches="tight", metadata=meta or None)
    plt.close(fig)


def plot_bounds_curve(n: int, path, log: bool = True) -> None:
    """Lower and upper referee-count curves against capacity k = 2..n."""
    rows = bounds_curve(n)
    ks = [r[0] for r in rows]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(ks, [r[1] for r in rows], "-", label="lower  n(n-1)/k(k-1)")
        ax.plot(ks, [r[2] for r in rows], "--", label="upper  n(2n-k)/k²")
        kw = worst_ratio_capacity(n)
        ax.axvline(kw, color="0.6", lw=0.8, ls=":")
        ax.annotate(f"max ratio at k={kw}", (kw, ax.get_ylim()[1]), xytext=(4, -12),
                    textcoords="offset points", fontsize=8, color="0.4")
        if log:
            ax.set_yscale("log")
        ax.set_xlabel("referee capacity k")
        ax.set_ylabel("number of referees")
        ax.set_title(f"Referee bounds, n = {n}")
        ax.legend(frameon=False)
        _save(fig, path)


def plot_assignment(a: Assignment, report: CoverageReport, path) -> None:
    """Incidence grid (referees x proposals) next to the pair-multiplicity matrix."""
    n = a.n
    inc = np.zeros((len(a), n))
    for row, r in enumerate(a.referees):
        inc[row, [p - 1 for p in r.proposals]] = 1
    mult = np.zeros((n, n))
    for (i, j), c in report.multiplicity.items():
        mult[i - 1, j - 1] = mult[j - 1, i - 1] = c
    np.fill_diagonal(mult, np.nan)

    with plt.rc_context(STYLE):
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.5))
        ax1.imshow(inc, cmap="Greys", aspect="auto", interpolation="nearest")
        ax1.set_xlabel("proposal")
        ax1.set_ylabel("referee")
        ax1.set_xticks(range(n), [str(p) for p in range(1, n + 1)], fontsize=6)
        ax1.set_yticks(range(len(a)), [str(r.id) for r in a.referees], fontsize=6)
        ax1.set_title(f"{a.method}: {len(a)} referees")
        cmap = plt.get_cmap("viridis").copy()
        cmap.set_under("red")
        im = ax2.imshow(mult, cmap=cmap, vmin=0.5, interpolation="nearest")
        ax2.set_title(f"pair multiplicity ({report.covered_count}/{report.total_pairs} covered)")
        ax2.set_xlabel("proposal")
        ax2.set_ylabel("proposal")
        fig.colorbar(im, ax=ax2, shrink=0.8, label="times covered (red = 0)")
        _save(fig, path)
