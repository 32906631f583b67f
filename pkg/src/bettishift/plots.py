"""Figure rendering for reports: Betti diagrams and campaign summaries.

Figures are written to files next to the delimited output; the Agg backend
keeps this headless-safe.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .betti import BettiTable, max_shifts


def save_betti_diagram(table: BettiTable, path: str) -> None:
    """Heatmap in the standard diagram layout: columns i, rows j - i."""
    p = table.projective_dimension()
    strands = sorted({j - i for (i, j) in table.entries})
    lo, hi = min(strands), max(strands)
    grid = np.zeros((hi - lo + 1, p + 1))
    for (i, j), v in table.entries.items():
        grid[j - i - lo, i] = v

    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * (p + 1), 1.2 + 0.6 * grid.shape[0]))
    im = ax.imshow(grid, cmap="Blues", aspect="equal")
    for (i, j), v in table.entries.items():
        ax.text(i, j - i - lo, str(v), ha="center", va="center", fontsize=9)
    ax.set_xticks(range(p + 1))
    ax.set_yticks(range(grid.shape[0]))
    ax.set_yticklabels(range(lo, hi + 1))
    ax.set_xlabel("homological degree i")
    ax.set_ylabel("strand j - i")
    shifts = max_shifts(table)
    ax.set_title(f"Betti diagram over {table.field.render()}, "
                 f"p = {shifts.p}, t = {list(shifts.t)}", fontsize=10)
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_campaign_summary(report, path: str) -> None:
    """Two panels: subadditivity slack histogram and shift-vector spread."""
    slacks = []
    projdims = []
    for row in report.rows:
        projdims.append(row.p)
        t = row.t
        for a in range(row.p + 1):
            for b in range(a, row.p + 1 - a):
                slacks.append(t[a] + t[b] - t[a + b])

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    if slacks:
        ax1.hist(slacks, bins=range(min(slacks), max(slacks) + 2),
                 color="steelblue", edgecolor="black", align="left")
    ax1.axvline(0, color="red", linestyle="--", linewidth=1)
    ax1.set_xlabel("subadditivity slack  t_a + t_b - t_{a+b}")
    ax1.set_ylabel("count of (a, b) cases")
    ax1.set_title("slack across all trials")

    if projdims:
        ax2.hist(projdims, bins=range(min(projdims), max(projdims) + 2),
                 color="darkseagreen", edgecolor="black", align="left")
    ax2.set_xlabel("projective dimension")
    ax2.set_ylabel("trial rows")
    ax2.set_title("projective dimension spread")

    fig.suptitle(f"fuzz campaign seed={report.config.seed}, "
                 f"trials={report.config.trials}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
