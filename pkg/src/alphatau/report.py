"""Figures written next to the CSV/JSON reports."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FIGSIZE = (6.0, 4.0)
DPI = 120


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def plot_slack_histogram(report, path, title: str = "") -> Path:
    """Bar chart of ``4 * slack`` over the sweep records (0 = tight)."""
    counts = Counter(int(r.slack * 4) if Fraction(r.slack * 4).denominator == 1
                     else float(r.slack * 4) for r in report.records)
    xs = sorted(counts)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.bar([str(x) for x in xs], [counts[x] for x in xs], color="tab:blue")
    ax.set_xlabel("4 x slack")
    ax.set_ylabel("count")
    if xs and len(xs) > 20:
        for lbl in ax.get_xticklabels()[1::2]:
            lbl.set_visible(False)
    ax.set_title(title or f"{report.graphs_checked} checked, {report.equality_cases} tight")
    return _save(fig, path)


def plot_distribution(dist: dict, path, bound=None, title: str = "") -> Path:
    """Exact law of the inside-edge count, with the certified bound marked."""
    xs = sorted(dist)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.bar(xs, [float(dist[x]) for x in xs], width=0.6, color="tab:green")
    if bound is not None:
        ax.axvline(float(bound), color="tab:red", ls="--", label=f"bound {bound}")
        ax.legend()
    ax.set_xlabel("inside edges")
    ax.set_ylabel("probability")
    ax.set_title(title or "distribution of inside edges")
    return _save(fig, path)


def plot_ctau(scan, path) -> Path:
    """tau_2 against tau_1 with reference slopes 5/3 and 2."""
    fig, ax = plt.subplots(figsize=FIGSIZE)
    t1 = [r.tau1 for r in scan.table]
    t2 = [r.tau2 for r in scan.table]
    ax.scatter(t1, t2, s=14, alpha=0.6, label="graphs")
    top = max(t1, default=1)
    for slope, style in ((Fraction(5, 3), ":"), (2, "--")):
        ax.plot([0, top], [0, float(slope) * top], style, color="gray", label=f"slope {slope}")
    ax.set_xlabel("tau_1")
    ax.set_ylabel("tau_2 = |E| - alpha_1")
    if scan.min_ratio is not None:
        ax.set_title(f"min tau_2/tau_1 = {scan.min_ratio}")
    ax.legend()
    return _save(fig, path)
