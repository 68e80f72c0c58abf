"""Static figures for survey reports (matplotlib, file output only)."""
from __future__ import annotations

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_mean_histogram(mean_histogram: list[dict], path: str,
                        title: str = "") -> None:
    """Bar chart of per-network mean |mu3| values, e.g. from
    ``distribution_report()["mean_histogram"]``, written to ``path``
    (format from the extension: .svg, .png, ...)."""
    means = [Fraction(row["mean"]) for row in mean_histogram]
    counts = [row["count"] for row in mean_histogram]
    labels = [str(m) for m in means]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(len(means)), counts, color="#4878b0", edgecolor="black")
    ax.set_xticks(range(len(means)))
    ax.set_xticklabels(labels)
    ax.set_xlabel("mean |mu3| over unlinked signatures")
    ax.set_ylabel("number of sorting networks")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
