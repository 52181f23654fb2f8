"""Matplotlib rendering: the box-layout schematic and tabulation figures.

Figures are written to files next to the delimited output.  Rendering
is kept deterministic: the Agg backend, a fixed SVG hash salt and no
date metadata, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

matplotlib.rcParams["svg.hashsalt"] = "twobridge"

_STATUS_COLORS = {
    "QUASIPOSITIVE": "#2a9d8f",
    "NON_QUASIPOSITIVE": "#e76f51",
    "LINK_CONDITION_HOLDS_UNDETERMINED": "#e9c46a",
}


def _save(fig, path: str) -> None:
    meta = {"Date": None} if str(path).endswith(".svg") else None
    fig.savefig(path, metadata=meta)
    plt.close(fig)


def save_box_layout(reg_coeffs: list[int], p: int, q: int, path: str) -> None:
    """Schematic of the standard diagram: one labelled box per twist region.

    Odd boxes sit on the lower strand pair, even boxes on the upper
    pair; the label is the signed half-twist count, positive on odd
    boxes under the package's handedness convention.
    """
    n = len(reg_coeffs)
    fig, ax = plt.subplots(figsize=(1.6 + 1.2 * n, 3.2))
    y_low, y_high = 0.0, 1.2
    box_w, box_h = 0.84, 0.62
    xs = [1.2 * i for i in range(n)]
    # three guide strands; the boxes sit across adjacent pairs
    for level in (y_low - box_h / 2 - 0.28, (y_low + y_high) / 2, y_high + box_h / 2 + 0.28):
        ax.plot([-0.8, xs[-1] + box_w + 0.8], [level, level], color="0.6", lw=1.2, zorder=1)
    for i, c in enumerate(reg_coeffs):
        x = xs[i]
        y = y_low if i % 2 == 0 else y_high
        ax.add_patch(
            Rectangle(
                (x, y - box_h / 2),
                box_w,
                box_h,
                facecolor="white",
                edgecolor="black",
                lw=1.4,
                zorder=3,
            )
        )
        label = f"+{c}" if i % 2 == 0 else f"-{c}"
        ax.text(
            x + box_w / 2,
            y,
            label,
            ha="center",
            va="center",
            fontsize=13,
            zorder=4,
        )
    ax.set_xlim(-1.0, xs[-1] + box_w + 1.0)
    ax.set_ylim(y_low - box_h - 0.6, y_high + box_h + 0.6)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"twist-region layout of K({p},{q}), boxes = half twists")
    _save(fig, path)


def save_status_figure(rows: list[dict], path: str) -> None:
    """Stacked per-p counts of classification statuses."""
    ps = sorted({row["p"] for row in rows})
    counts = {status: [0] * len(ps) for status in _STATUS_COLORS}
    pos = {p: i for i, p in enumerate(ps)}
    for row in rows:
        counts[row["status"]][pos[row["p"]]] += 1
    fig, ax = plt.subplots(figsize=(8, 4.2))
    bottom = [0] * len(ps)
    for status, color in _STATUS_COLORS.items():
        ax.bar(ps, counts[status], bottom=bottom, color=color, width=0.85, label=status)
        bottom = [a + b for a, b in zip(bottom, counts[status])]
    ax.set_xlabel("p")
    ax.set_ylabel("canonical representatives")
    ax.set_title("classification counts by p")
    ax.legend(fontsize=8, loc="upper left")
    fig.tight_layout()
    _save(fig, path)


def save_braid_index_figure(rows: list[dict], path: str) -> None:
    """Scatter of the braid index against p, coloured by status."""
    fig, ax = plt.subplots(figsize=(8, 4.2))
    for status, color in _STATUS_COLORS.items():
        xs = [row["p"] for row in rows if row["status"] == status]
        ys = [row["b"] for row in rows if row["status"] == status]
        if xs:
            ax.scatter(xs, ys, s=12, color=color, label=status, alpha=0.7, linewidths=0)
    ax.set_xlabel("p")
    ax.set_ylabel("braid index")
    ax.set_title("braid index growth")
    ax.legend(fontsize=8, loc="upper left")
    fig.tight_layout()
    _save(fig, path)
