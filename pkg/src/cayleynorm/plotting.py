"""Matplotlib figures written next to the JSON reports."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

NORMAL_COLOUR = "#3b6ea8"
EXCEPTION_COLOUR = "#c0392b"


def _circle_positions(n):
    return {
        v: (math.cos(2 * math.pi * (v - 1) / n + math.pi / 2), math.sin(2 * math.pi * (v - 1) / n + math.pi / 2))
        for v in range(1, n + 1)
    }


def draw_transposition_graph(ax, n, edges, title=None):
    pos = _circle_positions(n)
    for i, j in edges:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.35", lw=1.2, zorder=1)
    xs, ys = zip(*(pos[v] for v in range(1, n + 1)))
    ax.scatter(xs, ys, s=260, color="white", edgecolor="black", zorder=2)
    for v, (x, y) in pos.items():
        ax.text(x, y, str(v), ha="center", va="center", fontsize=9, zorder=3)
    ax.set_aspect("equal")
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=9)


def plot_analysis(report: dict, path) -> None:
    """G(T) on the left, observed vs. normal-case group order on the right."""
    fig, (left, right) = plt.subplots(1, 2, figsize=(8, 3.6))
    draw_transposition_graph(left, report["n"], report["edges"], title=f"G(T), {report['classification']}")
    labels = ["|Aut(Γ)|", "n!·|Aut(G)|"]
    values = [report["aut_order"], report["expected_normal_order"]]
    colour = NORMAL_COLOUR if report["is_normal"] else EXCEPTION_COLOUR
    right.bar(labels, values, color=[colour, "0.6"])
    right.set_yscale("log")
    for x, v in enumerate(values):
        right.text(x, v, f"{v:,}", ha="center", va="bottom", fontsize=8)
    right.set_title("normal" if report["is_normal"] else "not normal", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_sweep(summary: dict, path) -> None:
    rows = summary["classes"]
    fig, ax = plt.subplots(figsize=(max(6, 0.35 * len(rows)), 4))
    x = range(len(rows))
    actual = [r["aut_order"] for r in rows]
    expected = [r["expected_normal_order"] for r in rows]
    colours = [NORMAL_COLOUR if r["is_normal"] else EXCEPTION_COLOUR for r in rows]
    ax.bar(x, actual, color=colours, width=0.7, label="|Aut(Γ)|")
    ax.scatter(x, expected, marker="_", s=160, color="black", zorder=3, label="n!·|Aut(G(T))|")
    ax.set_yscale("log")
    ax.set_xticks(list(x))
    ax.set_xticklabels([r["classification"][:5] for r in rows], rotation=90, fontsize=7)
    ax.set_xlabel("connected transposition graph (by canonical form)")
    ax.set_ylabel("group order")
    ax.set_title(f"n = {summary['n']}: {summary['classes_normal']}/{summary['classes_total']} normal", fontsize=10)
    ax.legend(fontsize=8, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
