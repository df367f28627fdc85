"""Figure rendering for the experiment runners.

Every runner writes its delimited data first and then, unless asked not to,
drops a PNG of the same data next to it.  Rendering is best-effort eye candy:
validators only ever look at the CSV numbers.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_FIG_WIDTH = 6.4

plt.rcParams.update(
    {
        "font.size": 9,
        "font.family": "serif",
        "figure.figsize": [_FIG_WIDTH, _FIG_WIDTH * _GOLDEN],
        "axes.grid": True,
        "grid.alpha": 0.3,
        "savefig.dpi": 150,
        "savefig.bbox": "tight",
    }
)


def _finish(fig, ax, path, xlabel, ylabel, title):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    if ax.get_legend_handles_labels()[0]:
        ax.legend(fontsize=7, ncol=2)
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def snapshot_gallery(path, x, frames, xlabel="x", ylabel="u(t, x)", title=None, xlim=None):
    """Overlay of field profiles; ``frames`` is a list of (label, values)."""
    fig, ax = plt.subplots()
    for label, u in frames:
        ax.plot(x, u, lw=0.9, label=label)
    if xlim:
        ax.set_xlim(*xlim)
    return _finish(fig, ax, path, xlabel, ylabel, title)


def line_plot(path, curves, xlabel, ylabel, title=None, logx=False, logy=False):
    """Generic overlay; ``curves`` is a list of (label, x, y)."""
    fig, ax = plt.subplots()
    for label, xs, ys in curves:
        ax.plot(xs, ys, lw=0.9, label=label)
    if logx:
        ax.set_xscale("log")
    if logy:
        ax.set_yscale("log")
    return _finish(fig, ax, path, xlabel, ylabel, title)
