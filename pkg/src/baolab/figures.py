"""Figure rendering for the report path.

All functions write a PNG to the given path and return the path.  The Agg
backend is forced so the renderers work headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .builder import StepRecord
from .ra import RelationAtomStructure


def composition_heatmap(ras: RelationAtomStructure, path: str) -> str:
    """Heat map of pairwise composition sizes |a ; b| over all atoms."""
    k = ras.atom_count
    grid = np.zeros((k, k), dtype=int)
    for a in range(k):
        for b in range(k):
            grid[a, b] = int(ras.compose_atoms(a, b).bit_count())
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(grid, cmap="viridis")
    ax.set_xlabel("right atom")
    ax.set_ylabel("left atom")
    ax.set_title("composition sizes")
    fig.colorbar(im, ax=ax)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def builder_growth(records: list[StepRecord], path: str) -> str:
    """Cumulative tuple count per builder step."""
    xs = [rec.step for rec in records]
    total = 0
    ys = []
    deferred_x = []
    for rec in records:
        total += sum(len(tups) for _, tups in rec.added)
        ys.append(total)
        if rec.deferred:
            deferred_x.append(rec.step)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(xs, ys, lw=1.2)
    for x in deferred_x:
        ax.axvline(x, color="0.85", lw=0.6, zorder=0)
    ax.set_xlabel("step")
    ax.set_ylabel("tuples placed")
    ax.set_title("builder growth (grey lines: deferred steps)")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def matrix_census(ras: RelationAtomStructure, matrices: list, path: str) -> str:
    """Histogram of identity-entry counts across a basic-matrix family."""
    counts = []
    for mat in matrices:
        counts.append(sum(1 for entry in mat.upper_triangle()
                          if entry == ras.identity))
    fig, ax = plt.subplots(figsize=(6, 4))
    if counts:
        top = max(counts)
        ax.hist(counts, bins=np.arange(-0.5, top + 1.5, 1.0),
                rwidth=0.9, color="#31688e")
    ax.set_xlabel("identity entries above diagonal")
    ax.set_ylabel("matrices")
    ax.set_title(f"basic matrix census ({len(matrices)} matrices)")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def game_grid(cells: list[dict], path: str) -> str:
    """Winner grid over (rounds, clique bound) cells.

    Each cell dict needs keys: rounds, clique_bound, winner.
    """
    rounds = sorted({c["rounds"] for c in cells})
    bounds = sorted({c["clique_bound"] for c in cells})
    grid = np.full((len(rounds), len(bounds)), np.nan)
    for c in cells:
        i = rounds.index(c["rounds"])
        j = bounds.index(c["clique_bound"])
        grid[i, j] = 1.0 if c["winner"] == "exists" else 0.0
    fig, ax = plt.subplots(figsize=(5, 4))
    im = ax.imshow(grid, cmap="RdYlGn", vmin=0.0, vmax=1.0)
    ax.set_xticks(range(len(bounds)), [str(b) for b in bounds])
    ax.set_yticks(range(len(rounds)), [str(r) for r in rounds])
    ax.set_xlabel("clique bound")
    ax.set_ylabel("rounds")
    ax.set_title("square game winners (green: exists)")
    fig.colorbar(im, ax=ax)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
