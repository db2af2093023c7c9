"""Render sweep reports as figures next to their CSV output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_LABELS = {
    "error3_alg1": "triangular scheme",
    "error3_alg2": "product-sum evaluator",
    "error3_oracle": "oracle",
}


def render_error_curves(result, path, title=None):
    """Log-scale error curves for a figure sweep; writes an image file.

    ``result`` is an ``experiments.SweepResult``; each error column becomes
    one series over the evaluation grid.
    """
    zs = [row[0] for row in result.rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    for idx, name in enumerate(result.columns, start=1):
        # exact zeros cannot sit on a log axis; clamp for display only
        vals = [max(row[idx], 1e-18) for row in result.rows]
        ax.semilogy(zs, vals, lw=1.2, label=_LABELS.get(name, name))
    ax.set_xlabel("evaluation point z")
    ax.set_ylabel("normalized error")
    if title:
        ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
