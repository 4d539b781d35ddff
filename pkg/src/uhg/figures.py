"""Matplotlib report figures: check tallies and the GF(p) plane."""
from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .census import square_class  # noqa: E402
from .duality import form_int  # noqa: E402

_META = {"Software": None}  # keep output independent of the matplotlib version


def tally_figure(reports: Sequence, path: str) -> None:
    """Stacked horizontal bars of passes, skips and failures per theorem."""
    names = [r.theorem for r in reports]
    passes = [r.passes for r in reports]
    skips = [r.skips for r in reports]
    fails = [r.n_failures for r in reports]
    h = max(3.0, 0.22 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(8, h))
    y = range(len(names))
    ax.barh(y, passes, color="#3a7d44", label="pass")
    ax.barh(y, skips, left=passes, color="#c9a227", label="skip")
    ax.barh(y, fails, left=[p + s for p, s in zip(passes, skips)], color="#b33", label="fail")
    ax.set_yticks(list(y))
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("trials")
    field = reports[0].field if reports else ""
    ax.set_title(f"theorem checks over {field}")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_META)
    plt.close(fig)


def census_figure(p: int, path: str) -> None:
    """Affine points ``[x:y:1]`` of GF(p) coloured by the square class of ``<a,a>``.

    Null points are drawn in blue, following the colour used for the null circle.
    """
    colours = {"zero": "#1f4fd6", "square": "#999999", "nonsquare": "#e0a040"}
    groups = {k: ([], []) for k in colours}
    for x in range(p):
        for y in range(p):
            xs, ys = groups[square_class(form_int((x, y, 1), (x, y, 1)), p)]
            xs.append(x)
            ys.append(y)
    fig, ax = plt.subplots(figsize=(6, 6))
    size = max(2.0, 4000.0 / (p * p))
    for k in ("square", "nonsquare", "zero"):
        xs, ys = groups[k]
        ax.scatter(xs, ys, s=size * (3 if k == "zero" else 1), c=colours[k], label=f"<a,a> {k}", marker="s")
    ax.set_aspect("equal")
    ax.set_xlim(-0.5, p - 0.5)
    ax.set_ylim(-0.5, p - 0.5)
    ax.set_title(f"affine plane over GF({p})")
    ax.legend(loc="upper center", bbox_to_anchor=(0.5, -0.06), ncol=3, fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_META)
    plt.close(fig)
