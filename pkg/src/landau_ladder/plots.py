"""Figure rendering for the CLI's --plot-dir option.

Everything here draws to files through the Agg backend; nothing touches a
display.  These figures are diagnostic companions to the delimited output
on stdout, never a replacement for it: the data contract stays on stdout
and the image paths are reported on stderr by the CLI.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)
import numpy as np  # noqa: E402

from .states import LandauState, radial_value, wavefunction_value  # noqa: E402
from .velocity import CartesianGrid  # noqa: E402

__all__ = [
    "ensure_dir",
    "margin_chart",
    "radial_profile",
    "density_heatmap",
    "ladder_overlay",
]

_FLOOR = 1e-18  # log-scale floor so exactly-zero errors still draw


def ensure_dir(path) -> Path:
    out = Path(path)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _finish(fig, out_dir, name: str) -> Path:
    target = ensure_dir(out_dir) / name
    fig.savefig(target, dpi=120)
    plt.close(fig)
    return target


def margin_chart(records, suite: str, out_dir) -> Path:
    """Horizontal bars of log10(max_error / tolerance) for one suite.

    Bars left of zero passed; zero-tolerance checks are drawn against the
    floor instead of dividing by zero.
    """
    rows = [r for r in records if r.suite == suite]
    labels = []
    margins = []
    colors = []
    for i, rec in enumerate(rows):
        labels.append(f"{rec.check_name} #{i}")
        err = max(rec.max_error, _FLOOR)
        tol = max(rec.tolerance, _FLOOR)
        margins.append(math.log10(err / tol))
        if rec.status == "skipped":
            colors.append("0.6")
        elif rec.status == "pass":
            colors.append("tab:blue")
        else:
            colors.append("tab:red")
    height = max(2.5, 0.18 * len(rows) + 1.0)
    fig, ax = plt.subplots(figsize=(8.0, height))
    ax.barh(np.arange(len(rows)), margins, color=colors)
    ax.axvline(0.0, color="k", lw=1)
    ax.set_yticks(np.arange(len(rows)))
    ax.set_yticklabels(labels, fontsize=5)
    ax.set_xlabel("log10(max_error / tolerance)")
    ax.set_title(f"{suite}: {len(rows)} checks")
    fig.tight_layout()
    return _finish(fig, out_dir, f"margins_{suite}.png")


def radial_profile(state: LandauState, zetas, values, out_dir) -> Path:
    """R_{n m}(zeta) over the sampled points."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(np.asarray(zetas), np.asarray(values), lw=1.2)
    ax.axhline(0.0, color="0.8", lw=0.8)
    ax.set_xlabel("zeta")
    ax.set_ylabel("R(zeta)")
    qn = state.qn
    ax.set_title(f"radial profile n={qn.n} m={qn.m} B={state.field.B:g}")
    fig.tight_layout()
    return _finish(fig, out_dir, f"radial_n{qn.n}_m{qn.m}.png")


def density_heatmap(state: LandauState, half_extent: float, points: int, out_dir) -> Path:
    """|psi|^2 on a square grid around the origin."""
    grid = CartesianGrid(half_extent, points)
    ax_pts = grid.axis()
    x, y = np.meshgrid(ax_pts, ax_pts, indexing="ij")
    psi = wavefunction_value(state, np.hypot(x, y), np.arctan2(y, x))
    density = np.abs(psi) ** 2
    fig, ax = plt.subplots(figsize=(5.4, 4.6))
    extent = (-grid.half_extent, grid.half_extent, -grid.half_extent, grid.half_extent)
    im = ax.imshow(density.T, origin="lower", extent=extent, cmap="magma")
    fig.colorbar(im, ax=ax, label="|psi|^2")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    qn = state.qn
    ax.set_title(f"density n={qn.n} m={qn.m} B={state.field.B:g}")
    fig.tight_layout()
    return _finish(fig, out_dir, f"density_n{qn.n}_m{qn.m}.png")


def ladder_overlay(state: LandauState, direction: str, zetas, applied, reference, out_dir) -> Path:
    """Applied ladder samples against coefficient * R_target, plus their gap."""
    z = np.asarray(zetas)
    applied = np.asarray(applied)
    fig, (top, bottom) = plt.subplots(
        2, 1, figsize=(6.4, 5.6), sharex=True, height_ratios=(3, 1)
    )
    top.plot(z, applied, lw=1.2, label="operator applied")
    if reference is not None:
        ref = np.asarray(reference)
        top.plot(z, ref, lw=1.0, ls="--", label="coefficient * target")
        bottom.plot(z, np.abs(applied - ref), lw=1.0, color="tab:red")
    else:
        bottom.plot(z, np.abs(applied), lw=1.0, color="tab:red")
    top.axhline(0.0, color="0.8", lw=0.8)
    top.legend(fontsize=8)
    bottom.set_yscale("log")
    bottom.set_xlabel("zeta")
    bottom.set_ylabel("|gap|")
    qn = state.qn
    top.set_title(f"{direction} from n={qn.n} m={qn.m} B={state.field.B:g}")
    fig.tight_layout()
    return _finish(fig, out_dir, f"ladder_{direction}_n{qn.n}_m{qn.m}.png")
