"""Figure rendering for the CLI report path.

Each renderer takes the same rows the delimited output is built from and
writes one PNG next to it.  Rendering is deterministic: fixed figure sizes,
fixed dpi, Agg backend.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

__all__ = ["render_fig1", "render_fig2", "render_spectrum"]

_FIGSIZE = (6.4, 4.2)
_DPI = 150


def render_fig1(rows: Sequence[tuple[float, float]], path: str, log_x: bool) -> None:
    """Far-end potential offset against charge separation."""
    r = [row[0] for row in rows]
    v = [row[1] for row in rows]
    fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
    ax.plot(r, v, color="C0", lw=1.4)
    ax.axhline(0.0, color="k", lw=0.6)
    if log_x:
        ax.set_xscale("log")
    ax.set_xlabel("charge separation $r$")
    ax.set_ylabel(r"far-end potential $\varphi(-\infty)$")
    ax.grid(alpha=0.3, ls=":")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_fig2(rows: Sequence[tuple[float, ...]], path: str, log_x: bool) -> None:
    """The four effective-potential curves on one axis."""
    r = [row[0] for row in rows]
    fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
    ax.plot(r, [row[1] for row in rows], "C0-", lw=1.4, label="definition 1")
    ax.plot(r, [row[2] for row in rows], "C1-", lw=1.4, label="definition 2")
    ax.plot(r, [row[3] for row in rows], "k--", lw=1.0, label="coulomb")
    ax.plot(r, [row[4] for row in rows], "C2:", lw=1.6, label="single charge")
    if log_x:
        ax.set_xscale("log")
    ax.set_ylim(bottom=max(-4.0, min(row[3] for row in rows)))
    ax.set_xlabel("charge separation $r$")
    ax.set_ylabel("effective potential")
    ax.legend(frameon=False)
    ax.grid(alpha=0.3, ls=":")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_spectrum(rows: Sequence[tuple], path: str) -> None:
    """|level shift| between the two definitions, per level, against beta."""
    by_level: dict[int, list[tuple[float, float]]] = {}
    for beta, n, _e1, _e2, delta in rows:
        if delta is None:
            continue
        by_level.setdefault(n, []).append((beta, abs(delta)))
    fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
    for n in sorted(by_level):
        pts = sorted(by_level[n])
        ax.plot([p[0] for p in pts], [p[1] for p in pts], "o-", lw=1.2, label=f"level {n}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel(r"Born parameter $\beta$")
    ax.set_ylabel(r"$|E_{def1} - E_{def2}|$")
    if by_level:
        ax.legend(frameon=False)
    ax.grid(alpha=0.3, ls=":", which="both")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
