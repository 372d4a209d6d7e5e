"""Figure rendering for table reports.

Each computed Betti polynomial can be rendered as a coefficient bar chart
and written next to the delimited output.  Rendering is file-only (Agg
backend); nothing here ever opens a window.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .specialize import BettiResult

_FIG_SIZE = (7.0, 4.0)


def figure_filename(result: BettiResult) -> str:
    if result.field_case == "real":
        return f"betti_real_g{result.curve.g}_b{result.curve.b}_r{result.r}.png"
    return f"betti_complex_g{result.curve.g}_r{result.r}.png"


def render_betti_figure(result: BettiResult, directory: Path) -> Path:
    """Bar chart of signed coefficients against the t-exponent."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    exponents = []
    coefficients = []
    degree = result.poly.degree("t")
    for e in range(degree + 1):
        exponents.append(e)
        coefficients.append(int(result.poly.coefficient((e,))))
    fig, ax = plt.subplots(figsize=_FIG_SIZE)
    colors = ["#1f6f9f" if c >= 0 else "#b1432e" for c in coefficients]
    ax.bar(exponents, coefficients, color=colors)
    ax.axhline(0.0, color="black", linewidth=0.8)
    if result.field_case == "real":
        title = f"g={result.curve.g}, b={result.curve.b}, r={result.r} (real)"
    else:
        title = f"g={result.curve.g}, r={result.r} (complex)"
    ax.set_title(f"Signed Betti coefficients, {title}")
    ax.set_xlabel("t exponent")
    ax.set_ylabel("coefficient")
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    path = directory / figure_filename(result)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
