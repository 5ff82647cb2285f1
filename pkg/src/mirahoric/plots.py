"""Figure rendering for reports (matplotlib, file output only).

Figures are a visual companion to the exact JSON/CSV output; all numbers
in the serialized reports stay exact strings.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def spectral_figure(report, path: str) -> None:
    """Jordan-block diagram of U^(1) plus the F/L dimension summary."""
    jordan = report.jordan.get(1, {})
    labels = []
    blocks = []
    for mu, parts in sorted(jordan.items(), key=lambda kv: str(kv[0])):
        labels.append(str(mu))
        blocks.append(parts if parts else [0])

    fig, (ax, ax2) = plt.subplots(
        1, 2, figsize=(8, 0.8 + 0.6 * max(1, len(labels))), width_ratios=[3, 1]
    )
    for row, parts in enumerate(blocks):
        left = 0
        for size in parts:
            ax.barh(row, size, left=left, height=0.6, edgecolor="black", color="#6699cc")
            if size:
                ax.text(left + size / 2, row, str(size), ha="center", va="center", fontsize=9)
            left += size + 0.15
    ax.set_yticks(range(len(labels)), labels)
    ax.set_xlabel("Jordan block sizes")
    ax.set_ylabel("eigenvalue of U(1)")
    ax.set_title(f"n={report.n}, p={report.p}, r={report.r} (dim {report.dim})")

    names = ["dim", "dim F_r", "dim L_r", "stab r"]
    vals = [report.dim, report.dim_f, report.dim_l if report.dim_l is not None else 0, report.stabilization_r]
    ax2.bar(names, vals, color="#99bb88")
    ax2.set_title("summary")
    ax2.tick_params(axis="x", rotation=45)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def verify_figure(results, path: str) -> None:
    """Pass/fail strip per suite check."""
    fig, axes = plt.subplots(
        len(results), 1, figsize=(8, 1.0 * len(results) + 1), squeeze=False
    )
    for ax, res in zip(axes[:, 0], results):
        status = [1 if c.passed else 0 for c in res.checks]
        ax.imshow([status], aspect="auto", cmap="RdYlGn", vmin=0, vmax=1)
        ax.set_yticks([0], [res.suite])
        ax.set_xticks([])
        ax.set_xlabel(f"{sum(status)}/{len(status)} checks pass ({res.seconds:.1f}s)", fontsize=8)
    fig.suptitle("verification suites")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
