"""Figure rendering for scan reports."""

from __future__ import annotations


def render_scan_plot(rows: list[dict], path: str) -> None:
    """Scatter of the JR numbers found by a scan, saved to `path`.

    `rows` carry the scan columns; one marker per triple, JR against b,
    colored by the odd radical t.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    if rows:
        bs = [row["b"] for row in rows]
        jrs = [row["jr"] for row in rows]
        ts = [row["t"] for row in rows]
        sc = ax.scatter(bs, jrs, c=ts, s=18, cmap="viridis", alpha=0.8)
        fig.colorbar(sc, ax=ax, label="odd radical t of b")
    ax.set_xlabel("b")
    ax.set_ylabel("JR number")
    ax.set_title("Julia Robinson numbers of good triples")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
