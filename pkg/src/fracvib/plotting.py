"""Single-panel SVG rendering of a sweep table (needs matplotlib)."""

from __future__ import annotations

from collections import defaultdict


def write_svg(header, rows, path, title=""):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "fracvib"

    # figure tables carry a leading curve column; plain sweeps plot every value column
    series = defaultdict(lambda: ([], []))
    if header[0] == "curve":
        xname, yname = header[1], header[2]
        for curve, x, y, _ in rows:
            if y is not None:
                series[curve][0].append(x)
                series[curve][1].append(y)
    else:
        xname = header[0]
        value_cols = [i for i, h in enumerate(header) if i > 0 and h != "status"]
        yname = ", ".join(header[i] for i in value_cols)
        for row in rows:
            for i in value_cols:
                if isinstance(row[i], float):
                    series[header[i]][0].append(row[0])
                    series[header[i]][1].append(row[i])

    fig, ax = plt.subplots(figsize=(6, 4))
    for label, (xs, ys) in series.items():
        ax.plot(xs, ys, label=label, linewidth=1.2)
    ax.set_xlabel(xname)
    ax.set_ylabel(yname)
    if title:
        ax.set_title(title)
    if len(series) > 1:
        ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
