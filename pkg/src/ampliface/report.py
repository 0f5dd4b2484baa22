"""Delimited and graphical report output for the CLI.

Figures are rendered headless (Agg) to files next to the CSV output:
corank distributions as bar charts, codimension audits as grouped
counts, Hasse diagrams as layered scatter-and-segment plots.
"""

import csv

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def fig_corank(coeffs_poset, coeffs_closed, n, k, path):
    xs = list(range(len(coeffs_poset)))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(xs, coeffs_poset, color="#4878cf", label="poset count")
    ax.plot(xs, coeffs_closed, "ko--", markersize=5, label="closed form")
    ax.set_xlabel("corank c")
    ax.set_ylabel("number of faces")
    ax.set_title(f"corank distribution of the face poset, n={n}, k={k}")
    ax.set_xticks(xs)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def fig_codim(rows, n, k, path):
    """rows: (label, d, c, codim_from_class)."""
    per_c = {}
    mismatches = 0
    for _, _, c, codim in rows:
        per_c[c] = per_c.get(c, 0) + 1
        if c != codim:
            mismatches += 1
    xs = sorted(per_c)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(xs, [per_c[c] for c in xs], color="#6acc65")
    ax.set_xlabel("codimension c (= class-computed codimension)" if not mismatches
                  else "codimension c (MISMATCHES PRESENT)")
    ax.set_ylabel("number of faces")
    ax.set_title(f"codimension audit, n={n}, k={k}: "
                 f"{len(rows)} faces, {mismatches} mismatches")
    ax.set_xticks(xs)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def fig_residual(rows, n, k, path):
    """rows: (label, c, abc, by_class)."""
    kinds = {"residual": 0, "empty": 0}
    for _, _, abc, _ in rows:
        kinds["residual" if abc else "empty"] += 1
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.bar(list(kinds), list(kinds.values()), color=["#d65f5f", "#b8b8b8"])
    ax.set_ylabel("strata outside the face poset")
    ax.set_title(f"residual arrangement split, n={n}, k={k}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def fig_hasse(poset, path, label=None, title="Hasse diagram"):
    """Layered drawing: one row per rank (or per longest-chain height)."""
    m = len(poset.elements)
    if poset.ranks is not None:
        levels = list(poset.ranks)
    else:
        levels = [0] * m
        order = sorted(range(m), key=lambda i: poset.down[i].bit_count())
        for i in order:
            down = poset.down[i]
            lev = 0
            while down:
                low = down & -down
                down ^= low
                lev = max(lev, levels[low.bit_length() - 1] + 1)
            levels[i] = lev
    per_level = {}
    pos = {}
    for i, lev in enumerate(levels):
        per_level.setdefault(lev, []).append(i)
    for lev, idxs in per_level.items():
        width = len(idxs)
        for j, i in enumerate(idxs):
            pos[i] = (j - (width - 1) / 2, lev)
    fig, ax = plt.subplots(figsize=(max(6, m ** 0.5), max(4, len(per_level))))
    for i, j in poset.covers():
        (x1, y1), (x2, y2) = pos[i], pos[j]
        ax.plot([x1, x2], [y1, y2], "-", color="#999999", lw=0.6, zorder=1)
    xs = [pos[i][0] for i in range(m)]
    ys = [pos[i][1] for i in range(m)]
    ax.scatter(xs, ys, s=18, color="#4878cf", zorder=2)
    if label is not None and m <= 60:
        for i in range(m):
            ax.annotate(label(poset.elements[i]), pos[i], fontsize=6,
                        textcoords="offset points", xytext=(2, 2))
    ax.set_title(title)
    ax.set_yticks(sorted(per_level))
    ax.set_xticks([])
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
