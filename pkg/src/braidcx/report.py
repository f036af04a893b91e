"""Corpus report: a TSV table plus PNG figures written next to it."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .complex import read_complex  # noqa: E402
from .errors import GuardFailed  # noqa: E402
from .verdicts import crosscheck  # noqa: E402

COLUMNS = ["name", "fingerprint", "dim", "n", "circle", "surface", "plane", "symmetric_subgroup",
           "pipeline_h1", "pipeline_rank", "pipeline_torsion", "oracle_h1", "oracle_rank", "concordant"]


def report_rows(paths, n: int = 2, oracle: bool = True) -> list[dict]:
    rows = []
    for path in sorted(Path(p) for p in paths):
        X = read_complex(path)
        try:
            rep = crosscheck(X, n, oracle=oracle)
        except GuardFailed as exc:
            rows.append({"name": path.stem, "fingerprint": X.fingerprint, "dim": X.dim, "n": n,
                         "pipeline_h1": f"rejected: {exc}", "concordant": ""})
            continue
        v = rep.verdict.summary()
        h = rep.pipeline.value
        rows.append({
            "name": path.stem,
            "fingerprint": X.fingerprint,
            "dim": X.dim,
            "n": n,
            **v,
            "pipeline_h1": str(h),
            "pipeline_rank": h.free_rank,
            "pipeline_torsion": ",".join(map(str, h.torsion)),
            "oracle_h1": str(rep.oracle) if rep.oracle is not None else "",
            "oracle_rank": rep.oracle.free_rank if rep.oracle is not None else "",
            "concordant": "yes" if rep.concordant else "no",
        })
    return rows


def write_tsv(rows, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, COLUMNS, delimiter="\t", restval="", extrasaction="ignore")
        w.writeheader()
        w.writerows(rows)


def plot_ranks(rows, path: Path) -> None:
    """Free rank of H1 per complex: pipeline bars, oracle markers where available."""
    rows = [r for r in rows if r.get("pipeline_rank", "") != ""]
    names = [r["name"] for r in rows]
    x = range(len(rows))
    fig, ax = plt.subplots(figsize=(max(6, 0.35 * len(rows)), 4))
    colors = ["tab:red" if r["pipeline_torsion"] else "tab:blue" for r in rows]
    ax.bar(x, [r["pipeline_rank"] for r in rows], color=colors, alpha=0.75, label="pipeline")
    ox = [i for i, r in enumerate(rows) if r["oracle_rank"] != ""]
    ax.scatter(ox, [rows[i]["oracle_rank"] for i in ox], marker="_", s=200, color="k",
               zorder=3, label="oracle")
    ax.set_xticks(list(x))
    ax.set_xticklabels(names, rotation=70, ha="right", fontsize=8)
    ax.set_ylabel("free rank of H1")
    ax.set_title(f"H1 of braid groups, n = {rows[0]['n']}" if rows else "H1 of braid groups")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_verdicts(rows, path: Path) -> None:
    """Plane verdict against torsion in H1 (each dot is one complex)."""
    rows = [r for r in rows if r.get("pipeline_rank", "") != ""]
    fig, ax = plt.subplots(figsize=(4.5, 4))
    counts = {}
    for r in rows:
        key = (r["plane"] == "yes", bool(r["pipeline_torsion"]))
        counts[key] = counts.get(key, 0) + 1
    for (planar, torsion), c in counts.items():
        ax.scatter([int(planar)], [int(torsion)], s=120 * c, alpha=0.6,
                   color="tab:green" if planar != torsion else "tab:red")
        ax.annotate(str(c), (int(planar), int(torsion)), ha="center", va="center")
    ax.set_xticks([0, 1])
    ax.set_xticklabels(["not planar", "planar"])
    ax.set_yticks([0, 1])
    ax.set_yticklabels(["torsion-free", "torsion"])
    ax.set_xlim(-0.6, 1.6)
    ax.set_ylim(-0.6, 1.6)
    ax.set_title("plane verdict vs torsion")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(paths, outdir, n: int = 2, oracle: bool = True) -> dict:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    rows = report_rows(paths, n, oracle)
    files = {"tsv": outdir / "report.tsv", "ranks": outdir / "ranks.png",
             "verdicts": outdir / "verdicts.png"}
    write_tsv(rows, files["tsv"])
    plot_ranks(rows, files["ranks"])
    plot_verdicts(rows, files["verdicts"])
    return {"rows": rows, "files": {k: str(v) for k, v in files.items()}}
