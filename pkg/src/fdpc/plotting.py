"""Render FER/BER waterfall figures from simulation CSV files."""

from __future__ import annotations

import csv
from typing import Dict, List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def read_sim_csv(path: str) -> Tuple[Dict[str, str], List[Dict[str, float]]]:
    """Parse a sweep CSV into (header params, data rows)."""
    params: Dict[str, str] = {}
    rows: List[Dict[str, float]] = []
    with open(path) as fh:
        data_lines = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, val = line.lstrip("# ").partition("=")
                params[key] = val
            else:
                data_lines.append(line)
    reader = csv.DictReader(data_lines)
    for row in reader:
        rows.append({k: float(v) for k, v in row.items()})
    return params, rows


def plot_sweeps(csv_paths: Sequence[str], out_path: str, title: str = None) -> str:
    """Plot FER (solid) and BER (dashed) vs E_b/N_0 for each CSV; save to file."""
    fig, ax = plt.subplots(figsize=(7, 5))
    for path in csv_paths:
        params, rows = read_sim_csv(path)
        label = "FDPC({N}, {K})".format(N=params.get("N", "?"), K=params.get("K", "?"))
        if "max_iters" in params:
            label += f", {params['max_iters']} iters"
        snr = [r["ebn0_db"] for r in rows]
        fer = [r["fer"] for r in rows]
        ber = [r["ber"] for r in rows]
        (line,) = ax.semilogy(snr, fer, marker="o", label=f"{label} FER")
        if any(b > 0 for b in ber):
            ax.semilogy(snr, ber, marker="s", linestyle="--",
                        color=line.get_color(), label=f"{label} BER")
    ax.set_xlabel(r"$E_b/N_0$ (dB)")
    ax.set_ylabel("Error rate")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path
