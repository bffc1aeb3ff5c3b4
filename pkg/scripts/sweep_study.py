#!/usr/bin/env python3
"""Rejection-ratio study: sweep fleet size and reconfiguration time.

Writes the sweep table as CSV and, with --plot, renders the three curves
(rejection ratio, max accepted workload, max accepted task weight) against
the number of FPGAs, one line per reconfiguration time.
"""

import argparse
from pathlib import Path

from fleetsched import load_taskset, sweep
from fleetsched.metrics import format_sweep

DATA = Path(__file__).resolve().parents[1] / "data"


def parse_args():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("input", nargs="?", default=str(DATA / "example1.json"))
    ap.add_argument("--fpgas", default="3,4,5,6")
    ap.add_argument("--cfg-times", default="2,4,6,8")
    ap.add_argument("--out", default="out/sweep.csv")
    ap.add_argument("--plot", action="store_true",
                    help="also write out/sweep.png (needs matplotlib)")
    return ap.parse_args()


def main() -> int:
    args = parse_args()
    tasks, config = load_taskset(args.input)
    n_fs = [int(x) for x in args.fpgas.split(",")]
    t_cfgs = [float(x) for x in args.cfg_times.split(",")]
    rows = sweep(tasks, config, n_fs, t_cfgs)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(format_sweep(rows))
    print(format_sweep(rows), end="")
    print(f"wrote {out}")

    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, axes = plt.subplots(1, 3, figsize=(15, 4))
        series = [("trr_percent", "task rejection ratio (%)"),
                  ("max_workload_percent", "max accepted workload (%)"),
                  ("max_avg_weight", "max accepted avg task weight")]
        for ax, (field, label) in zip(axes, series):
            for t_cfg in t_cfgs:
                pts = [(r.n_f, getattr(r, field))
                       for r in rows if r.t_cfg == t_cfg]
                ax.plot(*zip(*pts), marker="o", label=f"t_cfg={t_cfg:g} ms")
            ax.set_xlabel("FPGAs")
            ax.set_ylabel(label)
            ax.set_xticks(n_fs)
            ax.grid(alpha=0.3)
        axes[0].legend()
        fig.tight_layout()
        png = out.with_suffix(".png")
        fig.savefig(png, dpi=120)
        print(f"wrote {png}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
