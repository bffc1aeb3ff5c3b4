"""Command-line front end: schedule | sweep | verify.

Exit codes: 0 success, 1 input error, 2 negative result (no feasible
combination, or verifier disagreement), 3 capacity refusal (combination limit
or oracle tick budget).
"""

from __future__ import annotations

import argparse
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from .enumeration import (DEFAULT_COMBINATION_LIMIT, CombinationLimitError,
                          enumerate_selections)
from .metrics import build_report, format_sweep, sweep
from .model import FleetConfig, InputError, TaskSpec, load_taskset
from .oracle import OracleCapacityError, oracle_placeable
from .placement import select_lowest_power, try_place
from .render import gantt_svg, gantt_text
from .report import (RunReport, manifest_documents, schedule_document,
                     write_outputs)

VERIFY_TICK_BUDGET = 50_000_000  # total ticks across all verified rows


def _parse_int_list(text: str) -> list[int]:
    """Accept '3-6', '3,4,6', or '4'."""
    if "-" in text and "," not in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(",")]


def _parse_float_list(text: str) -> list[float]:
    return [float(p) for p in text.split(",")]


def _load(args) -> tuple[list[TaskSpec], FleetConfig]:
    tasks, config = load_taskset(args.input)
    n_f = args.fpgas if args.fpgas is not None else config.n_fpgas
    t_slr = args.slice_ms if args.slice_ms is not None else config.time_slice
    t_cfg = (args.cfg_time_ms if args.cfg_time_ms is not None
             else config.reconfig_time)
    if n_f < 1:
        raise InputError(f"--fpgas: must be >= 1, got {n_f}")
    if t_slr <= 0:
        raise InputError(f"--slice-ms: must be > 0, got {t_slr}")
    if not 0 <= t_cfg < t_slr:
        raise InputError(f"--cfg-time-ms: must be in [0, slice), got {t_cfg}")
    return tasks, FleetConfig(n_f, t_slr, t_cfg)


def cmd_schedule(args) -> int:
    started = time.perf_counter()
    try:
        tasks, config = _load(args)
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1

    sink = None
    try:
        if args.dump_tnfs:
            sink = open(args.dump_tnfs, "w")
        try:
            enum = enumerate_selections(tasks, config, limit=args.limit,
                                        tnfs_sink=sink)
        finally:
            if sink:
                sink.close()
    except CombinationLimitError as exc:
        print(f"combination limit: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1

    print(f"tasks {len(tasks)} | FPGAs {config.n_fpgas} | "
          f"slice {config.time_slice:g} ms | reconfig {config.reconfig_time:g} ms")
    print(f"combinations {enum.total_combinations} | "
          f"workable {len(enum.feasible)} | unworkable {enum.infeasible_count} "
          f"(budget {enum.capacity_budget:g} ms)")
    if not enum.feasible:
        print("no feasible combination: every combination fails the "
              "workability screen")
        return 2

    schedule, rejected = select_lowest_power(enum, tasks, config)
    print(f"placement accepted {len(enum.feasible) - rejected} / "
          f"{len(enum.feasible)} (rejected {rejected})")
    if not schedule.feasible:
        print("no feasible combination: no workable combination places on "
              f"{config.n_fpgas} FPGAs")
        return 2

    metrics = build_report(enum, schedule, rejected, tasks, config)
    sel = schedule.selection
    labels = ", ".join(
        f"{tasks[i].variants[j].cu_count}CU-{tasks[i].name}"
        for i, j in enumerate(sel.choice))
    print(f"selected: {labels}")
    print("shares ms: " + ", ".join(f"{s:g}" for s in sel.shares)
          + f" (total {sel.total_share:g})")
    print(f"total power {sel.total_power:.2f} mW")
    print(f"TRR {metrics.trr_percent:.2f} % | "
          f"workload {metrics.system_workload_percent:.2f} % | "
          f"avg weight {metrics.avg_task_weight:.4f} | "
          f"nc_max {metrics.nc_max:.3f} | null {metrics.total_null_ms:g} ms")

    elapsed = time.perf_counter() - started
    if args.gantt and not args.out:
        print("note: --gantt needs --out to have somewhere to write",
              file=sys.stderr)
    if args.out:
        report = RunReport(schedule, metrics, enum, rejected, elapsed)
        stamp = (None if args.reproducible
                 else datetime.now(timezone.utc).isoformat())
        doc = schedule_document(report, tasks, config, generated_at=stamp)
        manifests = manifest_documents(schedule, tasks, config)
        txt = gantt_text(schedule, tasks, config) if "text" in args.gantt else None
        svg = gantt_svg(schedule, tasks, config) if "vector" in args.gantt else None
        try:
            written = write_outputs(args.out, doc, manifests, txt, svg)
        except OSError as exc:
            print(f"cannot write outputs: {exc}", file=sys.stderr)
            return 1
        print(f"wrote {written[0]} and {len(manifests)} manifests")
    print(f"elapsed {elapsed * 1000:.1f} ms", file=sys.stderr)
    return 0


def cmd_sweep(args) -> int:
    try:
        tasks, config = _load(args)
        n_fs = (_parse_int_list(args.fpga_range) if args.fpga_range
                else [config.n_fpgas])
        t_cfgs = (_parse_float_list(args.cfg_times) if args.cfg_times
                  else [config.reconfig_time])
        if not n_fs or not t_cfgs:
            raise InputError("sweep ranges must be non-empty")
    except (InputError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    try:
        rows = sweep(tasks, config, n_fs, t_cfgs, limit=args.limit)
    except CombinationLimitError as exc:
        print(f"combination limit: {exc}", file=sys.stderr)
        return 3
    text = format_sweep(rows)
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"cannot write outputs: {exc}", file=sys.stderr)
            return 1
    sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    try:
        tasks, config = _load(args)
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    try:
        enum = enumerate_selections(tasks, config, limit=args.limit)
    except CombinationLimitError as exc:
        print(f"combination limit: {exc}", file=sys.stderr)
        return 3
    ticks = len(enum.feasible) * config.n_fpgas * config.time_slice
    if ticks > VERIFY_TICK_BUDGET:
        print(f"refusing: {len(enum.feasible)} rows x "
              f"{config.n_fpgas * config.time_slice:g} ticks exceeds the "
              f"verify budget of {VERIFY_TICK_BUDGET}", file=sys.stderr)
        return 3

    disagreements = []
    for row in enum.feasible:
        engine = try_place(row, tasks, config) is not None
        try:
            reference = oracle_placeable(row, tasks, config).placeable
        except OracleCapacityError as exc:
            print(f"refusing: {exc}", file=sys.stderr)
            return 3
        if engine != reference:
            disagreements.append((row.choice, engine, reference))
    print(f"verified {len(enum.feasible)} workable rows: "
          f"{len(enum.feasible) - len(disagreements)} agree, "
          f"{len(disagreements)} disagree")
    for choice, engine, reference in disagreements[:10]:
        print(f"  disagreement at {choice}: engine={engine} oracle={reference}")
    return 0 if not disagreements else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fleetsched",
        description="Power-aware scheduling of periodic hardware tasks "
                    "on an FPGA fleet crossed with per-task variant selection.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="task-set JSON file")
        p.add_argument("--fpgas", type=int, default=None,
                       help="override the file's FPGA count")
        p.add_argument("--slice-ms", type=float, default=None,
                       help="override the file's time slice")
        p.add_argument("--cfg-time-ms", type=float, default=None,
                       help="override the file's reconfiguration time")
        p.add_argument("--limit", type=int, default=DEFAULT_COMBINATION_LIMIT,
                       help="refuse instances with more variant combinations")

    p = sub.add_parser("schedule", help="select and place the lowest-power "
                                        "variant combination")
    common(p)
    p.add_argument("--out", default=None,
                   help="directory for schedule.json, manifests/, gantt files")
    p.add_argument("--gantt", action="append", choices=["text", "vector"],
                   default=[], help="also render a gantt (repeatable)")
    p.add_argument("--dump-tnfs", default=None,
                   help="stream unworkable rows to this file")
    p.add_argument("--reproducible", action=argparse.BooleanOptionalAction,
                   default=True,
                   help="omit timestamps so outputs are byte-identical")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("sweep", help="re-run the pipeline over fleet-size and "
                                     "reconfig-time ranges")
    common(p)
    p.add_argument("--fpga-range", default=None,
                   help="fleet sizes, e.g. 3-6 or 3,4,6")
    p.add_argument("--cfg-times", default=None,
                   help="reconfiguration times, e.g. 2,4,6,8")
    p.add_argument("--out", default=None, help="also write the table here")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="cross-check the packer against the "
                                      "tick-level oracle on every workable row")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
