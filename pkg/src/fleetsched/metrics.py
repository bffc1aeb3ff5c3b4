"""Evaluation quantities: rejection ratio, workload, task weight, switch bound.

"Rejected" counts both workability-screen failures and packer failures, so the
rejection ratio reflects the full pipeline. Sweep rows additionally carry the
screen-only rejection count so the two stages can be separated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import (DEFAULT_COMBINATION_LIMIT, EnumerationResult,
                          enumerate_selections)
from .model import FleetConfig, TaskSpec, VariantSelection, execution_time
from .placement import Schedule, SegmentKind, try_place


@dataclass(frozen=True)
class MetricsReport:
    total_combinations: int
    rejected_eq7: int           # failed the workability screen
    rejected_placement: int     # passed the screen, failed packing
    trr_percent: float
    system_workload_percent: float
    avg_task_weight: float
    nc_max: float
    total_power_mw: float
    total_null_ms: float


def task_rejection_ratio(rejected: int, total: int) -> float:
    """Percent of combinations rejected."""
    if total <= 0:
        raise ValueError("total must be > 0")
    if not 0 <= rejected <= total:
        raise ValueError(f"rejected {rejected} outside [0, {total}]")
    return 100.0 * rejected / total


def system_workload(selection: VariantSelection, config: FleetConfig) -> float:
    """Percent of fleet capacity the selection's shares consume."""
    return 100.0 * selection.total_share / (config.time_slice * config.n_fpgas)


def avg_task_weight(tasks: list[TaskSpec], selection: VariantSelection) -> float:
    """Mean of execution_time / period over the selected variants."""
    if not tasks:
        raise ValueError("tasks must be non-empty")
    return sum(execution_time(t, j) / t.period
               for t, j in zip(tasks, selection.choice)) / len(tasks)


def nc_max(tasks: list[TaskSpec], selection: VariantSelection,
           config: FleetConfig) -> float:
    """Upper bound on context switches the leftover fleet capacity can fund."""
    if config.reconfig_time <= 0:
        raise ValueError("reconfig_time must be > 0 (bound is unbounded at 0)")
    leftover = config.n_fpgas * config.time_slice - selection.total_share
    return leftover / (config.n_fpgas * config.reconfig_time)


def total_null_ms(schedule: Schedule, config: FleetConfig) -> float:
    """Fleet capacity not spent configuring, initializing, or executing."""
    used = sum(seg.duration
               for tl in schedule.timelines for seg in tl.segments
               if seg.kind is not SegmentKind.NULL)
    return config.n_fpgas * config.time_slice - used


def build_report(enumeration: EnumerationResult, schedule: Schedule,
                 rejected_placement: int, tasks: list[TaskSpec],
                 config: FleetConfig) -> MetricsReport:
    rejected = enumeration.infeasible_count + rejected_placement
    return MetricsReport(
        total_combinations=enumeration.total_combinations,
        rejected_eq7=enumeration.infeasible_count,
        rejected_placement=rejected_placement,
        trr_percent=task_rejection_ratio(rejected, enumeration.total_combinations),
        system_workload_percent=system_workload(schedule.selection, config),
        avg_task_weight=avg_task_weight(tasks, schedule.selection),
        nc_max=nc_max(tasks, schedule.selection, config),
        total_power_mw=schedule.selection.total_power,
        total_null_ms=total_null_ms(schedule, config),
    )


@dataclass(frozen=True)
class SweepRow:
    n_f: int
    t_cfg: float
    total: int
    rejected_eq7: int
    rejected_placement: int
    trr_percent: float
    max_workload_percent: float   # over combinations accepted end to end
    max_avg_weight: float


def sweep(tasks: list[TaskSpec], config: FleetConfig,
          n_fpgas_values: list[int], reconfig_values: list[float],
          limit: int = DEFAULT_COMBINATION_LIMIT) -> list[SweepRow]:
    """Re-run the pipeline over the cross product of fleet sizes and reconfig times.

    Acceptance-threshold columns report the maximum workload and task weight
    among combinations that pass both the screen and the packer (0 when none do).
    """
    rows = []
    for n_f in n_fpgas_values:
        for t_cfg in reconfig_values:
            cell = FleetConfig(n_f, config.time_slice, t_cfg)
            enum = enumerate_selections(tasks, cell, limit=limit)
            rejected_placement = 0
            max_wl = 0.0
            max_wt = 0.0
            for row in enum.feasible:
                if try_place(row, tasks, cell) is None:
                    rejected_placement += 1
                else:
                    max_wl = max(max_wl, system_workload(row, cell))
                    max_wt = max(max_wt, avg_task_weight(tasks, row))
            rejected = enum.infeasible_count + rejected_placement
            rows.append(SweepRow(
                n_f, t_cfg, enum.total_combinations, enum.infeasible_count,
                rejected_placement,
                task_rejection_ratio(rejected, enum.total_combinations),
                max_wl, max_wt,
            ))
    return rows


SWEEP_COLUMNS = ("n_f", "t_cfg", "total", "rejected_eq7", "rejected_placement",
                 "trr_percent", "max_workload_percent", "max_avg_weight")


def format_sweep(rows: list[SweepRow]) -> str:
    """Render sweep rows as comma-delimited text with a header line."""
    lines = [",".join(SWEEP_COLUMNS)]
    for r in rows:
        lines.append(",".join([
            str(r.n_f), f"{r.t_cfg:g}", str(r.total), str(r.rejected_eq7),
            str(r.rejected_placement), f"{r.trr_percent:.4f}",
            f"{r.max_workload_percent:.4f}", f"{r.max_avg_weight:.6f}",
        ]))
    return "\n".join(lines) + "\n"
