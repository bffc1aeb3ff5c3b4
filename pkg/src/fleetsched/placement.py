"""Greedy wrap-around packing of a variant selection onto the FPGA fleet.

Tasks are placed in index order, wrapping the overflow of one FPGA onto the
next. Every placement (fresh or resumed) pays the reconfiguration time; a
resume after a split additionally re-pays the task's initialization interval,
because a share already covers the first one. Capacity too small to host the
next task's reconfiguration plus initialization is closed off as a NULL slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .enumeration import EnumerationResult
from .model import FleetConfig, TaskSpec, VariantSelection


class PlacementError(RuntimeError):
    """A schedule was requested for a selection that does not place."""


class NoWorkableCombinationError(RuntimeError):
    """The workability screen left nothing to place."""


class SegmentKind(str, Enum):
    CONFIG = "CONFIG"
    INIT = "INIT"
    EXEC = "EXEC"
    NULL = "NULL"


@dataclass(frozen=True)
class Segment:
    kind: SegmentKind
    task_index: int | None  # None for NULL
    start: float            # ms from slice start
    end: float

    @property
    def duration(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class FpgaTimeline:
    fpga_index: int         # 0-based
    segments: tuple[Segment, ...]


@dataclass(frozen=True)
class PackCursor:
    next_task: int     # index of the next task to place, n_tasks when done
    done_share: float  # ms of next_task's share already executed upstream


@dataclass(frozen=True)
class SplitDirective:
    task_index: int
    parts: tuple[tuple[int, float], ...]  # (fpga_index, data amount), exec order


@dataclass(frozen=True)
class Schedule:
    selection: VariantSelection
    timelines: tuple[FpgaTimeline, ...]
    splits: tuple[SplitDirective, ...]
    feasible: bool


def pack_one_fpga(selection: VariantSelection, tasks: list[TaskSpec],
                  config: FleetConfig,
                  cursor: PackCursor) -> tuple[list[Segment], PackCursor]:
    """Fill one FPGA's time slice from the cursor onward.

    Returns the slice's segments (contiguous from 0, zero-length ones omitted)
    and the cursor for the next FPGA. The slice closes when the remaining
    capacity cannot cover the next task's reconfiguration plus initialization,
    or when a task is cut at the slice boundary (split), or when all tasks
    are placed.
    """
    t_slr, t_cfg = config.time_slice, config.reconfig_time
    n_t = len(tasks)
    segments: list[Segment] = []
    c = t_slr
    k, done = cursor.next_task, cursor.done_share

    def emit(kind: SegmentKind, task: int | None, duration: float) -> None:
        if duration > 0:
            start = t_slr - c
            segments.append(Segment(kind, task, start, start + duration))

    while True:
        if k == n_t:
            emit(SegmentKind.NULL, None, c)
            return segments, PackCursor(n_t, 0.0)
        ii = tasks[k].init_interval
        if c <= t_cfg + ii:
            # admission guard: no room to configure and fill the pipeline
            emit(SegmentKind.NULL, None, c)
            return segments, PackCursor(k, done)
        resumed = done > 0
        rem = selection.shares[k] - done
        head = t_cfg + (ii if resumed else 0.0)
        if c - head - rem < 0:
            # task overflows the slice: run what fits, continue on the next FPGA
            exec_len = c - head
            emit(SegmentKind.CONFIG, k, t_cfg)
            c -= t_cfg
            if resumed:
                emit(SegmentKind.INIT, k, ii)
                c -= ii
            emit(SegmentKind.EXEC, k, exec_len)
            return segments, PackCursor(k, done + exec_len)
        emit(SegmentKind.CONFIG, k, t_cfg)
        c -= t_cfg
        if resumed:
            emit(SegmentKind.INIT, k, ii)
            c -= ii
        emit(SegmentKind.EXEC, k, rem)
        c -= rem
        k += 1
        done = 0.0


def _pack_fleet(selection: VariantSelection, tasks: list[TaskSpec],
                config: FleetConfig) -> tuple[list[FpgaTimeline], PackCursor]:
    timelines = []
    cursor = PackCursor(0, 0.0)
    for f in range(config.n_fpgas):
        segments, cursor = pack_one_fpga(selection, tasks, config, cursor)
        timelines.append(FpgaTimeline(f, tuple(segments)))
    return timelines, cursor


def _split_parts(data_size: float, exec_spans: list[float]) -> list[float]:
    """Divide data in proportion to per-FPGA execution time.

    All but the last part round to whole data units and the last absorbs the
    remainder, so the parts always sum to data_size exactly. Rounded-away
    parts borrow one unit from the largest so every part stays positive.
    """
    total = sum(exec_spans)
    parts = [float(round(data_size * span / total)) for span in exec_spans[:-1]]
    parts.append(data_size - sum(parts))
    if data_size >= len(parts):
        for i in range(len(parts)):
            while parts[i] < 1:
                largest = max(range(len(parts)), key=lambda j: parts[j])
                parts[largest] -= 1
                parts[i] += 1
    elif any(p <= 0 for p in parts):
        # degenerate data size; fall back to exact real-valued parts
        parts = [data_size * span / total for span in exec_spans[:-1]]
        parts.append(data_size - sum(parts))
    return parts


def _derive_splits(timelines: list[FpgaTimeline],
                   tasks: list[TaskSpec]) -> tuple[SplitDirective, ...]:
    spans: dict[int, list[tuple[int, float]]] = {}
    for tl in timelines:
        for seg in tl.segments:
            if seg.kind is SegmentKind.EXEC:
                spans.setdefault(seg.task_index, []).append(
                    (tl.fpga_index, seg.duration))
    directives = []
    for k in sorted(spans):
        if len(spans[k]) < 2:
            continue
        fpgas = [f for f, _ in spans[k]]
        amounts = _split_parts(tasks[k].data_size, [d for _, d in spans[k]])
        directives.append(SplitDirective(k, tuple(zip(fpgas, amounts))))
    return tuple(directives)


def try_place(selection: VariantSelection, tasks: list[TaskSpec],
              config: FleetConfig) -> Schedule | None:
    """Pack the selection across the fleet; None when it does not fit."""
    timelines, cursor = _pack_fleet(selection, tasks, config)
    if cursor.next_task != len(tasks):
        return None
    return Schedule(selection, tuple(timelines),
                    _derive_splits(timelines, tasks), True)


def build_schedule(selection: VariantSelection, tasks: list[TaskSpec],
                   config: FleetConfig) -> Schedule:
    """Materialize the full schedule with data-split directives.

    Identical packing to try_place; raises PlacementError on a selection
    that does not place.
    """
    schedule = try_place(selection, tasks, config)
    if schedule is None:
        raise PlacementError(
            f"selection {selection.choice} does not place on "
            f"{config.n_fpgas} FPGAs"
        )
    return schedule


def select_lowest_power(enumeration: EnumerationResult, tasks: list[TaskSpec],
                        config: FleetConfig) -> tuple[Schedule, int]:
    """Pick the lowest-power workable selection that actually places.

    Rows are scanned in ascending power order (ties broken by variant indices,
    then total share, for reproducibility). Returns the winner's schedule and
    the number of workable rows the packer rejects over the whole set. When
    nothing places, the lowest-power row's partial (infeasible) schedule is
    returned and the rejection count equals the row count.
    """
    if not enumeration.feasible:
        raise NoWorkableCombinationError("no workable combination")
    rows = sorted(enumeration.feasible,
                  key=lambda s: (s.total_power, s.choice, s.total_share))
    winner: VariantSelection | None = None
    rejected = 0
    for row in rows:
        if try_place(row, tasks, config) is None:
            rejected += 1
        elif winner is None:
            winner = row
    if winner is None:
        timelines, _ = _pack_fleet(rows[0], tasks, config)
        return Schedule(rows[0], tuple(timelines), (), False), rejected
    return build_schedule(winner, tasks, config), rejected
