"""Brute-force placement verifier for small instances.

Walks every FPGA slice forward in 1 ms ticks (with a fractional tail step when
less than a millisecond of work remains), applying the branch rules literally:
admission requires the remaining slice to strictly exceed reconfiguration plus
initialization, a resumed task re-pays its initialization interval, and a task
cut at the slice boundary continues on the next FPGA. No capacity algebra is
shared with the packing engine; this is the cross-check used by tests and the
verify command, never the scheduling path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import FleetConfig, TaskSpec, VariantSelection
from .placement import (FpgaTimeline, Schedule, Segment, SegmentKind,
                        _derive_splits)

TICK_LIMIT = 1_000_000  # max fleet ticks (n_fpgas * time_slice) per verdict


class OracleCapacityError(RuntimeError):
    """The instance is too large for tick-level simulation."""


@dataclass(frozen=True)
class OracleVerdict:
    selection: VariantSelection
    workable_eq7: bool
    placeable: bool
    witness: Schedule | None  # present iff placeable


def oracle_placeable(selection: VariantSelection, tasks: list[TaskSpec],
                     config: FleetConfig) -> OracleVerdict:
    """Decide placeability by forward simulation; verdict plus witness timeline."""
    t_slr, t_cfg, n_f = config.time_slice, config.reconfig_time, config.n_fpgas
    if n_f * t_slr > TICK_LIMIT:
        raise OracleCapacityError(
            f"{n_f} FPGAs x {t_slr} ms exceeds the {TICK_LIMIT}-tick budget"
        )
    n_t = len(tasks)
    shares = selection.shares
    # screen result, recomputed from first principles
    reserve = (n_t + 1) * t_cfg
    workable = sum(shares) <= n_f * t_slr - reserve

    done = [0.0] * n_t
    k = 0
    timelines: list[FpgaTimeline] = []
    for f in range(n_f):
        t = 0.0
        segs: list[Segment] = []
        while True:
            if k == n_t:
                if t < t_slr:
                    segs.append(Segment(SegmentKind.NULL, None, t, t_slr))
                break
            ii = tasks[k].init_interval
            if t_slr - t <= t_cfg + ii:
                if t < t_slr:
                    segs.append(Segment(SegmentKind.NULL, None, t, t_slr))
                break
            resumed = done[k] > 0
            if t_cfg > 0:
                segs.append(Segment(SegmentKind.CONFIG, k, t, t + t_cfg))
                t += t_cfg
            if resumed and ii > 0:
                segs.append(Segment(SegmentKind.INIT, k, t, t + ii))
                t += ii
            exec_start = t
            while done[k] < shares[k] and t < t_slr:
                rem_share = shares[k] - done[k]
                step = min(1.0, rem_share, t_slr - t)
                t += step
                if step == rem_share:
                    done[k] = shares[k]
                else:
                    done[k] += step
            segs.append(Segment(SegmentKind.EXEC, k, exec_start, t))
            if done[k] < shares[k]:
                break  # cut at the slice boundary; resumes on the next FPGA
            k += 1
        timelines.append(FpgaTimeline(f, tuple(segs)))

    placeable = k == n_t
    witness = None
    if placeable:
        witness = Schedule(selection, tuple(timelines),
                           _derive_splits(timelines, tasks), True)
    return OracleVerdict(selection, workable, placeable, witness)
