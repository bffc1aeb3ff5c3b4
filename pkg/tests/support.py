"""Shared test helpers: small random instances and schedule invariant checks.

Instances are built so every share is an exact integer number of ms (data
sizes are multiples of 12 and throughputs divide 12, with period == slice),
which keeps engine and oracle arithmetic exact.
"""

from __future__ import annotations

import math
from collections import defaultdict

from hypothesis import strategies as st

from fleetsched import (FleetConfig, Schedule, SegmentKind, TaskSpec,
                        VariantSpec)

THROUGHPUTS = [1, 2, 3, 4, 6]


def random_instance(rng) -> tuple[list[TaskSpec], FleetConfig]:
    n_t = rng.randint(1, 4)
    t_slr = rng.choice([12, 24, 36, 48, 60])
    t_cfg = rng.randint(0, 6)
    n_f = rng.randint(1, 3)
    tasks = []
    for i in range(n_t):
        nv = rng.randint(1, 3)
        ths = sorted(rng.sample(THROUGHPUTS, nv))
        td = 12 * rng.randint(1, 8)
        ii = rng.randint(0, 8)
        variants = tuple(
            VariantSpec(j + 1, float(th), float(rng.randint(1, 10)))
            for j, th in enumerate(ths))
        tasks.append(TaskSpec(f"J{i + 1}", float(t_slr), float(ii),
                              float(td), variants))
    return tasks, FleetConfig(n_f, float(t_slr), float(t_cfg))


@st.composite
def instances(draw):
    n_t = draw(st.integers(1, 4))
    t_slr = draw(st.sampled_from([12, 24, 36, 48, 60]))
    t_cfg = draw(st.integers(0, 6))
    n_f = draw(st.integers(1, 3))
    tasks = []
    for i in range(n_t):
        ths = sorted(draw(st.sets(st.sampled_from(THROUGHPUTS),
                                  min_size=1, max_size=3)))
        td = 12 * draw(st.integers(1, 8))
        ii = draw(st.integers(0, 8))
        variants = tuple(
            VariantSpec(j + 1, float(th), float(draw(st.integers(1, 10))))
            for j, th in enumerate(ths))
        tasks.append(TaskSpec(f"J{i + 1}", float(t_slr), float(ii),
                              float(td), variants))
    return tasks, FleetConfig(n_f, float(t_slr), float(t_cfg))


def check_schedule_invariants(schedule: Schedule, tasks: list[TaskSpec],
                              config: FleetConfig) -> None:
    """Assert tiling, config-precedes-exec, share conservation, split sums."""
    t_slr, t_cfg = config.time_slice, config.reconfig_time
    assert len(schedule.timelines) == config.n_fpgas

    exec_total: dict[int, float] = defaultdict(float)
    exec_fpgas: dict[int, list[int]] = defaultdict(list)
    init_count: dict[int, int] = defaultdict(int)
    exec_order: list[int] = []

    for tl in schedule.timelines:
        pos = 0.0
        kinds = [s.kind for s in tl.segments]
        assert kinds.count(SegmentKind.NULL) <= 1
        if SegmentKind.NULL in kinds:
            assert kinds[-1] is SegmentKind.NULL
        for i, seg in enumerate(tl.segments):
            assert seg.end > seg.start
            assert math.isclose(seg.start, pos, abs_tol=1e-9)
            pos = seg.end
            if seg.kind is SegmentKind.CONFIG:
                assert math.isclose(seg.duration, t_cfg, abs_tol=1e-9)
            elif seg.kind is SegmentKind.INIT:
                assert math.isclose(seg.duration,
                                    tasks[seg.task_index].init_interval,
                                    abs_tol=1e-9)
                init_count[seg.task_index] += 1
                # an INIT follows its CONFIG (when one exists) and precedes EXEC
                if t_cfg > 0:
                    assert tl.segments[i - 1].kind is SegmentKind.CONFIG
                    assert tl.segments[i - 1].task_index == seg.task_index
                assert tl.segments[i + 1].kind is SegmentKind.EXEC
            elif seg.kind is SegmentKind.EXEC:
                if t_cfg > 0:
                    prev = tl.segments[i - 1]
                    if prev.kind is SegmentKind.INIT:
                        prev = tl.segments[i - 2]
                    assert prev.kind is SegmentKind.CONFIG
                    assert prev.task_index == seg.task_index
                exec_total[seg.task_index] += seg.duration
                exec_fpgas[seg.task_index].append(tl.fpga_index)
                exec_order.append(seg.task_index)
        assert pos <= t_slr + 1e-9

    # wrap-around order: task executions never go backwards
    assert exec_order == sorted(exec_order)

    if not schedule.feasible:
        return
    for tl in schedule.timelines:
        assert tl.segments and math.isclose(tl.segments[-1].end, t_slr,
                                            abs_tol=1e-9)
    for k in range(len(tasks)):
        assert math.isclose(exec_total[k], schedule.selection.shares[k],
                            abs_tol=1e-9)
    split_tasks = {sp.task_index for sp in schedule.splits}
    assert split_tasks == {k for k, fs in exec_fpgas.items() if len(fs) > 1}
    for sp in schedule.splits:
        amounts = [amt for _, amt in sp.parts]
        assert all(a > 0 for a in amounts)
        assert math.isclose(sum(amounts), tasks[sp.task_index].data_size,
                            abs_tol=1e-9)
        assert [f for f, _ in sp.parts] == exec_fpgas[sp.task_index]
