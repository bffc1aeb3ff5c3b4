import pytest
from hypothesis import given, settings

from fleetsched import (FleetConfig, NoWorkableCombinationError, PackCursor,
                        PlacementError, SegmentKind, TaskSpec, VariantSpec,
                        build_schedule, enumerate_selections, make_selection,
                        pack_one_fpga, select_lowest_power, try_place)
from support import check_schedule_invariants, instances

WINNER1 = (0, 0, 1, 2, 1, 1)  # shares [48, 36, 24, 32, 24, 24]


def kinds_and_times(segments):
    return [(s.kind, s.task_index, s.start, s.end) for s in segments]


class TestPackOneFpga:
    def test_f2_splits_t3(self, example1):
        tasks, config = example1
        sel = make_selection(tasks, WINNER1, config.time_slice)
        segments, cursor = pack_one_fpga(sel, tasks, config, PackCursor(1, 0.0))
        assert kinds_and_times(segments) == [
            (SegmentKind.CONFIG, 1, 0.0, 6.0),
            (SegmentKind.EXEC, 1, 6.0, 42.0),
            (SegmentKind.CONFIG, 2, 42.0, 48.0),
            (SegmentKind.EXEC, 2, 48.0, 60.0),
        ]
        assert cursor == PackCursor(2, 12.0)

    def test_f3_resumes_t3_then_places_t4(self, example1):
        tasks, config = example1
        sel = make_selection(tasks, WINNER1, config.time_slice)
        segments, cursor = pack_one_fpga(sel, tasks, config, PackCursor(2, 12.0))
        assert kinds_and_times(segments) == [
            (SegmentKind.CONFIG, 2, 0.0, 6.0),
            (SegmentKind.INIT, 2, 6.0, 8.0),
            (SegmentKind.EXEC, 2, 8.0, 20.0),
            (SegmentKind.CONFIG, 3, 20.0, 26.0),
            (SegmentKind.EXEC, 3, 26.0, 58.0),
            (SegmentKind.NULL, None, 58.0, 60.0),
        ]
        assert cursor == PackCursor(4, 0.0)

    def test_large_init_interval_closes_fpga(self, example2):
        tasks, config = example2  # T3's init interval raised to 12 ms
        sel = make_selection(tasks, WINNER1, config.time_slice)
        segments, cursor = pack_one_fpga(sel, tasks, config, PackCursor(1, 0.0))
        assert kinds_and_times(segments)[-1] == (SegmentKind.NULL, None, 42.0, 60.0)
        assert cursor == PackCursor(2, 0.0)


class TestTryPlace:
    def test_example1_winner_matches_reference_layout(self, example1):
        tasks, config = example1
        sel = make_selection(tasks, WINNER1, config.time_slice)
        schedule = try_place(sel, tasks, config)
        assert schedule is not None and schedule.feasible
        f1, f2, f3, f4 = schedule.timelines
        assert kinds_and_times(f1.segments) == [
            (SegmentKind.CONFIG, 0, 0.0, 6.0),
            (SegmentKind.EXEC, 0, 6.0, 54.0),
            (SegmentKind.NULL, None, 54.0, 60.0),
        ]
        # F2 ends with 12 ms of T3; F3 was checked segment by segment above
        assert kinds_and_times(f2.segments)[-1] == (SegmentKind.EXEC, 2, 48.0, 60.0)
        # F4: T5 then T6, exactly filling the slice
        assert kinds_and_times(f4.segments) == [
            (SegmentKind.CONFIG, 4, 0.0, 6.0),
            (SegmentKind.EXEC, 4, 6.0, 30.0),
            (SegmentKind.CONFIG, 5, 30.0, 36.0),
            (SegmentKind.EXEC, 5, 36.0, 60.0),
        ]
        check_schedule_invariants(schedule, tasks, config)

    def test_example2_winner_combination_is_unplaceable(self, example2):
        tasks, config = example2
        sel = make_selection(tasks, WINNER1, config.time_slice)
        assert try_place(sel, tasks, config) is None

    def test_exact_fit_single_task(self):
        tasks = [TaskSpec("A", 60.0, 1.0, 54.0, (VariantSpec(1, 1.0, 2.0),))]
        config = FleetConfig(1, 60.0, 6.0)
        sel = make_selection(tasks, (0,), config.time_slice)
        assert sel.shares == (54.0,)  # share + reconfig == slice
        schedule = try_place(sel, tasks, config)
        assert schedule is not None
        assert all(s.kind is not SegmentKind.NULL
                   for tl in schedule.timelines for s in tl.segments)

    def test_unused_fpgas_are_null(self):
        tasks = [TaskSpec("A", 60.0, 1.0, 10.0, (VariantSpec(1, 1.0, 2.0),))]
        config = FleetConfig(3, 60.0, 6.0)
        sel = make_selection(tasks, (0,), config.time_slice)
        schedule = try_place(sel, tasks, config)
        for tl in schedule.timelines[1:]:
            assert kinds_and_times(tl.segments) == [
                (SegmentKind.NULL, None, 0.0, 60.0)]


class TestSelectLowestPower:
    def test_example1(self, example1):
        tasks, config = example1
        enum = enumerate_selections(tasks, config)
        schedule, rejected = select_lowest_power(enum, tasks, config)
        assert schedule.feasible
        assert schedule.selection.shares == (48, 36, 24, 32, 24, 24)
        assert schedule.selection.total_power == pytest.approx(31.5)
        # the reference reports 156 rejections; the repaid-init-on-resume rule
        # (which the reference layout itself requires) admits 10 more rows
        assert rejected == 146

    def test_example3(self, example3):
        tasks, config = example3
        enum = enumerate_selections(tasks, config)
        schedule, rejected = select_lowest_power(enum, tasks, config)
        assert rejected == 0
        assert schedule.selection.total_power == pytest.approx(19.74)
        for got, want in zip(schedule.selection.shares, (540, 440, 119)):
            assert abs(got - want) <= 1.0

    def test_single_placeable_row(self):
        tasks = [TaskSpec("A", 60.0, 1.0, 20.0, (VariantSpec(1, 1.0, 2.0),))]
        config = FleetConfig(1, 60.0, 6.0)
        enum = enumerate_selections(tasks, config)
        schedule, rejected = select_lowest_power(enum, tasks, config)
        assert schedule.feasible and rejected == 0
        assert schedule.selection.choice == (0,)

    def test_empty_tfs_raises(self):
        tasks = [TaskSpec("A", 60.0, 1.0, 59.0, (VariantSpec(1, 1.0, 2.0),))]
        config = FleetConfig(1, 60.0, 6.0)  # budget 48 < share 59
        enum = enumerate_selections(tasks, config)
        assert not enum.feasible
        with pytest.raises(NoWorkableCombinationError):
            select_lowest_power(enum, tasks, config)

    def test_workable_but_unplaceable_reports_infeasible(self):
        # passes the screen, but every resume re-pays the 53 ms init interval,
        # so only ~1 ms of the remaining share lands per slice after the first
        tasks = [TaskSpec("A", 60.0, 53.0, 100.0, (VariantSpec(1, 1.0, 2.0),))]
        config = FleetConfig(3, 60.0, 6.0)  # budget 168 >= share 100
        enum = enumerate_selections(tasks, config)
        assert len(enum.feasible) == 1
        schedule, rejected = select_lowest_power(enum, tasks, config)
        assert not schedule.feasible
        assert rejected == 1
        assert schedule.splits == ()


class TestBuildSchedule:
    def test_t3_split_into_equal_parts(self, example1):
        tasks, config = example1
        sel = make_selection(tasks, WINNER1, config.time_slice)
        schedule = build_schedule(sel, tasks, config)
        (split,) = schedule.splits
        assert split.task_index == 2
        assert split.parts == ((1, 12.0), (2, 12.0))
        assert sum(a for _, a in split.parts) == tasks[2].data_size == 24.0

    def test_unsplit_tasks_have_no_directive(self, example1):
        tasks, config = example1
        sel = make_selection(tasks, WINNER1, config.time_slice)
        schedule = build_schedule(sel, tasks, config)
        assert {sp.task_index for sp in schedule.splits} == {2}

    def test_uneven_split_ratio(self):
        # slice 24, reconfig 6: 18 ms of the share runs first, 6 ms resumes
        tasks = [TaskSpec("A", 24.0, 0.0, 24.0, (VariantSpec(1, 1.0, 2.0),))]
        config = FleetConfig(2, 24.0, 6.0)
        sel = make_selection(tasks, (0,), config.time_slice)
        schedule = build_schedule(sel, tasks, config)
        (split,) = schedule.splits
        assert split.parts == ((0, 18.0), (1, 6.0))

    def test_raises_on_unplaceable(self, example2):
        tasks, config = example2
        sel = make_selection(tasks, WINNER1, config.time_slice)
        with pytest.raises(PlacementError):
            build_schedule(sel, tasks, config)


@given(instances())
@settings(max_examples=150)
def test_placed_schedules_satisfy_invariants(instance):
    tasks, config = instance
    enum = enumerate_selections(tasks, config)
    for row in enum.feasible:
        schedule = try_place(row, tasks, config)
        if schedule is not None:
            check_schedule_invariants(schedule, tasks, config)


@given(instances())
@settings(max_examples=100)
def test_winner_has_minimum_power_among_placeable(instance):
    tasks, config = instance
    enum = enumerate_selections(tasks, config)
    if not enum.feasible:
        return
    schedule, rejected = select_lowest_power(enum, tasks, config)
    placeable = [row for row in enum.feasible
                 if try_place(row, tasks, config) is not None]
    assert rejected == len(enum.feasible) - len(placeable)
    if placeable:
        assert schedule.feasible
        assert schedule.selection.total_power <= min(
            row.total_power for row in placeable)
    else:
        assert not schedule.feasible
