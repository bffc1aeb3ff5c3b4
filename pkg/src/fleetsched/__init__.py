"""Power-aware scheduling of periodic hardware tasks on an FPGA fleet."""

from .enumeration import (CombinationLimitError, EnumerationResult,
                          capacity_budget, check_workability,
                          enumerate_selections)
from .metrics import (MetricsReport, SweepRow, avg_task_weight, build_report,
                      nc_max, sweep, system_workload, task_rejection_ratio,
                      total_null_ms)
from .model import (FleetConfig, InputError, TaskSpec, VariantSelection,
                    VariantSpec, execution_time, load_taskset, make_selection,
                    parse_taskset, serialize_taskset, share)
from .oracle import OracleCapacityError, OracleVerdict, oracle_placeable
from .placement import (FpgaTimeline, NoWorkableCombinationError, PackCursor,
                        PlacementError, Schedule, Segment, SegmentKind,
                        SplitDirective, build_schedule, pack_one_fpga,
                        select_lowest_power, try_place)
from .report import (RunReport, load_schedule, manifest_documents,
                     schedule_document, write_outputs)

__all__ = [
    "CombinationLimitError", "EnumerationResult", "FleetConfig",
    "FpgaTimeline", "InputError", "MetricsReport",
    "NoWorkableCombinationError", "OracleCapacityError", "OracleVerdict",
    "PackCursor", "PlacementError", "RunReport", "Schedule", "Segment",
    "SegmentKind", "SplitDirective", "SweepRow", "TaskSpec",
    "VariantSelection", "VariantSpec", "avg_task_weight", "build_report",
    "build_schedule", "capacity_budget", "check_workability",
    "enumerate_selections", "execution_time", "load_schedule", "load_taskset",
    "make_selection", "manifest_documents", "nc_max", "oracle_placeable",
    "pack_one_fpga", "parse_taskset", "schedule_document",
    "select_lowest_power", "serialize_taskset", "share", "sweep",
    "system_workload", "task_rejection_ratio", "total_null_ms", "try_place",
    "write_outputs",
]
