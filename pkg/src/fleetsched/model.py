"""Domain types for periodic hardware tasks, input parsing, and share arithmetic.

A task is a periodic job with a completion period, an initialization interval
(pipeline-fill latency), an input data size, and one or more pre-synthesized
hardware variants. Each variant trades compute-unit count for throughput and
power. All durations are milliseconds; data units are opaque (the math only
requires data_size and throughput to share the same unit).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any


class InputError(ValueError):
    """A task-set document is malformed or violates a model invariant."""


@dataclass(frozen=True)
class VariantSpec:
    """One hardware build of a task: cu_count parallel compute units."""

    cu_count: int
    throughput: float  # data units per ms
    power: float       # mW


@dataclass(frozen=True)
class TaskSpec:
    """A periodic task with its ordered variant ladder (throughput ascending)."""

    name: str
    period: float          # ms
    init_interval: float   # ms
    data_size: float       # data units
    variants: tuple[VariantSpec, ...]

    @property
    def n_variants(self) -> int:
        return len(self.variants)


@dataclass(frozen=True)
class FleetConfig:
    """The scheduling environment: fleet size, time slice, reconfiguration cost."""

    n_fpgas: int
    time_slice: float     # ms
    reconfig_time: float  # ms


@dataclass(frozen=True)
class VariantSelection:
    """One variant index per task, with the derived shares and power total."""

    choice: tuple[int, ...]
    shares: tuple[float, ...]  # ms, one per task
    total_share: float
    total_power: float


def execution_time(task: TaskSpec, variant_index: int) -> float:
    """Time for the variant to process the task's full data: data_size / throughput."""
    if not 0 <= variant_index < len(task.variants):
        raise IndexError(
            f"task '{task.name}' has {len(task.variants)} variants, "
            f"index {variant_index} is out of range"
        )
    return task.data_size / task.variants[variant_index].throughput


def share(task: TaskSpec, variant_index: int, time_slice: float) -> float:
    """Slice allotment (execution_time / period) * time_slice.

    The share includes the task's first initialization interval; only a resume
    after a split re-pays it.
    """
    return execution_time(task, variant_index) / task.period * time_slice


def make_selection(tasks: list[TaskSpec], choice: tuple[int, ...],
                   time_slice: float) -> VariantSelection:
    """Build a VariantSelection with shares and power for the given choice."""
    shares = tuple(share(t, j, time_slice) for t, j in zip(tasks, choice))
    power = sum(t.variants[j].power for t, j in zip(tasks, choice))
    return VariantSelection(tuple(choice), shares, sum(shares), power)


def _require(value: Any, types: type | tuple, path: str) -> Any:
    if isinstance(value, bool) or not isinstance(value, types):
        raise InputError(f"{path}: expected {types}, got {value!r}")
    return value


def _number(obj: dict, key: str, path: str, *, positive: bool = False,
            nonnegative: bool = False) -> float:
    if key not in obj:
        raise InputError(f"{path}.{key}: missing")
    val = _require(obj[key], (int, float), f"{path}.{key}")
    if positive and val <= 0:
        raise InputError(f"{path}.{key}: must be > 0, got {val}")
    if nonnegative and val < 0:
        raise InputError(f"{path}.{key}: must be >= 0, got {val}")
    return float(val)


def _parse_variant(obj: Any, path: str) -> VariantSpec:
    _require(obj, dict, path)
    if "cu_count" not in obj:
        raise InputError(f"{path}.cu_count: missing")
    cu = _require(obj["cu_count"], int, f"{path}.cu_count")
    if cu < 1:
        raise InputError(f"{path}.cu_count: must be >= 1, got {cu}")
    th = _number(obj, "throughput_per_ms", path, positive=True)
    pw = _number(obj, "power_mw", path, positive=True)
    return VariantSpec(cu, th, pw)


def _parse_task(obj: Any, path: str) -> TaskSpec:
    _require(obj, dict, path)
    if "name" not in obj:
        raise InputError(f"{path}.name: missing")
    name = _require(obj["name"], str, f"{path}.name")
    try:
        period = _number(obj, "period_ms", path, positive=True)
        init = _number(obj, "init_interval_ms", path, nonnegative=True)
        data = _number(obj, "data_size", path, positive=True)
        raw = obj.get("variants")
        if not isinstance(raw, list) or not raw:
            raise InputError(f"{path}.variants: must be a non-empty list")
        variants = tuple(_parse_variant(v, f"{path}.variants[{i}]")
                         for i, v in enumerate(raw))
        for i in range(1, len(variants)):
            if variants[i].throughput <= variants[i - 1].throughput:
                raise InputError(
                    f"{path}.variants[{i}].throughput_per_ms: variant "
                    f"throughputs must strictly increase "
                    f"({variants[i - 1].throughput} -> {variants[i].throughput})"
                )
    except InputError as exc:
        raise InputError(f"task '{name}': {exc}") from None
    return TaskSpec(name, period, init, data, variants)


def parse_taskset(document: str | dict) -> tuple[list[TaskSpec], FleetConfig]:
    """Parse and validate a task-set document (JSON text or already-decoded dict).

    Tasks are returned in document order; that order is significant and is the
    packing order downstream.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise InputError(f"not valid JSON: {exc}") from exc
    _require(document, dict, "document")

    if "config" not in document:
        raise InputError("config: missing")
    cfg = _require(document["config"], dict, "config")
    if "n_fpgas" not in cfg:
        raise InputError("config.n_fpgas: missing")
    n_fpgas = _require(cfg["n_fpgas"], int, "config.n_fpgas")
    if n_fpgas < 1:
        raise InputError(f"config.n_fpgas: must be >= 1, got {n_fpgas}")
    t_slr = _number(cfg, "time_slice_ms", "config", positive=True)
    t_cfg = _number(cfg, "reconfig_time_ms", "config", nonnegative=True)
    if t_cfg >= t_slr:
        raise InputError(
            f"config.reconfig_time_ms: must be < time_slice_ms ({t_cfg} >= {t_slr})"
        )
    config = FleetConfig(n_fpgas, t_slr, t_cfg)

    raw_tasks = document.get("tasks")
    if not isinstance(raw_tasks, list) or not raw_tasks:
        raise InputError("tasks: must be a non-empty list")
    tasks = [_parse_task(t, f"tasks[{i}]") for i, t in enumerate(raw_tasks)]
    return tasks, config


def serialize_taskset(tasks: list[TaskSpec], config: FleetConfig) -> dict:
    """Inverse of parse_taskset: emit the self-describing document structure."""
    return {
        "config": {
            "n_fpgas": config.n_fpgas,
            "time_slice_ms": config.time_slice,
            "reconfig_time_ms": config.reconfig_time,
        },
        "tasks": [
            {
                "name": t.name,
                "period_ms": t.period,
                "init_interval_ms": t.init_interval,
                "data_size": t.data_size,
                "variants": [
                    {"cu_count": v.cu_count, "throughput_per_ms": v.throughput,
                     "power_mw": v.power}
                    for v in t.variants
                ],
            }
            for t in tasks
        ],
    }


def load_taskset(path: str | Path) -> tuple[list[TaskSpec], FleetConfig]:
    return parse_taskset(Path(path).read_text())
