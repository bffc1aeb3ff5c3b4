"""Exhaustive search over variant combinations with the fleet workability screen.

Every combination of per-task variants is visited in lexicographic order over
variant indices. A combination is workable when its total share fits the fleet
capacity after reserving reconfiguration time: one load per task plus one more
for the split resume the packer may introduce. Workable rows are kept (with
shares and power); the rest are only counted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TextIO

from .model import FleetConfig, TaskSpec, VariantSelection

DEFAULT_COMBINATION_LIMIT = 10_000_000


class CombinationLimitError(RuntimeError):
    """The variant-combination product exceeds the configured cap."""


@dataclass(frozen=True)
class EnumerationResult:
    total_combinations: int
    feasible: tuple[VariantSelection, ...]   # workable rows, lexicographic order
    infeasible_count: int
    capacity_budget: float                   # ms


def capacity_budget(config: FleetConfig, n_tasks: int) -> float:
    """Fleet share capacity: n_fpgas * time_slice minus (n_tasks + 1) reconfigurations.

    The reserve charges one configuration per task plus one extra for a resumed
    split, which is what makes the screen's accept counts line up with the
    packer on the reference workloads.
    """
    return config.n_fpgas * config.time_slice - (n_tasks + 1) * config.reconfig_time


def check_workability(selection: VariantSelection, config: FleetConfig,
                      n_tasks: int) -> bool:
    """True iff the selection's total share fits the capacity budget (inclusive)."""
    return selection.total_share <= capacity_budget(config, n_tasks)


def enumerate_selections(tasks: list[TaskSpec], config: FleetConfig,
                         limit: int = DEFAULT_COMBINATION_LIMIT,
                         tnfs_sink: TextIO | None = None) -> EnumerationResult:
    """Visit all variant combinations; partition by workability.

    Unworkable rows are counted, not stored; pass tnfs_sink to stream them out
    (one tab-separated line per row) for debugging.
    """
    if not tasks:
        raise ValueError("tasks must be non-empty")
    total = 1
    for t in tasks:
        total *= t.n_variants
    if total > limit:
        raise CombinationLimitError(
            f"{total} variant combinations exceed the limit of {limit}"
        )

    # (share, power) per task per variant, hoisted out of the product loop
    t_slr = config.time_slice
    table = [
        [(t.data_size / v.throughput / t.period * t_slr, v.power) for v in t.variants]
        for t in tasks
    ]
    budget = capacity_budget(config, len(tasks))

    feasible: list[VariantSelection] = []
    infeasible = 0
    for choice in itertools.product(*(range(t.n_variants) for t in tasks)):
        shares = tuple(table[i][j][0] for i, j in enumerate(choice))
        total_share = sum(shares)
        power = sum(table[i][j][1] for i, j in enumerate(choice))
        if total_share <= budget:
            feasible.append(VariantSelection(choice, shares, total_share, power))
        else:
            infeasible += 1
            if tnfs_sink is not None:
                cells = ",".join(str(j) for j in choice)
                tnfs_sink.write(f"{cells}\t{total_share!r}\t{power!r}\n")
    return EnumerationResult(total, tuple(feasible), infeasible, budget)
