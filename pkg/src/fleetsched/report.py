"""Schedule documents and per-FPGA deployment manifests.

The schedule document serializes losslessly: reloading it reproduces the exact
Schedule object, float for float. Manifests model the per-FPGA deployment
script: which hardware image to load, when, and which slice of the input data
to feed it. FPGA positions are 1-based in all emitted files.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

from .enumeration import EnumerationResult
from .metrics import MetricsReport
from .model import FleetConfig, TaskSpec, VariantSelection
from .placement import (FpgaTimeline, Schedule, Segment, SegmentKind,
                        SplitDirective)


@dataclass(frozen=True)
class RunReport:
    schedule: Schedule
    metrics: MetricsReport
    enumeration: EnumerationResult
    rejected_placement: int
    elapsed_seconds: float


def _segment_json(seg: Segment, tasks: list[TaskSpec]) -> dict:
    return {
        "kind": seg.kind.value,
        "task_index": seg.task_index,
        "task": None if seg.task_index is None else tasks[seg.task_index].name,
        "start_ms": seg.start,
        "end_ms": seg.end,
    }


def schedule_document(report: RunReport, tasks: list[TaskSpec],
                      config: FleetConfig,
                      generated_at: str | None = None) -> dict:
    sched = report.schedule
    sel = sched.selection
    doc = {
        "feasible": sched.feasible,
        "config": {
            "n_fpgas": config.n_fpgas,
            "time_slice_ms": config.time_slice,
            "reconfig_time_ms": config.reconfig_time,
        },
        "tasks": [t.name for t in tasks],
        "selection": {
            "choice": list(sel.choice),
            "cu_counts": [tasks[i].variants[j].cu_count
                          for i, j in enumerate(sel.choice)],
            "shares_ms": list(sel.shares),
            "total_share_ms": sel.total_share,
            "total_power_mw": sel.total_power,
        },
        "timelines": [
            {"fpga": tl.fpga_index + 1,
             "segments": [_segment_json(s, tasks) for s in tl.segments]}
            for tl in sched.timelines
        ],
        "splits": [
            {"task_index": sp.task_index,
             "task": tasks[sp.task_index].name,
             "parts": [{"fpga": f + 1, "data_amount": amt}
                       for f, amt in sp.parts]}
            for sp in sched.splits
        ],
        "metrics": asdict(report.metrics),
        "enumeration": {
            "total_combinations": report.enumeration.total_combinations,
            "workable": len(report.enumeration.feasible),
            "unworkable": report.enumeration.infeasible_count,
            "capacity_budget_ms": report.enumeration.capacity_budget,
            "rejected_placement": report.rejected_placement,
        },
    }
    if generated_at is not None:
        doc["generated_at"] = generated_at
        doc["elapsed_ms"] = report.elapsed_seconds * 1000.0
    return doc


def load_schedule(path: str | Path) -> Schedule:
    """Rebuild the Schedule object from a written schedule document."""
    doc = json.loads(Path(path).read_text())
    sel = doc["selection"]
    selection = VariantSelection(
        tuple(sel["choice"]), tuple(sel["shares_ms"]),
        sel["total_share_ms"], sel["total_power_mw"],
    )
    timelines = tuple(
        FpgaTimeline(tl["fpga"] - 1, tuple(
            Segment(SegmentKind(s["kind"]), s["task_index"],
                    s["start_ms"], s["end_ms"])
            for s in tl["segments"]))
        for tl in doc["timelines"]
    )
    splits = tuple(
        SplitDirective(sp["task_index"],
                       tuple((p["fpga"] - 1, p["data_amount"])
                             for p in sp["parts"]))
        for sp in doc["splits"]
    )
    return Schedule(selection, timelines, splits, doc["feasible"])


def hardware_image_id(task: TaskSpec, variant_index: int) -> str:
    return f"{task.name}_{task.variants[variant_index].cu_count}cu.img"


def manifest_documents(schedule: Schedule, tasks: list[TaskSpec],
                       config: FleetConfig) -> list[dict]:
    """One deployment manifest per FPGA, entries in on-FPGA execution order."""
    # data offsets per task: cumulative over split parts in execution order
    part_at: dict[tuple[int, int], tuple[float, float]] = {}
    for sp in schedule.splits:
        offset = 0.0
        for fpga, amount in sp.parts:
            part_at[(sp.task_index, fpga)] = (offset, amount)
            offset += amount

    manifests = []
    for tl in schedule.timelines:
        entries = []
        placement_start: dict[int, float] = {}
        for seg in tl.segments:
            if seg.kind in (SegmentKind.CONFIG, SegmentKind.INIT):
                # the earlier of CONFIG/INIT marks where the load begins
                placement_start.setdefault(seg.task_index, seg.start)
            if seg.kind is not SegmentKind.EXEC:
                continue
            k = seg.task_index
            offset, length = part_at.get(
                (k, tl.fpga_index), (0.0, tasks[k].data_size))
            resumed = offset > 0  # continuation of a task split upstream
            entries.append({
                "task_name": tasks[k].name,
                "variant_cu_count":
                    tasks[k].variants[schedule.selection.choice[k]].cu_count,
                "hardware_image_id":
                    hardware_image_id(tasks[k], schedule.selection.choice[k]),
                "data_part": {"offset": offset, "length": length},
                "config_start_ms": placement_start.get(k, seg.start),
                "exec_window_ms": seg.duration,
                "resumed": resumed,
            })
        manifests.append({"fpga": tl.fpga_index + 1, "entries": entries})
    return manifests


def write_outputs(outdir: str | Path, document: dict, manifests: list[dict],
                  gantt_txt: str | None = None,
                  gantt_svg_text: str | None = None) -> list[Path]:
    """Write schedule.json, manifests/fpga_N.json, and optional gantt files."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def dump(path: Path, obj: dict) -> None:
        path.write_text(json.dumps(obj, indent=2) + "\n")
        written.append(path)

    dump(outdir / "schedule.json", document)
    mdir = outdir / "manifests"
    mdir.mkdir(exist_ok=True)
    for m in manifests:
        dump(mdir / f"fpga_{m['fpga']}.json", m)
    if gantt_txt is not None:
        p = outdir / "gantt.txt"
        p.write_text(gantt_txt)
        written.append(p)
    if gantt_svg_text is not None:
        p = outdir / "gantt.svg"
        p.write_text(gantt_svg_text)
        written.append(p)
    return written
