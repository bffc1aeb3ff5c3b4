"""Gantt renderings of a schedule: monospaced text and standalone SVG.

Execution bars are labeled "<j>CU-<name>" for the selected variant. Segment
kinds map to distinct glyphs (text) or fill patterns (SVG).
"""

from __future__ import annotations

from .model import FleetConfig, TaskSpec
from .placement import Schedule, SegmentKind

_GLYPH = {
    SegmentKind.CONFIG: "#",
    SegmentKind.INIT: "+",
    SegmentKind.EXEC: "=",
    SegmentKind.NULL: ".",
}

_FILL = {
    SegmentKind.CONFIG: "url(#cfg-hatch)",
    SegmentKind.INIT: "url(#init-dots)",
    SegmentKind.EXEC: "#7fb3d5",
    SegmentKind.NULL: "url(#null-hatch)",
}


def _label(schedule: Schedule, tasks: list[TaskSpec], task_index: int) -> str:
    task = tasks[task_index]
    cu = task.variants[schedule.selection.choice[task_index]].cu_count
    return f"{cu}CU-{task.name}"


def gantt_text(schedule: Schedule, tasks: list[TaskSpec],
               config: FleetConfig, width: int = 96) -> str:
    """Fixed-width bar per FPGA plus an exact per-segment listing."""
    t_slr = config.time_slice
    cols = min(width, int(t_slr)) if t_slr >= 1 else width
    lines = [
        f"fleet of {config.n_fpgas} FPGAs | time slice {t_slr:g} ms | "
        f"reconfig {config.reconfig_time:g} ms",
        f"legend: {_GLYPH[SegmentKind.CONFIG]} config  "
        f"{_GLYPH[SegmentKind.INIT]} init  {_GLYPH[SegmentKind.EXEC]} exec  "
        f"{_GLYPH[SegmentKind.NULL]} null   (1 column = {t_slr / cols:g} ms)",
        "",
    ]
    for tl in schedule.timelines:
        bar = [" "] * cols
        for seg in tl.segments:
            a = int(seg.start * cols / t_slr)
            b = max(a + 1, int(round(seg.end * cols / t_slr)))
            for i in range(a, min(b, cols)):
                bar[i] = _GLYPH[seg.kind]
            if seg.kind is SegmentKind.EXEC:
                label = _label(schedule, tasks, seg.task_index)
                if b - a >= len(label) + 2:
                    at = a + (b - a - len(label)) // 2
                    bar[at:at + len(label)] = label
        lines.append(f"F{tl.fpga_index + 1} |{''.join(bar)}|")
    lines.append("")
    for tl in schedule.timelines:
        parts = []
        for seg in tl.segments:
            if seg.kind is SegmentKind.NULL:
                parts.append(f"null {seg.start:g}-{seg.end:g}")
            else:
                name = _label(schedule, tasks, seg.task_index)
                parts.append(f"{seg.kind.value.lower()} {name} "
                             f"{seg.start:g}-{seg.end:g}")
        lines.append(f"F{tl.fpga_index + 1}: " + " | ".join(parts))
    return "\n".join(lines) + "\n"


def gantt_svg(schedule: Schedule, tasks: list[TaskSpec],
              config: FleetConfig) -> str:
    """Standalone vector rendering: one bar row per FPGA, patterned fills."""
    t_slr = config.time_slice
    n_f = config.n_fpgas
    plot_w, row_h, gap, left, top = 880.0, 30, 12, 56, 24
    px = plot_w / t_slr
    height = top + n_f * (row_h + gap) + 36
    width = left + plot_w + 24
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" '
        f'height="{height:g}" viewBox="0 0 {width:g} {height:g}" '
        'font-family="monospace" font-size="12">',
        "<defs>",
        '<pattern id="cfg-hatch" width="6" height="6" '
        'patternUnits="userSpaceOnUse" patternTransform="rotate(45)">'
        '<rect width="6" height="6" fill="#d5d8dc"/>'
        '<line x1="0" y1="0" x2="0" y2="6" stroke="#566573" stroke-width="2"/>'
        "</pattern>",
        '<pattern id="init-dots" width="6" height="6" '
        'patternUnits="userSpaceOnUse">'
        '<rect width="6" height="6" fill="#f9e79f"/>'
        '<circle cx="3" cy="3" r="1.4" fill="#b7950b"/>'
        "</pattern>",
        '<pattern id="null-hatch" width="8" height="8" '
        'patternUnits="userSpaceOnUse" patternTransform="rotate(-45)">'
        '<rect width="8" height="8" fill="#fdfefe"/>'
        '<line x1="0" y1="0" x2="0" y2="8" stroke="#d0d3d4" stroke-width="1"/>'
        "</pattern>",
        "</defs>",
    ]
    for tl in schedule.timelines:
        y = top + tl.fpga_index * (row_h + gap)
        out.append(f'<text x="8" y="{y + row_h / 2 + 4:g}">'
                   f"F{tl.fpga_index + 1}</text>")
        out.append(f'<rect x="{left:g}" y="{y:g}" width="{plot_w:g}" '
                   f'height="{row_h}" fill="none" stroke="#1c2833"/>')
        for seg in tl.segments:
            x = left + seg.start * px
            w = seg.duration * px
            out.append(
                f'<rect x="{x:g}" y="{y:g}" width="{w:g}" height="{row_h}" '
                f'fill="{_FILL[seg.kind]}" stroke="#1c2833" stroke-width="0.5"/>'
            )
            if seg.kind is SegmentKind.EXEC:
                label = _label(schedule, tasks, seg.task_index)
                if w >= 7.5 * len(label):
                    out.append(
                        f'<text x="{x + w / 2:g}" y="{y + row_h / 2 + 4:g}" '
                        f'text-anchor="middle">{label}</text>'
                    )
    axis_y = top + n_f * (row_h + gap) + 14
    for i in range(7):
        ms = t_slr * i / 6
        x = left + ms * px
        out.append(f'<line x1="{x:g}" y1="{axis_y - 10}" x2="{x:g}" '
                   f'y2="{axis_y - 6}" stroke="#1c2833"/>')
        out.append(f'<text x="{x:g}" y="{axis_y + 6}" '
                   f'text-anchor="middle">{ms:g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
