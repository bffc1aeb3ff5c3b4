#!/usr/bin/env python3
"""Run the bundled reference workloads end to end and print their schedules."""

import sys
from pathlib import Path

from fleetsched.cli import main

DATA = Path(__file__).resolve().parents[1] / "data"


def run() -> int:
    status = 0
    for name in ("example1.json", "example2.json", "example3.json"):
        print(f"=== {name} ===")
        code = main(["schedule", str(DATA / name),
                     "--out", f"out/{Path(name).stem}",
                     "--gantt", "text", "--gantt", "vector"])
        if code not in (0, 2):
            status = code
        print()
    return status


if __name__ == "__main__":
    sys.exit(run())
