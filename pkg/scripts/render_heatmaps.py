#!/usr/bin/env python3
"""Render the classic Grundy heatmaps for all three core games.

mem+ shows clean linear sector bands; mem adds a parabolic pocket of
high values near the diagonal; mem0 shows the zero diagonal and, at
larger sizes, the shifted 12-diagonal.
"""

import argparse
from pathlib import Path

from memgames import MoveRule, compute_table
from memgames.cli import render_heatmap

VIEWS = (
    ("mem_plus", MoveRule.mem_plus(), 200),
    ("mem", MoveRule.mem(), 500),
    ("mem_zero", MoveRule.mem_zero(), 300),
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("heatmaps"))
    parser.add_argument("--scale", type=float, default=1.0,
                        help="multiply every view's heap bound")
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name, rule, base_n in VIEWS:
        max_n = max(2, int(base_n * args.scale))
        table = compute_table(rule, max_n)
        path = args.out_dir / f"{name}_{max_n}.pgm"
        path.write_bytes(render_heatmap(table, max_n))
        print(f"{path}  (max grundy value {int(table.flat.max())})")


if __name__ == "__main__":
    main()
