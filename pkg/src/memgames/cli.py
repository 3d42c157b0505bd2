"""Command line interface: table export, heatmaps, frontier reports, verification.

::

    memgames table    --game mem+ --max-n 20 [--start-col] [--frontier-col] [--out t.csv]
    memgames heatmap  --game mem  --max-n 500 --out mem.pgm
    memgames frontier --game mem0 --max-n 200 [--out report.txt]
    memgames verify   [--game mem0] --max-n 500

Game selectors: ``mem``, ``mem+``, ``mem0``, ``dudeney:Y``, ``scale:p/q``.
CSV rows are ``n,k,grundy`` over the full square k = 1..N (cells with
k > n carry the row's clamped frontier value, like the printed tables);
``--start-col`` and ``--frontier-col`` add k=0 and k=inf rows.  Heatmaps
are binary P5 graymaps, black = 0, scaled to the rendered maximum.
``MEMGAME_THREADS`` caps how many verification suites run concurrently.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO

import numpy as np

from .core import MoveRule
from .engine import compute_table
from .frontier import (
    ImmortalCandidate,
    Mortal,
    Undetermined,
    build_frontier_report,
    exceptional_positions,
)
from .verify import run_all


def parse_game(selector: str) -> MoveRule:
    """Parse a game selector string into a rule; raises ValueError if malformed."""
    if selector == "mem":
        return MoveRule.mem()
    if selector == "mem+":
        return MoveRule.mem_plus()
    if selector == "mem0":
        return MoveRule.mem_zero()
    if selector.startswith("dudeney:"):
        arg = selector.split(":", 1)[1]
        if not arg.isdigit() or int(arg) < 1:
            raise ValueError(f"bad dudeney cap: {arg!r}")
        return MoveRule.dudeney(int(arg))
    if selector.startswith("scale:"):
        arg = selector.split(":", 1)[1]
        num, sep, den = arg.partition("/")
        if not sep:
            den = "1"
        if not (num.isdigit() and den.isdigit()) or int(den) < 1:
            raise ValueError(f"bad scale ratio: {arg!r}")
        if int(num) < int(den):
            raise ValueError(f"scale ratio must be >= 1, got {arg}")
        return MoveRule.linear_scale(int(num), int(den))
    raise ValueError(f"unknown game {selector!r}")


def _game_argument(selector: str) -> MoveRule:
    try:
        return parse_game(selector)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


@dataclass
class RunConfig:
    rule: MoveRule
    max_n: int
    out: Path | None
    start_col: bool
    frontier_col: bool
    budget: int | None
    threads: int


def _config(args: argparse.Namespace) -> RunConfig:
    threads = 1
    raw = os.environ.get("MEMGAME_THREADS")
    if raw is not None:
        try:
            threads = max(1, int(raw))
        except ValueError:
            raise SystemExit(f"error: MEMGAME_THREADS must be an integer, got {raw!r}")
    return RunConfig(
        rule=args.game,
        max_n=args.max_n,
        out=Path(args.out) if args.out else None,
        start_col=args.start_col,
        frontier_col=args.frontier_col,
        budget=args.budget,
        threads=threads,
    )


def _open_text_out(config: RunConfig) -> IO[str]:
    if config.out is None:
        return sys.stdout
    return open(config.out, "w")


def cmd_table(config: RunConfig) -> int:
    table = compute_table(config.rule, config.max_n, budget=config.budget)
    out = _open_text_out(config)
    try:
        out.write("n,k,grundy\n")
        for n in range(1, config.max_n + 1):
            row = table.row(n)
            frontier = int(row[n + 1])
            if config.start_col:
                out.write(f"{n},0,{int(row[0])}\n")
            for k in range(1, config.max_n + 1):
                v = int(row[k]) if k <= n else frontier
                out.write(f"{n},{k},{v}\n")
            if config.frontier_col:
                out.write(f"{n},inf,{frontier}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def render_heatmap(table, max_n: int) -> bytes:
    """Binary P5 graymap of the square n,k = 1..max_n (row-major, n downwards)."""
    grid = np.empty((max_n, max_n), dtype=np.int64)
    for n in range(1, max_n + 1):
        row = table.row(n)
        grid[n - 1, :n] = row[1 : n + 1]
        grid[n - 1, n:] = int(row[n + 1])
    v_max = int(grid.max())
    if v_max == 0:
        pixels = np.zeros_like(grid, dtype=np.uint8)
    else:
        pixels = np.rint(grid * (255.0 / v_max)).astype(np.uint8)
    header = f"P5\n{max_n} {max_n}\n255\n".encode("ascii")
    return header + pixels.tobytes()


def cmd_heatmap(config: RunConfig) -> int:
    if config.out is None:
        print("error: heatmap needs --out (binary image)", file=sys.stderr)
        return 2
    table = compute_table(config.rule, config.max_n, budget=config.budget)
    data = render_heatmap(table, config.max_n)
    config.out.write_bytes(data)
    return 0


def _mortality_line(m: int, cls) -> str:
    if isinstance(cls, Mortal):
        return f"mortality[{m}]: mortal death_row={cls.death_row}"
    if isinstance(cls, ImmortalCandidate):
        head = " ".join(str(r) for r in cls.evidence_rows[:5])
        return (
            f"mortality[{m}]: immortal-candidate "
            f"evidence_count={len(cls.evidence_rows)} first_rows={head}"
        )
    assert isinstance(cls, Undetermined)
    return f"mortality[{m}]: undetermined horizon={cls.horizon}"


def cmd_frontier(config: RunConfig) -> int:
    if config.rule != MoveRule.mem_zero():
        print(
            f"error: frontier analysis is defined for mem0, not {config.rule.name}",
            file=sys.stderr,
        )
        return 2
    table = compute_table(config.rule, config.max_n, budget=config.budget)
    report = build_frontier_report(table)
    exceptional = exceptional_positions(table, config.max_n)
    out = _open_text_out(config)
    try:
        out.write(f"game: {config.rule.name}\n")
        out.write(f"max_n: {config.max_n}\n")
        out.write("frontier: " + " ".join(str(v) for v in report.frontier) + "\n")
        for m, n in report.first_occurrence.items():
            out.write(f"first_occurrence[{m}]: {n}\n")
        for m, occ in report.occurrences.items():
            out.write(f"occurrences[{m}]: " + " ".join(str(n) for n in occ) + "\n")
            out.write(f"multiplicity[{m}]: {len(occ)}\n")
        best = max(len(occ) for occ in report.occurrences.values())
        first_best = min(
            m for m, occ in report.occurrences.items() if len(occ) == best
        )
        out.write(f"max_multiplicity: {best}\n")
        out.write(f"max_multiplicity_first_value: {first_best}\n")
        for m, cls in report.classifications.items():
            out.write(_mortality_line(m, cls) + "\n")
        candidates = [
            m
            for m, cls in report.classifications.items()
            if isinstance(cls, ImmortalCandidate)
        ]
        out.write(
            "immortal_candidates: " + " ".join(str(m) for m in candidates) + "\n"
        )
        out.write(f"exceptional_count: {len(exceptional)}\n")
        for e in exceptional:
            flag = "true" if e.strict else "false"
            out.write(f"exceptional[{e.n},{e.k}]: value={e.value} strict={flag}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_verify(config: RunConfig) -> int:
    results = run_all(max_n=config.max_n, threads=config.threads)
    failed = False
    for res in results:
        print(res.line())
        for line in res.findings:
            print(line)
        for line in res.failures:
            print(line)
        failed = failed or not res.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="memgames",
        description="Grundy tables and frontier analysis for heap games with move memory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--game",
        type=_game_argument,
        default="mem0",
        help="mem | mem+ | mem0 | dudeney:Y | scale:p/q (default mem0)",
    )
    common.add_argument("--max-n", type=int, default=500, help="largest heap size")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="cap on option enumerations for dudeney/scale tables",
    )
    common.add_argument("--start-col", action="store_true", help="emit k=0 rows in CSV")
    common.add_argument(
        "--frontier-col", action="store_true", help="emit k=inf rows in CSV"
    )
    for name, fn, blurb in (
        ("table", cmd_table, "write the Grundy table as CSV"),
        ("heatmap", cmd_heatmap, "render the Grundy table as a P5 graymap"),
        ("frontier", cmd_frontier, "frontier report for mem0"),
        ("verify", cmd_verify, "run every verification suite"),
    ):
        p = sub.add_parser(name, parents=[common], help=blurb)
        p.set_defaults(func=fn)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if isinstance(args.game, str):  # default value skips the type converter
        args.game = parse_game(args.game)
    if args.max_n < 1:
        print("error: --max-n must be >= 1", file=sys.stderr)
        return 2
    config = _config(args)
    try:
        return args.func(config)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
