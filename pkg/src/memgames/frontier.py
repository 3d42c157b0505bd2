"""Analysis of the mem0 frontier: the values g(n_oo) and what happens after them.

In mem0 every position n_k with k > n has the same options, so they
collapse to a single frontier position n_oo whose Grundy value is the
n-th frontier value.  Key structure, all of it checked by the test
suite against the engine:

* each cell satisfies g(n_k) in {g(n_oo), g((n-k)_k)} -- the second
  branch defines an *exceptional* position;
* the first heap where a value m appears anywhere puts m on the
  frontier, so first occurrences are strictly increasing and gapless;
* a value first seen on the frontier at n can reappear there only up to
  heap 2n ("final frontier");
* a value with two or more frontier occurrences, the last at n', never
  appears in any row beyond 2n' (it is *mortal*); a value with exactly
  one frontier occurrence can persist forever (0 does, on the main
  diagonal; 12 does, on a shifted diagonal).

Classification is horizon-aware: with a table up to N we only report
mortal/immortal-candidate when the heaps scanned actually settle the
question, and Undetermined otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from .core import RuleKind
from .engine import GrundyTable, _gather_child_values, _row_offset

DEFAULT_EVIDENCE_ROWS = 3  # distinct rows past the bound needed to call a value persistent


class RuleMismatchError(ValueError):
    """Frontier analysis asked of a table built for the wrong rule."""


class NotOnFrontierError(ValueError):
    """The value never appears on the frontier within the table horizon."""


@dataclass(frozen=True)
class Mortal:
    death_row: int


@dataclass(frozen=True)
class ImmortalCandidate:
    evidence_rows: tuple[int, ...]


@dataclass(frozen=True)
class Undetermined:
    horizon: int


MortalityClass = Union[Mortal, ImmortalCandidate, Undetermined]


@dataclass(frozen=True)
class ExceptionalEntry:
    """Cell n_k whose value equals its echo child (n-k)_k.

    ``strict`` marks entries whose value also differs from the row's
    frontier value, i.e. the genuinely non-frontier branch.  Terminal
    echoes like 3_3 -> 0_3 are included and simply carry the flag.
    """

    n: int
    k: int
    value: int
    strict: bool


@dataclass(frozen=True)
class FrontierReport:
    max_n: int
    frontier: tuple[int, ...]
    first_occurrence: dict[int, int]
    occurrences: dict[int, tuple[int, ...]]
    classifications: dict[int, MortalityClass]


def _require_mem_zero(table: GrundyTable) -> None:
    if table.rule.kind is not RuleKind.MEM_ZERO:
        raise RuleMismatchError(
            f"frontier analysis needs a mem0 table, got {table.rule.name}"
        )


def frontier_values(table: GrundyTable) -> list[int]:
    """g(n_oo) for n = 0..max_n (entry 0 is the empty heap, value 0)."""
    _require_mem_zero(table)
    return [table.frontier_value(n) for n in range(table.max_n + 1)]


def first_occurrence(report: FrontierReport) -> dict[int, int]:
    """Least heap per frontier value, keyed by value in increasing order."""
    return dict(report.first_occurrence)


def occurrences(report: FrontierReport, m: int) -> list[int]:
    """All heaps n <= max_n with frontier value m (sorted)."""
    return list(report.occurrences.get(m, ()))


def _rows_by_value(table: GrundyTable) -> dict[int, list[int]]:
    """value -> sorted rows in which it appears in any canonical cell."""
    index: dict[int, list[int]] = {}
    for n in range(table.max_n + 1):
        for v in np.unique(table.row(n)).tolist():
            index.setdefault(v, []).append(n)
    return index


def classify_mortality(
    table: GrundyTable,
    m: int,
    evidence_threshold: int = DEFAULT_EVIDENCE_ROWS,
    _row_index: dict[int, list[int]] | None = None,
) -> MortalityClass:
    """Mortality status of value ``m`` within the table horizon.

    Mortal: at least two frontier occurrences, last at n', nothing equal
    to m in any row past 2n', and enough table (N >= 4n') to make the
    scan meaningful.  ImmortalCandidate: a settled singleton occurrence
    at n with at least ``evidence_threshold`` rows past 2n still
    carrying m.  Anything the horizon cannot settle is Undetermined.
    """
    _require_mem_zero(table)
    max_n = table.max_n
    front = frontier_values(table)
    occ = [n for n, v in enumerate(front) if v == m]
    if not occ:
        raise NotOnFrontierError(f"value {m} not on the frontier up to {max_n}")
    index = _row_index if _row_index is not None else _rows_by_value(table)
    rows_with_m = index.get(m, [])
    if len(occ) >= 2:
        last = occ[-1]
        death_row = 2 * last
        if max_n < 2 * death_row:
            return Undetermined(horizon=max_n)
        stragglers = [r for r in rows_with_m if r > death_row]
        if stragglers:
            return Undetermined(horizon=max_n)
        return Mortal(death_row=death_row)
    n = occ[0]
    if max_n < 2 * n:
        return Undetermined(horizon=max_n)  # a second frontier occurrence may hide above
    evidence = tuple(r for r in rows_with_m if r > 2 * n)
    if len(evidence) >= evidence_threshold:
        return ImmortalCandidate(evidence_rows=evidence)
    return Undetermined(horizon=max_n)


def exceptional_positions(table: GrundyTable, n_max: int) -> list[ExceptionalEntry]:
    """All cells n_k (1 <= k <= n <= n_max) whose value equals the echo child's."""
    _require_mem_zero(table)
    if n_max > table.max_n:
        raise ValueError(f"n_max={n_max} beyond table horizon {table.max_n}")
    out: list[ExceptionalEntry] = []
    flat = table.flat
    for n in range(1, n_max + 1):
        off = _row_offset(n)
        row = flat[off : off + n + 2]
        child = _gather_child_values(flat, n)  # child[k] = value of (n-k)_k
        cells = row[1 : n + 1].astype(np.int64)
        hits = np.flatnonzero(cells == child[1:])
        if hits.size:
            fval = int(row[n + 1])
            for i in hits.tolist():
                k = i + 1
                v = int(cells[i])
                out.append(ExceptionalEntry(n=n, k=k, value=v, strict=v != fval))
    return out


def immortality_scan(
    table: GrundyTable, evidence_threshold: int = DEFAULT_EVIDENCE_ROWS
) -> list[int]:
    """Values whose settled frontier status says "persists past the final frontier".

    Only singleton frontier values with 2n <= max_n are decidable within
    the horizon; of those, the ones still present in rows beyond 2n are
    returned (sorted).
    """
    _require_mem_zero(table)
    front = frontier_values(table)
    index = _rows_by_value(table)
    found: list[int] = []
    for m in sorted(set(front)):
        cls = classify_mortality(
            table, m, evidence_threshold=evidence_threshold, _row_index=index
        )
        if isinstance(cls, ImmortalCandidate):
            found.append(m)
    return found


def build_frontier_report(
    table: GrundyTable, evidence_threshold: int = DEFAULT_EVIDENCE_ROWS
) -> FrontierReport:
    """Assemble sequence, occurrence maps and mortality classes in one pass."""
    _require_mem_zero(table)
    front = frontier_values(table)
    occ: dict[int, list[int]] = {}
    for n, v in enumerate(front):
        occ.setdefault(v, []).append(n)
    index = _rows_by_value(table)
    values = sorted(occ)
    classifications = {
        m: classify_mortality(
            table, m, evidence_threshold=evidence_threshold, _row_index=index
        )
        for m in values
    }
    return FrontierReport(
        max_n=table.max_n,
        frontier=tuple(front),
        first_occurrence={m: occ[m][0] for m in values},
        occurrences={m: tuple(occ[m]) for m in values},
        classifications=classifications,
    )


def load_sequence_fixture(path: Path | str) -> list[int]:
    """Integer-per-line fixture file; '#' lines and blanks are comments."""
    values: list[int] = []
    for line in Path(path).read_text().splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values.append(int(stripped))
    return values


def bundled_frontier_fixture_path() -> Path:
    """Path of the packaged A131469 frontier-sequence fixture."""
    return Path(__file__).parent / "data" / "a131469.txt"
