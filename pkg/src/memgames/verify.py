"""Verification suites: every closed form and structure theorem vs the engine.

Each suite compares an independent prediction (closed form, recursion
oracle, bundled sequence fixture) against table values and reports a
:class:`SuiteResult`.  The CLI ``verify`` subcommand prints one line per
suite and exits nonzero if any suite fails; tests drive the suites
directly, including with deliberately corrupted tables to prove the
harness actually catches faults.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .closed_forms import (
    mem0_is_p_position,
    mem_grundy_diag,
    mem_plus_grundy,
    twelve_diagonal_predicate,
    v2_parity,
)
from .core import MoveRule, Position
from .engine import (
    GrundyTable,
    _gather_child_values,
    _table_cells,
    compute_table,
    oracle_table_values,
)
from .frontier import (
    bundled_frontier_fixture_path,
    frontier_values,
    load_sequence_fixture,
)

# representative instances of every rule family for oracle comparisons
DEFAULT_ORACLE_RULES = (
    MoveRule.mem(),
    MoveRule.mem_plus(),
    MoveRule.mem_zero(),
    MoveRule.dudeney(3),
    MoveRule.dudeney(6),
    MoveRule.linear_scale(2, 1),
    MoveRule.linear_scale(3, 2),
)

ELEVEN_DEATH_ROW = 42
ELEVEN_FRONTIER_ROWS = (20, 21)
ELEVEN_STRAGGLERS = ((22, 2), (40, 19), (42, 22))

TWELVE_ROW = 22
TWELVE_THEOREM_MIN_K = 67  # characterization proven for heap > 88, i.e. k >= 67
TWELVE_MAX_K = 978


@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} mismatches)"
        return f"{self.name}: {status} [{self.checked} checks]"


def _fail(n: int, k, expected, got) -> str:
    return f"FAIL n={n} k={k} expected={expected} got={got}"


def _tag_label(n: int, tag: int) -> str:
    return "inf" if tag == n + 1 else str(tag)


def suite_oracle_equivalence(
    limit: int = 100, rules: tuple[MoveRule, ...] = DEFAULT_ORACLE_RULES
) -> SuiteResult:
    """Optimized table equals the recursion oracle on every canonical cell."""
    res = SuiteResult("oracle-equivalence", 0)
    for rule in rules:
        table = compute_table(rule, limit)
        memo = oracle_table_values(rule, limit)
        for (n, tag), want in memo.items():
            res.checked += 1
            got = int(table.row(n)[tag])
            if got != want:
                res.failures.append(
                    _fail(n, _tag_label(n, tag), want, got) + f" rule={rule.name}"
                )
    return res


def suite_mem_plus_closed_form(
    table: GrundyTable | None = None, limit: int = 500
) -> SuiteResult:
    """Sector formula vs engine for every mem+ cell with k <= n <= limit."""
    if table is None:
        table = compute_table(MoveRule.mem_plus(), limit)
    res = SuiteResult("memplus-closed-form", 0)
    for n in range(1, limit + 1):
        row = table.row(n)
        for k in range(1, n + 1):
            res.checked += 1
            want = mem_plus_grundy(n, k)
            got = int(row[k])
            if got != want:
                res.failures.append(_fail(n, k, want, got))
    return res


def suite_mem_diagonal(
    table: GrundyTable | None = None, limit: int = 500
) -> SuiteResult:
    """Floor-quotient formula vs engine wherever k*k >= n (mem)."""
    if table is None:
        table = compute_table(MoveRule.mem(), limit)
    res = SuiteResult("mem-diagonal", 0)
    for n in range(1, limit + 1):
        row = table.row(n)
        for k in range(1, n + 1):
            want = mem_grundy_diag(n, k)
            if want is None:
                continue
            res.checked += 1
            got = int(row[k])
            if got != want:
                res.failures.append(_fail(n, k, want, got))
    return res


def suite_mem0_p_positions(
    table: GrundyTable | None = None, limit: int = 500
) -> SuiteResult:
    """Zero cells of mem0 are exactly the even-v2 diagonal plus terminal heaps."""
    if table is None:
        table = compute_table(MoveRule.mem_zero(), limit)
    res = SuiteResult("mem0-p-positions", 0)
    for n in range(0, limit + 1):
        row = table.row(n)
        res.checked += row.size
        zero_tags = set(np.flatnonzero(row == 0).tolist())
        if n == 0:
            expect = {0, 1}
        elif v2_parity(n) == "even":
            expect = {n}
        else:
            expect = set()
        if zero_tags != expect:
            for tag in sorted(zero_tags ^ expect):
                want = 0 if tag in expect else "nonzero"
                res.failures.append(_fail(n, _tag_label(n, tag), want, int(row[tag])))
    return res


def suite_p_position_predicate(
    table: GrundyTable | None = None, limit: int = 500
) -> SuiteResult:
    """mem0_is_p_position(pos) <=> engine value 0, over all canonical positions."""
    if table is None:
        table = compute_table(MoveRule.mem_zero(), limit)
    res = SuiteResult("mem0-p-predicate", 0)
    for n in range(0, limit + 1):
        row = table.row(n)
        for tag in range(0, n + 2):
            res.checked += 1
            want = mem0_is_p_position(Position(n, tag))
            got = int(row[tag]) == 0
            if got != want:
                res.failures.append(
                    _fail(n, _tag_label(n, tag), f"zero={want}", f"zero={got}")
                )
    return res


def suite_dichotomy(table: GrundyTable) -> SuiteResult:
    """Every mem0 cell equals the frontier value or its echo child's value."""
    res = SuiteResult("lemma-dichotomy", 0)
    flat = table.flat
    for n in range(1, table.max_n + 1):
        row = table.row(n)
        child = _gather_child_values(flat, n)
        cells = row[1 : n + 1].astype(np.int64)
        res.checked += n
        bad = np.flatnonzero((cells != int(row[n + 1])) & (cells != child[1:]))
        for i in bad.tolist():
            k = i + 1
            res.failures.append(
                _fail(n, k, f"{int(row[n + 1])} or {int(child[k])}", int(cells[i]))
            )
    return res


def suite_final_frontier(table: GrundyTable) -> SuiteResult:
    """No frontier value recurs past twice its first heap."""
    res = SuiteResult("final-frontier", 0)
    front = frontier_values(table)
    first: dict[int, int] = {}
    for n, v in enumerate(front):
        if v not in first:
            first[v] = n
            continue
        res.checked += 1
        if n > 2 * first[v]:
            res.failures.append(_fail(n, "inf", f"value!={v} past {2 * first[v]}", v))
    return res


def suite_mortality_eleven(table: GrundyTable) -> SuiteResult:
    """Value 11: frontier rows {20, 21}, stragglers up to row 42, nothing after."""
    res = SuiteResult("mortality-11", 0)
    max_n = table.max_n
    front = frontier_values(table)
    if max_n >= 2 * ELEVEN_FRONTIER_ROWS[0]:  # frontier for 11 settled
        got_rows = tuple(n for n, v in enumerate(front) if v == 11)
        res.checked += 1
        if got_rows != ELEVEN_FRONTIER_ROWS:
            res.failures.append(
                _fail(ELEVEN_FRONTIER_ROWS[0], "inf", ELEVEN_FRONTIER_ROWS, got_rows)
            )
    if max_n >= ELEVEN_DEATH_ROW:
        for n, k in ELEVEN_STRAGGLERS:
            res.checked += 1
            got = table.value(n, k)
            if got != 11:
                res.failures.append(_fail(n, k, 11, got))
    for n in range(ELEVEN_DEATH_ROW + 1, max_n + 1):
        row = table.row(n)
        res.checked += row.size
        hits = np.flatnonzero(row == 11)
        for tag in hits.tolist():
            res.failures.append(_fail(n, _tag_label(n, tag), "value!=11", 11))
    return res


def suite_twelve_diagonal(table: GrundyTable) -> SuiteResult:
    """Parity characterization of the 12-diagonal; small k reported as findings."""
    res = SuiteResult("twelve-diagonal", 0)
    max_n = table.max_n
    front = frontier_values(table)
    if max_n >= 2 * TWELVE_ROW:
        got_rows = tuple(n for n, v in enumerate(front) if v == 12)
        res.checked += 1
        if got_rows != (TWELVE_ROW,):
            res.failures.append(_fail(TWELVE_ROW, "inf", (TWELVE_ROW,), got_rows))
    for k in range(1, min(TWELVE_MAX_K, max_n - TWELVE_ROW) + 1):
        n = k + TWELVE_ROW
        want = twelve_diagonal_predicate(k)
        got = table.value(n, k) == 12
        if k >= TWELVE_THEOREM_MIN_K:
            res.checked += 1
            if got != want:
                res.failures.append(_fail(n, k, f"is12={want}", f"is12={got}"))
        elif got != want:
            res.findings.append(
                f"FINDING n={n} k={k} predicted is12={want} engine is12={got}"
            )
    return res


def suite_oeis_prefix(
    table: GrundyTable, fixture_path: Path | str | None = None
) -> SuiteResult:
    """Frontier sequence against the bundled A131469 fixture."""
    if fixture_path is None:
        fixture_path = bundled_frontier_fixture_path()
    fixture = load_sequence_fixture(fixture_path)
    front = frontier_values(table)
    span = min(len(fixture), len(front))
    res = SuiteResult("oeis-prefix", span)
    for n in range(span):
        if front[n] != fixture[n]:
            res.failures.append(_fail(n, "inf", fixture[n], front[n]))
    return res


def run_all(max_n: int = 500, threads: int = 1) -> list[SuiteResult]:
    """Run every suite; mem0-wide checks use ``max_n`` as their horizon."""
    mem0_span = max(max_n, 500)
    mem0_table = compute_table(MoveRule.mem_zero(), mem0_span)
    jobs = [
        lambda: suite_oracle_equivalence(),
        lambda: suite_mem_plus_closed_form(),
        lambda: suite_mem_diagonal(),
        lambda: suite_mem0_p_positions(_clip(mem0_table, min(500, mem0_span))),
        lambda: suite_p_position_predicate(_clip(mem0_table, min(500, mem0_span))),
        lambda: suite_dichotomy(_clip(mem0_table, max_n)),
        lambda: suite_final_frontier(_clip(mem0_table, max_n)),
        lambda: suite_mortality_eleven(_clip(mem0_table, max_n)),
        lambda: suite_twelve_diagonal(_clip(mem0_table, max_n)),
        lambda: suite_oeis_prefix(_clip(mem0_table, max_n)),
    ]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return [f.result() for f in [pool.submit(job) for job in jobs]]
    return [job() for job in jobs]


def _clip(table: GrundyTable, max_n: int) -> GrundyTable:
    """View of the same table restricted to heaps <= max_n."""
    if max_n >= table.max_n:
        return table
    return GrundyTable(
        rule=table.rule, max_n=max_n, flat=table.flat[: _table_cells(max_n)]
    )
