"""Grundy-value computation: reference oracle and optimized table builder.

Two independent routes to the same numbers:

* :func:`grundy_oracle` -- memoized evaluation straight from
  :func:`memgames.core.allowed_moves`, using an explicit stack so deep
  heaps cannot overflow the call stack.  Ground truth, O(n) options per
  position.
* :func:`compute_table` -- builds the whole triangular table bottom-up
  with per-rule row sweeps.  For mem0 each row costs O(n): gather the
  child values once, take their mex, then every cell is a
  one-element-removed mex (:func:`mex_without`).  For mem/mem+ the row
  is a single descending sweep with an incremental suffix mex.  Dudeney
  and scale fall back to a per-cell mex over a shared per-row scratch
  vector.

Tables store one uint16 row per heap size n with n+2 entries: the
start column, literal tags 1..n, and the frontier column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import MoveRule, Position, RuleKind, allowed_moves

MAX_TABLE_N = 65534  # uint16 storage: every value is <= its row index

DEFAULT_MAX_BYTES = 2 << 30


class CapacityError(ValueError):
    """Requested table exceeds the configured memory budget."""


class BudgetExceededError(RuntimeError):
    """Option-enumeration budget ran out in the generic table builder."""


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer missing from ``values``."""
    present = set(values)
    m = 0
    while m in present:
        m += 1
    return m


def mex_without(counts, mex_s: int, x: int) -> int:
    """Mex of a multiset S after deleting one copy of ``x``, in O(1).

    ``counts`` maps value -> multiplicity in S (mapping or indexable
    array) and ``mex_s`` must equal mex(S).  Deleting the only copy of
    an x below the mex opens the first hole exactly at x; any other
    deletion leaves the mex alone.
    """
    if x < 0:
        raise ValueError(f"x={x} is not in the multiset")
    try:
        c = counts[x]
    except (KeyError, IndexError):
        c = 0
    if c <= 0:
        raise ValueError(f"x={x} is not in the multiset")
    if c == 1 and x < mex_s:
        return x
    return mex_s


def _child_key(n: int, m: int) -> tuple[int, int]:
    # canonical (stones, tag) after removing m from a heap of n
    r = n - m
    return (r, m) if m <= r else (r, r + 1)


def grundy_oracle(
    rule: MoveRule, pos: Position, memo: dict[tuple[int, int], int] | None = None
) -> int:
    """Grundy value of ``pos`` by direct memoized recursion.

    Pass a shared ``memo`` dict to amortize repeated queries under the
    same rule.
    """
    if memo is None:
        memo = {}
    root = (pos.stones, pos.tag)
    stack = [root]
    while stack:
        key = stack[-1]
        if key in memo:
            stack.pop()
            continue
        n, tag = key
        children = [_child_key(n, m) for m in allowed_moves(rule, Position(n, tag))]
        pending = [c for c in children if c not in memo]
        if pending:
            stack.extend(pending)
        else:
            memo[key] = mex(memo[c] for c in children)
            stack.pop()
    return memo[root]


def _row_offset(n: int) -> int:
    # rows 0..n-1 occupy sum_{i<n} (i+2) = n(n+3)/2 entries
    return n * (n + 3) // 2


def _table_cells(max_n: int) -> int:
    return _row_offset(max_n + 1)


@dataclass(frozen=True, eq=False)
class GrundyTable:
    """Immutable triangular table of Grundy values for one rule.

    Row n (0 <= n <= max_n) holds values for tags 0 (start), 1..n, and
    n+1 (frontier), in that order.
    """

    rule: MoveRule
    max_n: int
    flat: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.flat.shape != (_table_cells(self.max_n),):
            raise ValueError("flat storage does not match max_n")
        self.flat.flags.writeable = False

    def row(self, n: int) -> np.ndarray:
        """Read-only view of row n (length n+2)."""
        if not 0 <= n <= self.max_n:
            raise IndexError(f"row {n} outside table (max_n={self.max_n})")
        off = _row_offset(n)
        return self.flat[off : off + n + 2]

    def value(self, n: int, k_raw: int) -> int:
        """Grundy value at heap n, raw last removal k_raw (0 = start).

        k_raw above n reads the frontier column.
        """
        if k_raw < 0:
            raise ValueError(f"negative removal tag: {k_raw}")
        tag = k_raw if k_raw <= n else n + 1
        return int(self.row(n)[tag])

    def value_at(self, pos: Position) -> int:
        return int(self.row(pos.stones)[pos.tag])

    def start_value(self, n: int) -> int:
        return int(self.row(n)[0])

    def frontier_value(self, n: int) -> int:
        return int(self.row(n)[n + 1])


def _gather_child_values(flat: np.ndarray, n: int) -> np.ndarray:
    """d[m] = value((n-m), canonical tag m) for m = 1..n; d[0] is unused."""
    m = np.arange(1, n + 1, dtype=np.int64)
    r = n - m
    tag = np.where(m <= r, m, r + 1)
    d = np.empty(n + 1, dtype=np.int64)
    d[0] = -1
    d[1:] = flat[r * (r + 3) // 2 + tag]
    return d


def _fill_row_mem_zero(row: np.ndarray, d: np.ndarray, n: int) -> None:
    dv = d[1:]
    counts = np.bincount(dv)
    holes = np.flatnonzero(counts == 0)
    mex_s = int(holes[0]) if holes.size else counts.size
    # cell k sees the full child multiset minus its own echo child d[k]
    row[1 : n + 1] = np.where((counts[dv] == 1) & (dv < mex_s), dv, mex_s)
    row[0] = mex_s
    row[n + 1] = mex_s


def _fill_row_mem(row: np.ndarray, d: np.ndarray, n: int, strict: bool) -> None:
    # suffix mex, descending k; strict=True drops the child at m=k (mem+)
    dl = d.tolist()
    out = [0] * (n + 2)
    seen = bytearray(n + 2)
    cur = 0
    for k in range(n, 0, -1):
        x = dl[k]
        if strict:
            out[k] = cur
            seen[x] = 1
            while seen[cur]:
                cur += 1
        else:
            seen[x] = 1
            while seen[cur]:
                cur += 1
            out[k] = cur
    out[0] = cur  # start: every removal 1..n available
    out[n + 1] = 0  # frontier: no options
    row[:] = out


def _generic_row_caps(rule: MoveRule, n: int) -> "np.ndarray | None":
    """Per-k upper bound of the allowed removal range, or None for k-echo rules."""
    if rule.kind is RuleKind.LINEAR_SCALE:
        r = rule.ratio
        k = np.arange(0, n + 1, dtype=np.int64)
        return np.minimum(n, (r.numerator * k) // r.denominator)
    return None


def _fill_row_generic(
    row: np.ndarray,
    d: np.ndarray,
    n: int,
    rule: MoveRule,
    scratch: bytearray,
    budget_left: list[int] | None,
) -> None:
    dl = d.tolist()
    out = [0] * (n + 2)
    touched: list[int] = []

    def cell_mex(lo: int, hi: int, skip: int) -> int:
        for m in range(lo, hi + 1):
            if m == skip:
                continue
            v = dl[m]
            if not scratch[v]:
                scratch[v] = 1
                touched.append(v)
        g = 0
        while scratch[g]:
            g += 1
        for v in touched:
            scratch[v] = 0
        touched.clear()
        if budget_left is not None:
            budget_left[0] -= max(0, hi - lo + 1 - (1 if lo <= skip <= hi else 0))
            if budget_left[0] < 0:
                raise BudgetExceededError("option-enumeration budget exhausted")
        return g

    if rule.kind is RuleKind.DUDENEY:
        cap = min(rule.cap, n)
        for k in range(1, n + 1):
            out[k] = cell_mex(1, cap, k)
        out[0] = cell_mex(1, n, 0)
        out[n + 1] = cell_mex(1, cap, 0)
    else:  # linear scale
        caps = _generic_row_caps(rule, n).tolist()
        for k in range(1, n + 1):
            out[k] = cell_mex(1, caps[k], 0)
        out[0] = cell_mex(1, n, 0)
        out[n + 1] = out[0]  # ratio >= 1 makes every removal legal past the heap
    row[:] = out


def compute_table(
    rule: MoveRule,
    max_n: int,
    budget: int | None = None,
    max_bytes: int = DEFAULT_MAX_BYTES,
) -> GrundyTable:
    """Full Grundy table for all heaps up to ``max_n``.

    ``budget`` caps the total number of option enumerations in the
    generic (dudeney/scale) path; the structured rules ignore it.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if max_n > MAX_TABLE_N:
        raise CapacityError(f"max_n={max_n} exceeds uint16 capacity {MAX_TABLE_N}")
    cells = _table_cells(max_n)
    if 2 * cells > max_bytes:
        raise CapacityError(
            f"table of {cells} cells needs {2 * cells} bytes > budget {max_bytes}"
        )
    flat = np.zeros(cells, dtype=np.uint16)
    kind = rule.kind
    scratch = bytearray(max_n + 3) if kind in (RuleKind.DUDENEY, RuleKind.LINEAR_SCALE) else None
    budget_left = [budget] if budget is not None else None
    for n in range(1, max_n + 1):
        off = _row_offset(n)
        row = flat[off : off + n + 2]
        d = _gather_child_values(flat, n)
        if kind is RuleKind.MEM_ZERO:
            _fill_row_mem_zero(row, d, n)
        elif kind is RuleKind.MEM:
            _fill_row_mem(row, d, n, strict=False)
        elif kind is RuleKind.MEM_PLUS:
            _fill_row_mem(row, d, n, strict=True)
        else:
            _fill_row_generic(row, d, n, rule, scratch, budget_left)
    return GrundyTable(rule=rule, max_n=max_n, flat=flat)


def oracle_table_values(
    rule: MoveRule, max_n: int
) -> dict[tuple[int, int], int]:
    """Oracle values for every canonical cell up to ``max_n``.

    Bottom-up fill sharing one memo; same recursion as
    :func:`grundy_oracle`, packaged for exhaustive comparisons.
    """
    memo: dict[tuple[int, int], int] = {}
    for n in range(0, max_n + 1):
        for tag in range(0, n + 2):
            children = [
                _child_key(n, m) for m in allowed_moves(rule, Position(n, tag))
            ]
            memo[(n, tag)] = mex(memo[c] for c in children)
    return memo
