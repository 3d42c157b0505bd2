"""Closed-form Grundy values and predicates that the engine is tested against.

Each function here is an arithmetic shortcut for something the table
engine computes by recursion:

* mem+  -- the whole table: g(n_k) is the largest m with
  m*k + m(m+1)/2 <= n.  Columns split into constant-value sectors whose
  coordinates :func:`sector_of` exposes.
* mem   -- on and above the diagonal (k*k >= n): g(n_k) = n // k.
* mem0  -- the zero set: terminal heaps plus the diagonal cells n_n
  whose dyadic valuation is even.
* mem0, value 12 -- the shifted diagonal (k+22)_k carries 12 exactly
  when a parity-of-v2 rule (flipped on three exceptional k-families)
  says so; valid as a theorem for k+22 > 88 and checked empirically
  below that.

Everything is integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .core import Position


def triangular(m: int) -> int:
    """m-th triangular number m(m+1)/2."""
    if m < 0:
        raise ValueError("triangular numbers start at m=0")
    return m * (m + 1) // 2


def mem_plus_grundy(n: int, k: int) -> int:
    """Grundy value of heap n after removal k in mem+ (strictly increasing removals).

    Largest m >= 0 with m*k + triangular(m) <= n, found by binary search
    on the strictly increasing left-hand side.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    lo, hi = 0, n  # m*k + T_m >= m, so m <= n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid * k + triangular(mid) <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


@dataclass(frozen=True)
class SectorCoords:
    """Constant-Grundy band of a mem+ column.

    Column k splits into sectors; sector m spans heaps
    [k*m + T_m, k*(m+1) + T_{m+1} - 1] and every cell in it has Grundy
    value m.  Width is k + m + 1 and consecutive sectors tile the column.
    """

    m: int
    k: int
    lo: int
    hi: int

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1


def sector_of(n: int, k: int) -> SectorCoords:
    """The unique mem+ sector of column k containing heap n."""
    m = mem_plus_grundy(n, k)
    lo = k * m + triangular(m)
    hi = k * (m + 1) + triangular(m + 1) - 1
    assert lo <= n <= hi
    return SectorCoords(m=m, k=k, lo=lo, hi=hi)


def mem_grundy_diag(n: int, k: int) -> Optional[int]:
    """mem Grundy value n // k when k*k >= n; None when the formula does not apply.

    Below the k*k >= n region the values turn fractal and no closed form
    is claimed.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k * k >= n:
        return n // k
    return None


def v2(n: int) -> int:
    """Dyadic valuation: the exponent of 2 in n (n >= 1)."""
    if n < 1:
        raise ValueError("v2 is defined for positive integers; see v2_parity for 0")
    return (n & -n).bit_length() - 1


Parity = Literal["even", "odd"]


def v2_parity(n: int) -> Parity:
    """Parity of the dyadic valuation; 0 counts as even by convention."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return "even"
    return "even" if v2(n) % 2 == 0 else "odd"


def mem0_is_p_position(pos: Position) -> bool:
    """Is this mem0 position a previous-player win (Grundy value 0)?

    Exactly the terminal heaps and the diagonal cells n_n with even
    dyadic valuation; every off-diagonal cell has a move to an empty
    heap and so is a next-player win.
    """
    if pos.stones == 0:
        return True
    return pos.last_removal == pos.stones and v2_parity(pos.stones) == "even"


# k-families where the parity rule for the 12-diagonal flips:
# powers of two from 16 up, 3*2^e, and 15*2^e.
def _twelve_exceptional(k: int) -> bool:
    e = v2(k)
    odd = k >> e
    return (odd == 1 and e >= 4) or odd == 3 or odd == 15


def twelve_diagonal_predicate(k: int) -> bool:
    """Predicted truth of "the mem0 cell (k+22)_k has Grundy value 12".

    Even dyadic valuation of k predicts 12, except on the three
    exceptional families where the parity test flips.
    """
    if k < 1:
        raise ValueError("k must be positive")
    even = v2_parity(k) == "even"
    return not even if _twelve_exceptional(k) else even
