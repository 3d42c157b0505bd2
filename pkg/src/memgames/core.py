"""Rules and positions for single-heap games with one move of memory.

A game is played on one pile of stones. The first player removes any
positive number of stones; afterwards, if the previous removal was k,
the next player may remove m stones only when the rule's memory
function allows m after k. Five rule families are supported:

* ``mem``    -- remove at least as many stones as the previous player,
* ``mem+``   -- remove strictly more stones than the previous player,
* ``mem0``   -- remove any number except the previous removal (no echo),
* ``dudeney``-- like ``mem0`` but never more than a fixed cap Y,
* ``scale``  -- remove at most floor(p/q * k) stones, for a ratio p/q >= 1.

Positions carry the heap size together with a canonical tag for the
last removal: tag 0 means "start of game" (no removal yet), tags
1..n are literal last removals, and tag n+1 stands for every last
removal larger than the heap ("frontier").  Collapsing all k > n into
one tag is sound for each built-in family; ``tests/test_core.py``
verifies it exhaustively rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

START_TAG = 0


class IllegalMoveError(ValueError):
    """Raised when a removal is not legal from the given position."""


class RuleKind(Enum):
    MEM = "mem"
    MEM_PLUS = "mem+"
    MEM_ZERO = "mem0"
    DUDENEY = "dudeney"
    LINEAR_SCALE = "scale"


@dataclass(frozen=True)
class MoveRule:
    """One memory rule.  ``cap`` is Dudeney's Y, ``ratio`` is scale's p/q.

    The ratio is kept as an exact rational so floor(p/q * k) is
    bit-exact at any k.
    """

    kind: RuleKind
    cap: int | None = None
    ratio: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind is RuleKind.DUDENEY:
            if self.cap is None or self.cap < 1:
                raise ValueError("dudeney rule needs a positive cap")
        elif self.cap is not None:
            raise ValueError("cap is only meaningful for dudeney")
        if self.kind is RuleKind.LINEAR_SCALE:
            if self.ratio is None or self.ratio < 1:
                raise ValueError("scale rule needs a ratio p/q >= 1")
        elif self.ratio is not None:
            raise ValueError("ratio is only meaningful for scale")

    @classmethod
    def mem(cls) -> "MoveRule":
        return cls(RuleKind.MEM)

    @classmethod
    def mem_plus(cls) -> "MoveRule":
        return cls(RuleKind.MEM_PLUS)

    @classmethod
    def mem_zero(cls) -> "MoveRule":
        return cls(RuleKind.MEM_ZERO)

    @classmethod
    def dudeney(cls, cap: int) -> "MoveRule":
        return cls(RuleKind.DUDENEY, cap=cap)

    @classmethod
    def linear_scale(cls, p: int, q: int = 1) -> "MoveRule":
        if q < 1:
            raise ValueError("scale denominator must be positive")
        return cls(RuleKind.LINEAR_SCALE, ratio=Fraction(p, q))

    @property
    def name(self) -> str:
        if self.kind is RuleKind.DUDENEY:
            return f"dudeney:{self.cap}"
        if self.kind is RuleKind.LINEAR_SCALE:
            return f"scale:{self.ratio.numerator}/{self.ratio.denominator}"
        return self.kind.value


def memfunction_allows(rule: MoveRule, k: int, m: int) -> bool:
    """O(1) membership test: may ``m`` be removed right after a removal of ``k``?

    Pure memory-function semantics; heap size is not considered here.
    """
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if rule.kind is RuleKind.MEM:
        return m >= k
    if rule.kind is RuleKind.MEM_PLUS:
        return m > k
    if rule.kind is RuleKind.MEM_ZERO:
        return m != k
    if rule.kind is RuleKind.DUDENEY:
        return m <= rule.cap and m != k
    # linear scale: m <= floor(p/q * k), kept in integers
    r = rule.ratio
    return m * r.denominator <= r.numerator * k


@dataclass(frozen=True)
class Position:
    """Heap of ``stones`` with canonical last-removal ``tag``.

    tag 0 is the start position, tag stones+1 the frontier, anything in
    between a literal last removal.
    """

    stones: int
    tag: int

    def __post_init__(self) -> None:
        if self.stones < 0:
            raise ValueError(f"negative heap: {self.stones}")
        if not 0 <= self.tag <= self.stones + 1:
            raise ValueError(f"tag {self.tag} not canonical for heap {self.stones}")

    @classmethod
    def start(cls, stones: int) -> "Position":
        return cls(stones, START_TAG)

    @classmethod
    def frontier(cls, stones: int) -> "Position":
        return cls(stones, stones + 1)

    @classmethod
    def exactly(cls, stones: int, k: int) -> "Position":
        if not 1 <= k <= stones:
            raise ValueError(f"last removal {k} out of range for heap {stones}")
        return cls(stones, k)

    @property
    def is_start(self) -> bool:
        return self.tag == START_TAG

    @property
    def is_frontier(self) -> bool:
        return self.tag == self.stones + 1

    @property
    def last_removal(self) -> int | None:
        """The literal last removal, or None for start/frontier tags."""
        if self.is_start or self.is_frontier:
            return None
        return self.tag


def canonical_key(rule: MoveRule, n: int, k_raw: int) -> Position:
    """Canonical position for heap ``n`` after a raw last removal ``k_raw``.

    ``k_raw`` 0 encodes the start; any value above ``n`` collapses to the
    frontier tag.  The mapping itself is rule-independent; the ``rule``
    argument documents the soundness contract (same key => same option
    set under that rule), which holds for every built-in family.
    """
    if n < 0:
        raise ValueError(f"negative heap: {n}")
    if k_raw < 0:
        raise ValueError(f"negative removal tag: {k_raw}")
    if k_raw == 0:
        return Position(n, START_TAG)
    if k_raw > n:
        return Position(n, n + 1)
    return Position(n, k_raw)


def allowed_moves(rule: MoveRule, pos: Position) -> list[int]:
    """All legal removals from ``pos``, strictly ascending, within [1, stones]."""
    n = pos.stones
    if n == 0:
        return []
    if pos.is_start:
        return list(range(1, n + 1))
    if pos.is_frontier:
        if rule.kind in (RuleKind.MEM, RuleKind.MEM_PLUS):
            return []
        if rule.kind is RuleKind.DUDENEY:
            return list(range(1, min(rule.cap, n) + 1))
        # mem0: the excluded echo is above the heap; scale: floor(p/q*k) >= n
        return list(range(1, n + 1))
    k = pos.tag
    if rule.kind is RuleKind.MEM:
        return list(range(k, n + 1))
    if rule.kind is RuleKind.MEM_PLUS:
        return list(range(k + 1, n + 1))
    if rule.kind is RuleKind.MEM_ZERO:
        return [m for m in range(1, n + 1) if m != k]
    if rule.kind is RuleKind.DUDENEY:
        return [m for m in range(1, min(rule.cap, n) + 1) if m != k]
    r = rule.ratio
    hi = min(n, (r.numerator * k) // r.denominator)
    return list(range(1, hi + 1))


def apply_move(rule: MoveRule, pos: Position, m: int) -> Position:
    """Remove ``m`` stones, returning the canonical successor position."""
    if m < 1 or m > pos.stones:
        raise IllegalMoveError(f"cannot remove {m} from heap {pos.stones}")
    if not pos.is_start and not _move_allowed_from(rule, pos, m):
        raise IllegalMoveError(f"removal {m} not allowed after {pos} under {rule.name}")
    return canonical_key(rule, pos.stones - m, m)


def _move_allowed_from(rule: MoveRule, pos: Position, m: int) -> bool:
    if pos.is_frontier:
        # every raw k > stones gives the same answer; use stones+1
        return memfunction_allows(rule, pos.stones + 1, m)
    return memfunction_allows(rule, pos.tag, m)
