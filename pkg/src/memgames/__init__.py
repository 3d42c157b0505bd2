"""Grundy values and structure of single-heap games with one move of memory."""

from .core import (
    IllegalMoveError,
    MoveRule,
    Position,
    RuleKind,
    allowed_moves,
    apply_move,
    canonical_key,
    memfunction_allows,
)
from .engine import (
    BudgetExceededError,
    CapacityError,
    GrundyTable,
    compute_table,
    grundy_oracle,
    mex,
    mex_without,
    oracle_table_values,
)
from .closed_forms import (
    SectorCoords,
    mem0_is_p_position,
    mem_grundy_diag,
    mem_plus_grundy,
    sector_of,
    triangular,
    twelve_diagonal_predicate,
    v2,
    v2_parity,
)
from .frontier import (
    ExceptionalEntry,
    FrontierReport,
    ImmortalCandidate,
    Mortal,
    MortalityClass,
    NotOnFrontierError,
    RuleMismatchError,
    Undetermined,
    build_frontier_report,
    classify_mortality,
    exceptional_positions,
    first_occurrence,
    frontier_values,
    immortality_scan,
    load_sequence_fixture,
    occurrences,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CapacityError",
    "ExceptionalEntry",
    "FrontierReport",
    "GrundyTable",
    "IllegalMoveError",
    "ImmortalCandidate",
    "Mortal",
    "MortalityClass",
    "MoveRule",
    "NotOnFrontierError",
    "Position",
    "RuleKind",
    "RuleMismatchError",
    "SectorCoords",
    "Undetermined",
    "allowed_moves",
    "apply_move",
    "build_frontier_report",
    "canonical_key",
    "classify_mortality",
    "compute_table",
    "exceptional_positions",
    "first_occurrence",
    "frontier_values",
    "grundy_oracle",
    "immortality_scan",
    "load_sequence_fixture",
    "mem0_is_p_position",
    "mem_grundy_diag",
    "mem_plus_grundy",
    "memfunction_allows",
    "mex",
    "mex_without",
    "occurrences",
    "oracle_table_values",
    "sector_of",
    "triangular",
    "twelve_diagonal_predicate",
    "v2",
    "v2_parity",
]
