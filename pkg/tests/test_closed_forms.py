import pytest
from hypothesis import given
from hypothesis import strategies as st

from memgames import (
    MoveRule,
    Position,
    compute_table,
    mem0_is_p_position,
    mem_grundy_diag,
    mem_plus_grundy,
    sector_of,
    triangular,
    twelve_diagonal_predicate,
    v2,
    v2_parity,
)


def test_triangular():
    assert [triangular(m) for m in (0, 1, 5)] == [0, 1, 15]
    with pytest.raises(ValueError):
        triangular(-1)


def test_mem_plus_grundy_examples():
    assert mem_plus_grundy(5, 1) == 2
    assert mem_plus_grundy(20, 1) == 5
    assert mem_plus_grundy(9, 3) == 2
    assert mem_plus_grundy(1, 1) == 0


@given(st.integers(min_value=1, max_value=10**9), st.integers(min_value=1, max_value=10**6))
def test_mem_plus_grundy_is_the_maximal_m(n, k):
    m = mem_plus_grundy(n, k)
    assert m * k + triangular(m) <= n
    assert (m + 1) * k + triangular(m + 1) > n


def test_mem_plus_formula_matches_engine(mem_plus_500):
    for n in range(1, 201):
        row = mem_plus_500.row(n)
        for k in range(1, n + 1):
            assert mem_plus_grundy(n, k) == int(row[k]), (n, k)


def test_sector_examples():
    assert sector_of(5, 1) == sector_of(8, 1)
    s = sector_of(5, 1)
    assert (s.m, s.lo, s.hi) == (2, 5, 8)
    s = sector_of(1, 1)
    assert (s.m, s.lo, s.hi) == (0, 0, 1)


def test_sector_of_14_2_against_brute_force(mem_plus_500):
    # the band of column 2 holding heap 14: scan the engine column directly
    value = mem_plus_500.value(14, 2)
    rows = [n for n in range(1, 101) if mem_plus_500.value(n, 2) == value]
    s = sector_of(14, 2)
    assert (s.m, s.lo, s.hi) == (value, min(rows), max(rows))
    assert (s.lo, s.hi) == (12, 17)


def test_sector_invariants(mem_plus_500):
    for n in range(1, 501, 7):
        for k in range(1, n + 1, 3):
            s = sector_of(n, k)
            assert s.lo <= n <= s.hi
            assert s.width == s.k + s.m + 1
            assert s.m == mem_plus_grundy(n, k) == mem_plus_500.value(n, k)


def test_sector_tiling_and_boundary_shift():
    for m in range(0, 31):
        for k in range(1, 31):
            lo = k * m + triangular(m)
            s = sector_of(max(lo, 1), k)
            if lo >= 1:
                assert (s.m, s.lo) == (m, lo)
            # sectors tile the column: the next heap starts band m+1
            above = sector_of(s.hi + 1, k)
            assert (above.m, above.lo) == (s.m + 1, s.hi + 1)
            # the same band one column right starts k lower than this band ends
            right = sector_of(max(s.hi - k, 1), k + 1)
            if s.hi - k >= 1:
                assert (right.m, right.lo) == (s.m, s.hi - k)


def test_mem_diag_examples():
    assert mem_grundy_diag(20, 5) == 4
    assert mem_grundy_diag(20, 4) is None
    for n in (1, 7, 450):
        assert mem_grundy_diag(n, n) == 1


def test_mem_diag_matches_engine(mem_500):
    for n in range(1, 201):
        row = mem_500.row(n)
        for k in range(1, n + 1):
            want = mem_grundy_diag(n, k)
            if want is not None:
                assert want == int(row[k]), (n, k)


def test_v2():
    assert v2(12) == 2
    assert v2(8) == 3
    assert v2(7) == 0
    with pytest.raises(ValueError):
        v2(0)


def test_v2_parity():
    assert v2_parity(0) == "even"
    assert v2_parity(2) == "odd"
    assert v2_parity(4) == "even"
    assert v2_parity(1) == "even"


@given(st.integers(min_value=1, max_value=10**12))
def test_v2_factorization(n):
    e = v2(n)
    assert n % (1 << e) == 0 and (n >> e) % 2 == 1


def test_p_position_examples():
    assert mem0_is_p_position(Position.exactly(4, 4))
    assert not mem0_is_p_position(Position.exactly(2, 2))
    assert mem0_is_p_position(Position.exactly(9, 9))
    assert not mem0_is_p_position(Position.exactly(7, 3))
    assert mem0_is_p_position(Position.start(0))
    assert mem0_is_p_position(Position.frontier(0))
    assert not mem0_is_p_position(Position.start(6))


def test_p_positions_match_engine(mem0_500):
    for n in range(0, 201):
        row = mem0_500.row(n)
        for tag in range(0, n + 2):
            expect = mem0_is_p_position(Position(n, tag))
            assert (int(row[tag]) == 0) == expect, (n, tag)


def test_twelve_diagonal_cases():
    # 96 = 3*2^5 is exceptional with odd valuation; 67 is plain with even
    # valuation; 16 = 2^4 is exceptional with even valuation (flipped to False)
    assert twelve_diagonal_predicate(96)
    assert twelve_diagonal_predicate(67)
    assert not twelve_diagonal_predicate(16)
    with pytest.raises(ValueError):
        twelve_diagonal_predicate(0)


def test_twelve_diagonal_confirmed_by_engine():
    table = compute_table(MoveRule.mem_zero(), 130)
    for k in (96, 67, 16, 3, 15, 30, 48, 64, 100):
        assert twelve_diagonal_predicate(k) == (table.value(k + 22, k) == 12), k
