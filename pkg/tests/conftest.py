from pathlib import Path

import pytest

from memgames import MoveRule, compute_table

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def load_grid(name: str) -> list[list[int]]:
    """20x20 Grundy grid fixture: rows n=1..20, columns k=1..20."""
    rows = []
    for line in (FIXTURE_DIR / name).read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        rows.append([int(tok) for tok in line.split()])
    assert len(rows) == 20 and all(len(r) == 20 for r in rows)
    return rows


@pytest.fixture(scope="session")
def mem0_2000():
    return compute_table(MoveRule.mem_zero(), 2000)


@pytest.fixture(scope="session")
def mem0_500():
    return compute_table(MoveRule.mem_zero(), 500)


@pytest.fixture(scope="session")
def mem_500():
    return compute_table(MoveRule.mem(), 500)


@pytest.fixture(scope="session")
def mem_plus_500():
    return compute_table(MoveRule.mem_plus(), 500)
