"""
Shared fixtures: isolated settings, an uncached ring registry and a Groebner-free
dimension oracle
"""

from typing import Callable, Dict, Iterable, List

import pytest

from grasschar.algebra.gf2poly import PolyGF2, VariableTable
from grasschar.core.config import get_settings
from grasschar.services.ring_registry import RingRegistry


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of integer bit rows by elimination on the highest set bit"""
    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def slice_dimension(table: VariableTable, generators: List[PolyGF2], degree: int) -> int:
    """dim of the degree slice of Z2[vars]/(generators), via the span of monomial multiples"""
    monomials = table.monomials_of_degree(degree)
    position = {k: i for i, k in enumerate(monomials)}
    rows = []
    for g in generators:
        if not g or g.degree() > degree:
            continue
        for m in table.monomials_of_degree(degree - g.degree()):
            row = 0
            for k in g.mul_monomial_key(m).keys:
                row ^= 1 << position[k]
            rows.append(row)
    return len(monomials) - gf2_rank(rows)


@pytest.fixture
def dimension_oracle() -> Callable[[VariableTable, List[PolyGF2], int], int]:
    return slice_dimension


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("GRASSCHAR_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("GRASSCHAR_LOG_LEVEL", "ERROR")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def registry() -> RingRegistry:
    return RingRegistry()
