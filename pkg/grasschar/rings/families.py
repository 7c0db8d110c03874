"""
Polynomial families of the Borel presentation

- wbar(r, k): homogeneous parts of the inverse of 1 + w1 + ... + wk
- g_poly(r): wbar(r, 3) with w1 set to zero, a polynomial in w2, w3
- the family f_i = g(2^t - 3 + 2^i) and closed forms of two of its members
- additive bases of the image and oriented rings described by exponent inequalities
"""

from functools import lru_cache
from typing import List

import structlog

from grasschar.algebra.gf2poly import Monomial, PolyGF2, VariableTable, lucas_binom
from grasschar.core.exceptions import FamilyIdentityError, UnsupportedParameterError

logger = structlog.get_logger(__name__)

IMAGE_TABLE = VariableTable.of(("w2", 2), ("w3", 3))

_BOREL_TABLES = {
    1: VariableTable.of(("w1", 1)),
    2: VariableTable.of(("w1", 1), ("w2", 2)),
    3: VariableTable.of(("w1", 1), ("w2", 2), ("w3", 3)),
}


def borel_table(k: int) -> VariableTable:
    try:
        return _BOREL_TABLES[k]
    except KeyError:
        raise UnsupportedParameterError(f"k must be in 1..3, got {k}") from None


@lru_cache(maxsize=None)
def oriented_table(t: int) -> VariableTable:
    """(a, w2, w3) with |a| = 2^t - 4, lex a > w2 > w3"""
    return VariableTable.of(("a", 2 ** t - 4), ("w2", 2), ("w3", 3))


@lru_cache(maxsize=None)
def k2_table(t: int) -> VariableTable:
    """(b, w2) with |b| = 2^t - 4, lex b > w2"""
    return VariableTable.of(("b", 2 ** t - 4), ("w2", 2))


def check_t(t: int, t_max: int = 8) -> None:
    if not 3 <= t <= t_max:
        raise UnsupportedParameterError(f"t must be in 3..{t_max}, got {t}")


# ----- wbar


@lru_cache(maxsize=None)
def wbar_closed(r: int, k: int = 3) -> PolyGF2:
    """Sum over a + 2b + 3c = r of binom(a+b+c, a) binom(b+c, b) w1^a w2^b w3^c"""
    table = borel_table(k)
    if r < 0:
        return PolyGF2.zero(table)
    vectors = []
    for c in range(r // 3 + 1 if k >= 3 else 1):
        for b in range((r - 3 * c) // 2 + 1 if k >= 2 else 1):
            a = r - 3 * c - 2 * b
            if lucas_binom(a + b + c, a) and lucas_binom(b + c, b):
                vectors.append((a, b, c)[:k])
    return PolyGF2.from_exponents(table, vectors)


@lru_cache(maxsize=3)
def _wbar_series(k: int) -> List[PolyGF2]:
    return [PolyGF2.one(borel_table(k))]


def wbar_recurrent(r: int, k: int = 3) -> PolyGF2:
    """wbar(r) = w1 wbar(r-1) + ... + wk wbar(r-k), wbar(0) = 1"""
    table = borel_table(k)
    if r < 0:
        return PolyGF2.zero(table)
    series = _wbar_series(k)
    generators = [PolyGF2.variable(table, name) for name in table.names]
    while len(series) <= r:
        m = len(series)
        acc = PolyGF2.zero(table)
        for i, w in enumerate(generators, start=1):
            if m - i >= 0:
                acc = acc + w * series[m - i]
        series.append(acc)
    return series[r]


def wbar(r: int, k: int = 3) -> PolyGF2:
    borel_table(k)
    if r < 0:
        raise ValueError(f"wbar needs r >= 0, got {r}")
    recurrent = wbar_recurrent(r, k)
    if k == 3:
        closed = wbar_closed(r, 3)
        if closed != recurrent:
            raise FamilyIdentityError(f"closed and recurrent wbar({r}) differ")
    return recurrent


def reduce_mod_w1(p: PolyGF2) -> PolyGF2:
    """Image in Z2[w2, w3] of a polynomial in w1, w2, w3 under w1 -> 0"""
    return p.substitute({"w1": PolyGF2.zero(IMAGE_TABLE)}, IMAGE_TABLE)


# ----- g family


@lru_cache(maxsize=None)
def g_poly(r: int) -> PolyGF2:
    """Sum over 2b + 3c = r of binom(b+c, b) w2^b w3^c"""
    if r < 0:
        return PolyGF2.zero(IMAGE_TABLE)
    vectors = [
        (b, c)
        for c in range(r // 3 + 1)
        if (r - 3 * c) % 2 == 0
        for b in [(r - 3 * c) // 2]
        if lucas_binom(b + c, b)
    ]
    return PolyGF2.from_exponents(IMAGE_TABLE, vectors)


def fukaya_lm(t: int, i: int) -> Monomial:
    """Expected leading monomial w2^(2^(t-1) - 2^i) w3^(2^i - 1) of f_i"""
    return IMAGE_TABLE.monomial((2 ** (t - 1) - 2 ** i, 2 ** i - 1))


def fukaya_family(t: int) -> List[PolyGF2]:
    """[f_0, ..., f_{t-1}] with f_i = g(2^t - 3 + 2^i)"""
    check_t(t)
    family = [g_poly(2 ** t - 3 + 2 ** i) for i in range(t)]
    for i, f in enumerate(family):
        if not f or f.leading_monomial() != fukaya_lm(t, i):
            raise FamilyIdentityError(f"leading monomial of f_{i} at t={t} is not {fukaya_lm(t, i)}")
    last = PolyGF2.monomial(IMAGE_TABLE, w3=2 ** (t - 1) - 1)
    if family[-1] != last:
        raise FamilyIdentityError(f"f_{t - 1} at t={t} is not the pure power {last}")
    return family


def s_poly_closed_form(t: int) -> PolyGF2:
    """Sum over k of binom(2^(t-1)-1-k, 2k+1) w2^(2^(t-1)-2-3k) w3^(2k)"""
    h = 2 ** (t - 1)
    vectors = [
        (h - 2 - 3 * k, 2 * k)
        for k in range((h - 2) // 3 + 1)
        if h - 1 - k >= 2 * k + 1 and lucas_binom(h - 1 - k, 2 * k + 1)
    ]
    return PolyGF2.from_exponents(IMAGE_TABLE, vectors)


def f1_closed_form(t: int) -> PolyGF2:
    h = 2 ** (t - 1)
    vectors = [
        (h - 2 - 3 * k, 2 * k + 1)
        for k in range((h - 2) // 3 + 1)
        if h - 1 - k >= 2 * k + 1 and lucas_binom(h - 1 - k, 2 * k + 1)
    ]
    return PolyGF2.from_exponents(IMAGE_TABLE, vectors)


# ----- additive bases described by exponents


def _in_image_basis(t: int, b: int, c: int) -> bool:
    return all(b < 2 ** (t - 1) - 2 ** i or c < 2 ** i - 1 for i in range(t))


def image_basis_formula(t: int) -> List[Monomial]:
    """Monomials w2^b w3^c not divisible by any w2^(2^(t-1)-2^i) w3^(2^i-1), descending lex"""
    h = 2 ** (t - 1)
    found = [
        IMAGE_TABLE.monomial((b, c))
        for b in range(h - 1, -1, -1)
        for c in range(h - 1, -1, -1)
        if _in_image_basis(t, b, c)
    ]
    return found


def oriented_basis_formula(t: int) -> List[Monomial]:
    """a^r w2^b w3^c with r < 2 and (b, c) in the image basis, descending lex"""
    table = oriented_table(t)
    return [
        table.monomial((r, m.exponents[0], m.exponents[1]))
        for r in (1, 0)
        for m in image_basis_formula(t)
    ]
