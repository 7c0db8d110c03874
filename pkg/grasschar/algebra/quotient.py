"""
Graded quotient algebras: standard-monomial bases, Hilbert functions and normal forms
read from per-degree reduction tables
"""

from typing import Dict, List, Optional, Tuple

import structlog

from grasschar.algebra.gf2poly import Monomial, PolyGF2, VariableTable
from grasschar.algebra.groebner import GroebnerBasis
from grasschar.core.exceptions import AlignmentError, SealedRangeError

logger = structlog.get_logger(__name__)


class GradedQuotient:
    """Z2[vars] / (gb) with lazily filled, sealable per-degree caches

    Coefficient masks use bit i for the i-th standard monomial of the degree, the
    standard monomials being listed in descending lex order.
    """

    def __init__(self, gb: GroebnerBasis, name: str = ""):
        self.table: VariableTable = gb.order
        self.gb = gb
        self.name = name or "quotient"
        self._basis: Dict[int, Tuple[int, ...]] = {}
        self._position: Dict[int, Dict[int, int]] = {}
        self._tables: Dict[int, Dict[int, int]] = {}
        self._staircase: Optional[Dict[int, List[int]]] = None
        self._sealed_to: Optional[int] = None
        self._bound = self._compute_degree_bound()

    def __repr__(self) -> str:
        return f"GradedQuotient({self.name!r}, {self.table.header()}, gb={len(self.gb)})"

    # ----- degree range

    def _compute_degree_bound(self) -> Optional[int]:
        powers: Dict[int, int] = {}
        for m in self.gb.leading_monomials:
            support = [i for i, e in enumerate(m.exponents) if e]
            if len(support) == 1:
                i = support[0]
                e = m.exponents[i]
                powers[i] = min(e, powers.get(i, e))
        if len(powers) < self.table.size:
            return None
        return sum((powers[i] - 1) * d for i, d in enumerate(self.table.degrees))

    def degree_bound(self) -> Optional[int]:
        """Degree above which every graded piece vanishes, None for infinite quotients"""
        return self._bound

    def is_finite(self) -> bool:
        return self._bound is not None

    def top_degree(self) -> Optional[int]:
        if self._bound is None:
            return None
        staircase = self._full_staircase()
        return max(staircase) if staircase else None

    @property
    def sealed_to(self) -> Optional[int]:
        return self._sealed_to

    @property
    def is_sealed(self) -> bool:
        return self._sealed_to is not None

    def _check_range(self, degree: int) -> None:
        if self._sealed_to is None or degree <= self._sealed_to or self._bound is not None:
            return
        raise SealedRangeError(
            f"{self.name}: degree {degree} above the sealed range 0..{self._sealed_to}"
        )

    # ----- standard monomials

    def _full_staircase(self) -> Dict[int, List[int]]:
        """All standard monomials of a finite quotient grouped by degree"""
        if self._staircase is None:
            divides = self.table.divides
            leads = self.gb.leading_keys
            unit_keys = [self.table.pack([int(i == j) for j in range(self.table.size)]) for i in range(self.table.size)]
            seen = {0}
            frontier = [0]
            while frontier:
                grown = []
                for m in frontier:
                    for unit in unit_keys:
                        u = m + unit
                        if u in seen or any(divides(lead, u) for lead in leads):
                            continue
                        seen.add(u)
                        grown.append(u)
                frontier = grown
            if any(divides(lead, 0) for lead in leads):
                seen.discard(0)
            staircase: Dict[int, List[int]] = {}
            for k in seen:
                staircase.setdefault(self.table.degree_of(k), []).append(k)
            self._staircase = staircase
            logger.debug("Staircase enumerated", ring=self.name, dimension=len(seen))
        return self._staircase

    def basis_keys(self, degree: int) -> Tuple[int, ...]:
        cached = self._basis.get(degree)
        if cached is not None:
            return cached
        if degree < 0:
            return ()
        self._check_range(degree)
        if self._bound is not None:
            keys = sorted(self._full_staircase().get(degree, ()), reverse=True)
        else:
            divides = self.table.divides
            leads = self.gb.leading_keys
            keys = [
                k for k in self.table.monomials_of_degree(degree)
                if not any(divides(lead, k) for lead in leads)
            ]
        basis = tuple(keys)
        if self._sealed_to is None:
            self._basis[degree] = basis
            self._position[degree] = {k: i for i, k in enumerate(basis)}
        return basis

    def standard_monomials(self, degree: int) -> List[Monomial]:
        return [self.table.monomial_of(k) for k in self.basis_keys(degree)]

    def dimension(self, degree: int) -> int:
        return len(self.basis_keys(degree))

    def hilbert_function(self, up_to: int) -> List[int]:
        if up_to < 0:
            raise ValueError("up_to must be non-negative")
        return [self.dimension(d) for d in range(up_to + 1)]

    def total_dimension(self) -> Optional[int]:
        if self._bound is None:
            return None
        return sum(len(v) for v in self._full_staircase().values())

    # ----- reduction tables

    def _reduction_table(self, degree: int) -> Dict[int, int]:
        table = self._tables.get(degree)
        if table is not None:
            return table
        basis = self.basis_keys(degree)
        table = {}
        if basis:
            position = self._position.get(degree) or {k: i for i, k in enumerate(basis)}
            divides = self.table.divides
            reducers = self.gb.reducers
            for k in reversed(self.table.monomials_of_degree(degree)):
                pos = position.get(k)
                if pos is not None:
                    table[k] = 1 << pos
                    continue
                mask = 0
                for lead, tail in reducers:
                    if divides(lead, k):
                        shift = k - lead
                        for t in tail:
                            mask ^= table[t + shift]
                        break
                table[k] = mask
        if self._sealed_to is None:
            self._tables[degree] = table
        return table

    def reduce_key(self, key: int) -> int:
        """Coefficient mask of the normal form of one monomial"""
        degree = self.table.degree_of(key)
        return self._reduction_table(degree).get(key, 0)

    def coordinates(self, p: PolyGF2, degree: int) -> int:
        """Coefficient mask of the degree-`degree` part of NF(p)"""
        self._check_table(p)
        table = self._reduction_table(degree)
        mask = 0
        degree_of = self.table.degree_of
        for k in p.key_set:
            if degree_of(k) == degree:
                mask ^= table.get(k, 0)
        return mask

    def element(self, mask: int, degree: int) -> PolyGF2:
        basis = self.basis_keys(degree)
        keys = [k for i, k in enumerate(basis) if mask >> i & 1]
        return PolyGF2(self.table, frozenset(keys))

    def normal_form(self, p: PolyGF2) -> PolyGF2:
        self._check_table(p)
        by_degree: Dict[int, int] = {}
        degree_of = self.table.degree_of
        for k in p.key_set:
            d = degree_of(k)
            if self._bound is not None and d > self._bound:
                continue
            by_degree[d] = by_degree.get(d, 0) ^ self._reduction_table(d).get(k, 0)
        keys: List[int] = []
        for d, mask in by_degree.items():
            if mask:
                basis = self.basis_keys(d)
                keys.extend(k for i, k in enumerate(basis) if mask >> i & 1)
        return PolyGF2(self.table, frozenset(keys))

    def is_zero(self, p: PolyGF2) -> bool:
        return not self.normal_form(p)

    def _check_table(self, p: PolyGF2) -> None:
        if p.table != self.table:
            raise AlignmentError(f"polynomial over {p.table.header()} used in {self.name}")

    # ----- sealing

    def seal(self, up_to: Optional[int] = None) -> "GradedQuotient":
        """Fill bases and reduction tables for degrees 0..up_to, then freeze the caches

        Finite quotients default to their top degree.
        """
        if self._sealed_to is not None:
            return self
        if up_to is None:
            top = self.top_degree()
            if top is None and self._bound is None:
                raise SealedRangeError(f"{self.name}: an infinite quotient needs an explicit seal degree")
            up_to = top if top is not None else 0
        for d in range(up_to + 1):
            self.basis_keys(d)
            self._reduction_table(d)
        self._sealed_to = up_to
        logger.debug("Quotient sealed", ring=self.name, up_to=up_to)
        return self
