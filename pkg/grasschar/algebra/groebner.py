"""
Multivariate division, Buchberger's algorithm and reduced Groebner bases over GF(2)
"""

import heapq
from itertools import count
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import structlog

from grasschar.algebra.gf2poly import Monomial, PolyGF2, VariableTable, parse_poly
from grasschar.core.exceptions import (
    AlignmentError,
    NonHomogeneousError,
    PolynomialParseError,
    ZeroPolynomialError,
)

logger = structlog.get_logger(__name__)

ORDER_HEADER = "# order:"

Reducer = Tuple[int, Tuple[int, ...]]


def reduce_keys(terms: Iterable[int], reducers: Sequence[Reducer], table: VariableTable) -> Set[int]:
    """Full division of a term set by (leading key, tail keys) pairs

    `reducers` must be sorted by ascending leading key; the first divisor found is the
    reducer with the smallest leading monomial.
    """
    work: Set[int] = set()
    for k in terms:
        if k in work:
            work.remove(k)
        else:
            work.add(k)
    heap = [-k for k in work]
    heapq.heapify(heap)
    remainder: Set[int] = set()
    divides = table.divides

    while heap:
        k = -heapq.heappop(heap)
        if k not in work:
            continue
        work.remove(k)
        for lead, tail in reducers:
            if divides(lead, k):
                shift = k - lead
                for t in tail:
                    u = t + shift
                    if u in work:
                        work.remove(u)
                    else:
                        work.add(u)
                        heapq.heappush(heap, -u)
                break
        else:
            remainder.add(k)
    return remainder


class GroebnerBasis:
    """Immutable Groebner basis, elements stored by ascending leading monomial"""

    __slots__ = ("order", "elements", "_reducers")

    def __init__(self, order: VariableTable, elements: Iterable[PolyGF2]):
        items = []
        for p in elements:
            if p.table != order:
                raise AlignmentError(f"basis element over {p.table.header()}, expected {order.header()}")
            if not p:
                raise ZeroPolynomialError("a Groebner basis cannot contain the zero polynomial")
            items.append(p)
        items.sort(key=lambda p: p.leading_key())
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "elements", tuple(items))
        object.__setattr__(
            self, "_reducers", tuple((p.keys[0], p.keys[1:]) for p in items)
        )

    def __setattr__(self, name, value):
        raise AttributeError("GroebnerBasis is immutable")

    @property
    def reducers(self) -> Tuple[Reducer, ...]:
        return self._reducers

    @property
    def leading_keys(self) -> Tuple[int, ...]:
        return tuple(lead for lead, _ in self._reducers)

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [self.order.monomial_of(k) for k in self.leading_keys]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.order, self.elements))

    def __repr__(self) -> str:
        return f"GroebnerBasis({[str(p) for p in self.elements]})"

    def normal_form(self, p: PolyGF2) -> PolyGF2:
        return normal_form(p, self)

    def is_reduced(self) -> bool:
        divides = self.order.divides
        for i, p in enumerate(self.elements):
            for j, (lead, _) in enumerate(self._reducers):
                if i != j and any(divides(lead, k) for k in p.keys):
                    return False
        return True

    def certify(self) -> bool:
        """Re-check reducedness and closure of every S-polynomial"""
        if not self.is_reduced():
            logger.warning("Groebner basis is not reduced", elements=len(self))
            return False
        for i in range(len(self.elements)):
            for j in range(i + 1, len(self.elements)):
                s = s_polynomial(self.elements[i], self.elements[j], self.order)
                if normal_form(s, self):
                    logger.warning("S-polynomial does not reduce to zero", pair=(i, j))
                    return False
        return True

    def serialize(self, headers: Optional[Mapping[str, str]] = None) -> str:
        lines = [f"{ORDER_HEADER} {self.order.header()}"]
        for name, value in (headers or {}).items():
            lines.append(f"# {name}: {value}")
        lines.extend(str(p) for p in self.elements)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GroebnerBasis":
        basis, _ = parse_basis(text)
        return basis


def parse_basis(text: str) -> Tuple[GroebnerBasis, Dict[str, str]]:
    """Read the serialization format; returns the basis and the extra header lines"""
    lines = text.splitlines()
    if not lines or not lines[0].startswith(ORDER_HEADER):
        raise PolynomialParseError("missing order header", 0, text)
    table = VariableTable.from_header(lines[0][len(ORDER_HEADER):].strip())
    headers: Dict[str, str] = {}
    elements = []
    for line in lines[1:]:
        if not line.strip():
            continue
        if line.startswith("#"):
            name, _, value = line[1:].partition(":")
            headers[name.strip()] = value.strip()
            continue
        elements.append(parse_poly(line, table))
    return GroebnerBasis(table, elements), headers


def _check_table(p: PolyGF2, table: VariableTable) -> None:
    if p.table != table:
        raise AlignmentError(f"polynomial over {p.table.header()} used with {table.header()}")


def normal_form(p: PolyGF2, gb: GroebnerBasis) -> PolyGF2:
    _check_table(p, gb.order)
    if not gb.elements or not p:
        return p
    return PolyGF2(gb.order, frozenset(reduce_keys(p.key_set, gb.reducers, gb.order)))


def s_polynomial(f: PolyGF2, g: PolyGF2, order: VariableTable) -> PolyGF2:
    _check_table(f, order)
    _check_table(g, order)
    if not f or not g:
        raise ZeroPolynomialError("S-polynomial of the zero polynomial")
    lf, lg = f.leading_key(), g.leading_key()
    lcm = order.lcm(lf, lg)
    return f.mul_monomial_key(lcm - lf) + g.mul_monomial_key(lcm - lg)


def ideal_member(p: PolyGF2, gb: GroebnerBasis) -> bool:
    return not normal_form(p, gb)


def ideals_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    if a.order != b.order:
        raise AlignmentError(f"bases under different orders: {a.order.header()} vs {b.order.header()}")
    return set(a.elements) == set(b.elements)


def buchberger_reduced(
    generators: Iterable[PolyGF2],
    order: VariableTable,
    max_degree: Optional[int] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal under the lex order of `order`

    Pairs and generators are processed by ascending degree. With `max_degree` the run
    stops after that degree and the result is exact for normal forms up to it.
    """
    gens: List[PolyGF2] = []
    for g in generators:
        _check_table(g, order)
        if not g:
            continue
        if not g.is_homogeneous():
            raise NonHomogeneousError(f"generator {g} is not homogeneous")
        gens.append(g)
    if not gens:
        logger.debug("Zero ideal, empty basis")
        return GroebnerBasis(order, [])

    divides = order.divides
    leads: List[int] = []
    polys: List[FrozenSet[int]] = []
    reducers: List[Reducer] = []
    pending: Set[Tuple[int, int]] = set()
    queue: List[Tuple[int, int, int, int, Optional[FrozenSet[int]]]] = []
    tick = count()
    stats = {"pairs": 0, "coprime": 0, "chain": 0, "zero": 0}

    for g in gens:
        heapq.heappush(queue, (g.degree(), next(tick), -1, -1, g.key_set))

    def add_element(terms: Set[int]) -> None:
        ordered = sorted(terms, reverse=True)
        lead = ordered[0]
        index = len(leads)
        for i, other in enumerate(leads):
            lcm = order.lcm(other, lead)
            heapq.heappush(queue, (order.degree_of(lcm), next(tick), i, index, None))
            pending.add((i, index))
        leads.append(lead)
        polys.append(frozenset(terms))
        reducers.append((lead, tuple(ordered[1:])))
        reducers.sort()

    while queue:
        degree, _, i, j, terms = heapq.heappop(queue)
        if max_degree is not None and degree > max_degree:
            break
        if i < 0:
            h: Iterable[int] = terms
        else:
            pending.discard((i, j))
            stats["pairs"] += 1
            li, lj = leads[i], leads[j]
            if order.coprime(li, lj):
                stats["coprime"] += 1
                continue
            lcm = order.lcm(li, lj)
            if any(
                m not in (i, j)
                and divides(leads[m], lcm)
                and (min(i, m), max(i, m)) not in pending
                and (min(j, m), max(j, m)) not in pending
                for m in range(len(leads))
            ):
                stats["chain"] += 1
                continue
            si, sj = lcm - li, lcm - lj
            h = [k + si for k in polys[i]] + [k + sj for k in polys[j]]
        remainder = reduce_keys(h, reducers, order)
        if remainder:
            add_element(remainder)
        elif i >= 0:
            stats["zero"] += 1

    basis = _interreduce(leads, polys, order)
    logger.debug("Groebner basis computed", elements=len(basis), generators=len(gens), **stats)
    return basis


def _interreduce(leads: List[int], polys: List[FrozenSet[int]], order: VariableTable) -> GroebnerBasis:
    divides = order.divides
    keep = []
    for i, lead in enumerate(leads):
        if any(j != i and divides(other, lead) and (other != lead or j < i) for j, other in enumerate(leads)):
            continue
        keep.append(i)

    minimal: List[Reducer] = sorted(
        (leads[i], tuple(sorted(polys[i] - {leads[i]}, reverse=True))) for i in keep
    )
    reduced = []
    for lead, tail in minimal:
        rest = reduce_keys(tail, minimal, order)
        reduced.append(PolyGF2(order, frozenset(rest | {lead})))
    return GroebnerBasis(order, reduced)
