"""
Presentations of the Borel rings, the image rings and the oriented rings
"""

import re
from dataclasses import dataclass
from typing import Optional, Tuple

import structlog

from grasschar.algebra.gf2poly import PolyGF2, VariableTable
from grasschar.algebra.groebner import GroebnerBasis, buchberger_reduced
from grasschar.algebra.quotient import GradedQuotient
from grasschar.core.exceptions import UnsupportedParameterError
from grasschar.rings.families import (
    IMAGE_TABLE,
    borel_table,
    check_t,
    g_poly,
    k2_table,
    oriented_table,
    wbar,
)

logger = structlog.get_logger(__name__)

CASES = ("minus1", "minus2", "minus3")
CASE_OFFSETS = {"minus1": 1, "minus2": 2, "minus3": 3}


@dataclass(frozen=True)
class GrassmannParams:
    """t, case (n = 2^t - 1, 2^t - 2, 2^t - 3) and gamma, used only in case minus1"""

    t: int
    case: str = "minus1"
    gamma: int = 0

    def __post_init__(self):
        check_t(self.t)
        if self.case not in CASE_OFFSETS:
            raise UnsupportedParameterError(f"case must be one of {', '.join(CASES)}, got {self.case!r}")
        if self.gamma not in (0, 1):
            raise UnsupportedParameterError(f"gamma must be 0 or 1, got {self.gamma!r}")
        if self.case != "minus1":
            object.__setattr__(self, "gamma", 0)

    @property
    def n(self) -> int:
        return 2 ** self.t - CASE_OFFSETS[self.case]

    @property
    def a_degree(self) -> int:
        return 2 ** self.t - 4


@dataclass(frozen=True)
class Presentation:
    """Generators of a graded ideal plus the cache key and label of its quotient"""

    key: str
    label: str
    table: VariableTable
    generators: Tuple[PolyGF2, ...]


def borel_presentation(n: int, k: int) -> Presentation:
    """I_{n,k} = (wbar(n-k+1), ..., wbar(n)) in Z2[w1..wk], lex w1 > ... > wk"""
    table = borel_table(k)
    if n < k:
        raise UnsupportedParameterError(f"Borel ring needs n >= k, got n={n}, k={k}")
    generators = tuple(wbar(r, k) for r in range(n - k + 1, n + 1))
    return Presentation(f"borel_n{n}_k{k}", f"H*(G_{n},{k})", table, generators)


def image_presentation(n: int) -> Presentation:
    """J_{n,3} = (g(n-2), g(n-1), g(n)) in Z2[w2, w3]"""
    if n < 6:
        raise UnsupportedParameterError(f"image ring needs n >= 6, got {n}")
    generators = tuple(g_poly(r) for r in (n - 2, n - 1, n))
    return Presentation(f"imageJ_n{n}", f"Z2[w2,w3]/J_{n},3", IMAGE_TABLE, generators)


def embed(p: PolyGF2, table: VariableTable) -> PolyGF2:
    """Same-named variables of `table`; all variables of p must be present"""
    return p.substitute({}, table)


def oriented_presentation(params: GrassmannParams) -> Presentation:
    t = params.t
    table = oriented_table(t)
    a = PolyGF2.variable(table, "a")
    w2 = PolyGF2.variable(table, "w2")
    if params.case == "minus1":
        relation = a ** 2 + embed(g_poly(2 ** t - 4), table) * a
        if params.gamma:
            relation = relation + w2 ** (2 ** t - 4)
        generators = (
            embed(g_poly(2 ** t - 2), table),
            embed(g_poly(2 ** t - 1), table),
            relation,
        )
    elif params.case == "minus2":
        generators = (embed(g_poly(2 ** t - 4), table), embed(g_poly(2 ** t - 2), table), a ** 2)
    else:
        generators = (embed(g_poly(2 ** t - 5), table), embed(g_poly(2 ** t - 4), table), a ** 2)
    key = f"oriented_t{t}_{params.case}_g{params.gamma}"
    label = f"H*(G~_{params.n},3) t={t} {params.case} gamma={params.gamma}"
    return Presentation(key, label, table, generators)


def oriented_k2_presentation(t: int) -> Presentation:
    """(w2^(2^(t-1)-1), b^2 + w2^(2^(t-1)-2) b) in Z2[b, w2]"""
    check_t(t)
    table = k2_table(t)
    b = PolyGF2.variable(table, "b")
    w2 = PolyGF2.variable(table, "w2")
    h = 2 ** (t - 1)
    generators = (w2 ** (h - 1), b ** 2 + w2 ** (h - 2) * b)
    return Presentation(f"oriented2_t{t}", f"H*(G~_{2 ** t - 2},2)", table, generators)


_KEY_PATTERNS = (
    (re.compile(r"^borel_n(\d+)_k(\d+)$"), lambda m: borel_presentation(int(m[1]), int(m[2]))),
    (re.compile(r"^imageJ_n(\d+)$"), lambda m: image_presentation(int(m[1]))),
    (
        re.compile(r"^oriented_t(\d+)_(minus[123])_g([01])$"),
        lambda m: oriented_presentation(GrassmannParams(int(m[1]), m[2], int(m[3]))),
    ),
    (re.compile(r"^oriented2_t(\d+)$"), lambda m: oriented_k2_presentation(int(m[1]))),
)


def presentation_for_key(key: str) -> Optional[Presentation]:
    for pattern, build in _KEY_PATTERNS:
        match = pattern.match(key)
        if match:
            return build(match)
    return None


def compute_basis(presentation: Presentation) -> GroebnerBasis:
    gb = buchberger_reduced(presentation.generators, presentation.table)
    logger.debug("Basis computed", ring=presentation.label, elements=len(gb))
    return gb


def build_ring(presentation: Presentation, gb: Optional[GroebnerBasis] = None) -> GradedQuotient:
    return GradedQuotient(gb if gb is not None else compute_basis(presentation), name=presentation.label)


def borel_ring(n: int, k: int) -> GradedQuotient:
    return build_ring(borel_presentation(n, k))


def image_ring(n: int) -> GradedQuotient:
    return build_ring(image_presentation(n))


def oriented_ring(params: GrassmannParams) -> GradedQuotient:
    return build_ring(oriented_presentation(params))


def oriented_ring_k2(t: int) -> GradedQuotient:
    return build_ring(oriented_k2_presentation(t))
