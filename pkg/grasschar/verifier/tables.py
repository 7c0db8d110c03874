"""
Coefficient tables used in the kernel arguments

Each row names a product (a monomial in w1, w2, w3 times wbar(r)), a target monomial,
the expected coefficient and, when the target can occur at all, the exponent triple
(a, b, c) of the target divided by the multiplier.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class TableRow:
    table: str
    label: str
    multiplier: Triple
    r: int
    target: Triple
    expected: int
    triple: Optional[Triple] = None


def coefficient_tables(t: int) -> List[TableRow]:
    h = 2 ** (t - 1)
    top = 2 ** t
    rows: List[TableRow] = []

    target = (4, h - 2, 0)
    rows += [
        TableRow("w1^4 w2^(h-2)", "alpha w1^3 wbar(2^t-3)", (3, 0, 0), top - 3, target, 1, (1, h - 2, 0)),
        TableRow("w1^4 w2^(h-2)", "beta w1 w2 wbar(2^t-3)", (1, 1, 0), top - 3, target, 0, (3, h - 3, 0)),
        TableRow("w1^4 w2^(h-2)", "mu w3 wbar(2^t-3)", (0, 0, 1), top - 3, target, 0),
        TableRow("w1^4 w2^(h-2)", "lambda w1^2 wbar(2^t-2)", (2, 0, 0), top - 2, target, 0, (2, h - 2, 0)),
        TableRow("w1^4 w2^(h-2)", "(nu+mu) w1 wbar(2^t-1)", (1, 0, 0), top - 1, target, 0, (3, h - 2, 0)),
    ]

    target = (3, h - 3, 1)
    rows += [
        TableRow("w1^3 w2^(h-3) w3", "alpha w1^3 wbar(2^t-3)", (3, 0, 0), top - 3, target, 0, (0, h - 3, 1)),
        TableRow("w1^3 w2^(h-3) w3", "beta w1 w2 wbar(2^t-3)", (1, 1, 0), top - 3, target, 1, (2, h - 4, 1)),
        TableRow("w1^3 w2^(h-3) w3", "mu w3 wbar(2^t-3)", (0, 0, 1), top - 3, target, 0, (3, h - 3, 0)),
        TableRow("w1^3 w2^(h-3) w3", "lambda w1^2 wbar(2^t-2)", (2, 0, 0), top - 2, target, 0, (1, h - 3, 1)),
        TableRow("w1^3 w2^(h-3) w3", "nu mu w1 wbar(2^t-1)", (1, 0, 0), top - 1, target, 0, (2, h - 3, 1)),
    ]

    rows += [
        TableRow("single coefficients", "w2^(h-1) in wbar(2^t-2)", (0, 0, 0), top - 2, (0, h - 1, 0), 1, (0, h - 1, 0)),
        TableRow("single coefficients", "w1^(2^t-3) in wbar(2^t-3)", (0, 0, 0), top - 3, (top - 3, 0, 0), 1, (top - 3, 0, 0)),
        TableRow("single coefficients", "w1^3 w2^(h-3) in w1 wbar(2^t-4)", (1, 0, 0), top - 4, (3, h - 3, 0), 1, (2, h - 3, 0)),
        TableRow("single coefficients", "w1^3 w2^(h-3) in wbar(2^t-3)", (0, 0, 0), top - 3, (3, h - 3, 0), 0, (3, h - 3, 0)),
        TableRow("single coefficients", "w1 w2^(h-2) in wbar(2^t-3)", (0, 0, 0), top - 3, (1, h - 2, 0), 1, (1, h - 2, 0)),
    ]

    target = (top - 5, 1, 0)
    rows += [
        TableRow("w1^(2^t-5) w2", "alpha w1^2 wbar(2^t-5)", (2, 0, 0), top - 5, target, 0, (top - 7, 1, 0)),
        TableRow("w1^(2^t-5) w2", "lambda w1 wbar(2^t-4)", (1, 0, 0), top - 4, target, 1, (top - 6, 1, 0)),
        TableRow("w1^(2^t-5) w2", "mu wbar(2^t-3)", (0, 0, 0), top - 3, target, 0, (top - 5, 1, 0)),
    ]
    return rows
