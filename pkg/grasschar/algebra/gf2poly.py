"""
Sparse polynomials over GF(2) with weighted grading, pure lex order and a text format

Monomials are packed into one int with a 17-bit field per variable (16 value bits and a
guard bit), the highest-priority variable in the most significant field. Integer order
on packed keys is then the lex order, multiplying monomials is adding keys and
divisibility is a subtraction that must leave every guard bit set.
"""

import re
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import structlog

from grasschar.core.exceptions import (
    AlignmentError,
    ExponentOverflowError,
    PolynomialParseError,
    UnknownVariableError,
    VariableTableError,
    ZeroPolynomialError,
)

logger = structlog.get_logger(__name__)

FIELD_BITS = 17
VALUE_MASK = (1 << (FIELD_BITS - 1)) - 1
MAX_EXPONENT = VALUE_MASK


def lucas_binom(n: int, k: int) -> int:
    """binom(n, k) mod 2: 1 iff every binary digit of k is at most the digit of n"""
    if n < 0 or k < 0:
        raise ValueError(f"lucas_binom needs non-negative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return int(k & (n - k) == 0)


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Monomial:
    """Exponent vector aligned with a VariableTable, plus its weighted degree"""

    exponents: Tuple[int, ...]
    weighted_degree: int

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.exponents)


@dataclass(frozen=True)
class VariableTable:
    """Ordered (name, degree) pairs; position is lex priority, earlier is greater"""

    vars: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        normalized = tuple((str(name), int(degree)) for name, degree in self.vars)
        if not normalized:
            raise VariableTableError("a variable table needs at least one variable")
        names = [name for name, _ in normalized]
        if any(not name for name in names):
            raise VariableTableError("variable names must be nonempty")
        if len(set(names)) != len(names):
            raise VariableTableError(f"duplicate variable names in {names}")
        for name, degree in normalized:
            if degree < 1:
                raise VariableTableError(f"variable {name} has degree {degree} < 1")
        object.__setattr__(self, "vars", normalized)

    @classmethod
    def of(cls, *vars: Tuple[str, int]) -> "VariableTable":
        return cls(tuple(vars))

    @cached_property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.vars)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(degree for _, degree in self.vars)

    @property
    def size(self) -> int:
        return len(self.vars)

    @cached_property
    def shifts(self) -> Tuple[int, ...]:
        n = len(self.vars)
        return tuple(FIELD_BITS * (n - 1 - i) for i in range(n))

    @cached_property
    def guard_mask(self) -> int:
        mask = 0
        for shift in self.shifts:
            mask |= 1 << (shift + FIELD_BITS - 1)
        return mask

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise VariableTableError(f"no variable {name!r} in table {self.header()}") from None

    def has(self, name: str) -> bool:
        return name in self._index

    def header(self) -> str:
        return ",".join(f"{name}:{degree}" for name, degree in self.vars)

    @classmethod
    def from_header(cls, text: str) -> "VariableTable":
        pairs = []
        for item in text.split(","):
            name, _, degree = item.strip().partition(":")
            if not degree:
                raise VariableTableError(f"malformed table entry {item!r}")
            pairs.append((name, int(degree)))
        return cls(tuple(pairs))

    # ----- packed monomial keys

    def pack(self, exponents: Sequence[int]) -> int:
        if len(exponents) != len(self.vars):
            raise AlignmentError(
                f"exponent vector of length {len(exponents)} for {len(self.vars)} variables"
            )
        key = 0
        for e, shift in zip(exponents, self.shifts):
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
            key |= e << shift
        return key

    def unpack(self, key: int) -> Tuple[int, ...]:
        return tuple((key >> shift) & VALUE_MASK for shift in self.shifts)

    def degree_of(self, key: int) -> int:
        return sum(((key >> shift) & VALUE_MASK) * degree for shift, degree in zip(self.shifts, self.degrees))

    def divides(self, divisor: int, key: int) -> bool:
        guard = self.guard_mask
        return ((key | guard) - divisor) & guard == guard

    def lcm(self, a: int, b: int) -> int:
        return self.pack([max(x, y) for x, y in zip(self.unpack(a), self.unpack(b))])

    def coprime(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.unpack(a), self.unpack(b)))

    def checked_product(self, a: int, b: int) -> int:
        product = a + b
        if product & self.guard_mask:
            raise ExponentOverflowError(f"exponent overflow multiplying monomials in {self.header()}")
        return product

    # ----- public monomials

    def monomial(self, exponents: Optional[Sequence[int]] = None, **by_name: int) -> Monomial:
        if exponents is None:
            vector = [0] * len(self.vars)
            for name, e in by_name.items():
                vector[self.index(name)] = e
            exponents = vector
        key = self.pack(exponents)
        return Monomial(self.unpack(key), self.degree_of(key))

    def key_of(self, monomial: Monomial) -> int:
        if len(monomial.exponents) != len(self.vars):
            raise AlignmentError(
                f"monomial with {len(monomial.exponents)} exponents used with table {self.header()}"
            )
        key = self.pack(monomial.exponents)
        if self.degree_of(key) != monomial.weighted_degree:
            raise AlignmentError(f"stored degree of {monomial} does not match table {self.header()}")
        return key

    def monomial_of(self, key: int) -> Monomial:
        return Monomial(self.unpack(key), self.degree_of(key))

    def format_key(self, key: int) -> str:
        factors = []
        for name, e in zip(self.names, self.unpack(key)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"

    def monomials_of_degree(self, degree: int) -> Tuple[int, ...]:
        """Packed keys of all monomials of the given weighted degree, descending lex"""
        return _monomials_of_degree(self, degree)


@lru_cache(maxsize=4096)
def _monomials_of_degree(table: VariableTable, degree: int) -> Tuple[int, ...]:
    if degree < 0:
        return ()
    found: List[int] = []
    degrees = table.degrees
    shifts = table.shifts
    last = len(degrees) - 1

    def walk(i: int, remaining: int, key: int) -> None:
        if i == last:
            if remaining % degrees[i] == 0:
                found.append(key | (remaining // degrees[i]) << shifts[i])
            return
        for e in range(remaining // degrees[i], -1, -1):
            walk(i + 1, remaining - e * degrees[i], key | e << shifts[i])

    walk(0, degree, 0)
    found.sort(reverse=True)
    return tuple(found)


def mono_compare(order: VariableTable, m1: Monomial, m2: Monomial) -> Comparison:
    """Pure lex comparison in variable-priority order, no degree pre-comparison"""
    k1 = order.key_of(m1)
    k2 = order.key_of(m2)
    if k1 > k2:
        return Comparison.GREATER
    if k1 < k2:
        return Comparison.LESS
    return Comparison.EQUAL


class PolyGF2:
    """Immutable sparse polynomial over GF(2): the set of its monomials"""

    __slots__ = ("table", "_set", "_keys")

    def __init__(self, table: VariableTable, keys: Iterable[int] = ()):
        terms = keys if isinstance(keys, frozenset) else _toggle_collect(keys)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_set", terms)
        object.__setattr__(self, "_keys", tuple(sorted(terms, reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("PolyGF2 is immutable")

    # ----- constructors

    @classmethod
    def zero(cls, table: VariableTable) -> "PolyGF2":
        return cls(table, frozenset())

    @classmethod
    def one(cls, table: VariableTable) -> "PolyGF2":
        return cls(table, frozenset((0,)))

    @classmethod
    def variable(cls, table: VariableTable, name: str) -> "PolyGF2":
        exponents = [0] * table.size
        exponents[table.index(name)] = 1
        return cls(table, frozenset((table.pack(exponents),)))

    @classmethod
    def from_monomial(cls, table: VariableTable, monomial: Monomial) -> "PolyGF2":
        return cls(table, frozenset((table.key_of(monomial),)))

    @classmethod
    def from_monomials(cls, table: VariableTable, monomials: Iterable[Monomial]) -> "PolyGF2":
        return cls(table, (table.key_of(m) for m in monomials))

    @classmethod
    def from_exponents(cls, table: VariableTable, vectors: Iterable[Sequence[int]]) -> "PolyGF2":
        return cls(table, (table.pack(v) for v in vectors))

    @classmethod
    def monomial(cls, table: VariableTable, **by_name: int) -> "PolyGF2":
        return cls.from_monomial(table, table.monomial(**by_name))

    # ----- inspection

    @property
    def keys(self) -> Tuple[int, ...]:
        """Packed monomials, strictly descending lex"""
        return self._keys

    @property
    def key_set(self) -> frozenset:
        return self._set

    def monomials(self) -> List[Monomial]:
        return [self.table.monomial_of(k) for k in self._keys]

    @property
    def terms(self) -> List[Monomial]:
        return self.monomials()

    def is_zero(self) -> bool:
        return not self._set

    def __bool__(self) -> bool:
        return bool(self._set)

    def __len__(self) -> int:
        return len(self._set)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials())

    def leading_key(self) -> int:
        if not self._keys:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        return self._keys[0]

    def leading_monomial(self) -> Monomial:
        return self.table.monomial_of(self.leading_key())

    def degree(self) -> Optional[int]:
        """Largest weighted degree of a term, None for zero"""
        if not self._set:
            return None
        return max(self.table.degree_of(k) for k in self._set)

    def is_homogeneous(self) -> bool:
        degrees = {self.table.degree_of(k) for k in self._set}
        return len(degrees) <= 1

    def homogeneous_components(self) -> Dict[int, "PolyGF2"]:
        parts: Dict[int, set] = {}
        for k in self._set:
            parts.setdefault(self.table.degree_of(k), set()).add(k)
        return {d: PolyGF2(self.table, frozenset(keys)) for d, keys in sorted(parts.items())}

    def coeff(self, monomial: Monomial) -> int:
        return int(self.table.key_of(monomial) in self._set)

    # ----- arithmetic

    def _check(self, other: "PolyGF2") -> None:
        if not isinstance(other, PolyGF2):
            raise TypeError(f"cannot combine PolyGF2 with {type(other).__name__}")
        if other.table is not self.table and other.table != self.table:
            raise AlignmentError(
                f"polynomials over different tables: {self.table.header()} vs {other.table.header()}"
            )

    def __add__(self, other: "PolyGF2") -> "PolyGF2":
        self._check(other)
        return PolyGF2(self.table, self._set ^ other._set)

    __sub__ = __add__

    def __neg__(self) -> "PolyGF2":
        return self

    def __mul__(self, other: "PolyGF2") -> "PolyGF2":
        self._check(other)
        guard = self.table.guard_mask
        acc: set = set()
        for a in self._set:
            for b in other._set:
                u = a + b
                if u & guard:
                    raise ExponentOverflowError(
                        f"exponent overflow in product over {self.table.header()}"
                    )
                if u in acc:
                    acc.remove(u)
                else:
                    acc.add(u)
        return PolyGF2(self.table, frozenset(acc))

    def square(self) -> "PolyGF2":
        """Frobenius: the square is the sum of the squared terms"""
        guard = self.table.guard_mask
        doubled = []
        for k in self._set:
            u = k << 1
            if u & guard:
                raise ExponentOverflowError(f"exponent overflow squaring over {self.table.header()}")
            doubled.append(u)
        return PolyGF2(self.table, frozenset(doubled))

    def __pow__(self, e: int) -> "PolyGF2":
        if e < 0:
            raise ValueError("negative exponents are not supported")
        result = PolyGF2.one(self.table)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def mul_monomial_key(self, key: int) -> "PolyGF2":
        return PolyGF2(self.table, frozenset(self.table.checked_product(k, key) for k in self._set))

    def substitute(self, images: Mapping[str, "PolyGF2"], target: VariableTable) -> "PolyGF2":
        """Ring homomorphism on generators

        Variables missing from `images` map to the same-named variable of `target`.
        """
        columns: List[PolyGF2] = []
        for name in self.table.names:
            if name in images:
                image = images[name]
                if image.table != target:
                    raise AlignmentError(f"image of {name} is not over {target.header()}")
                columns.append(image)
            elif target.has(name):
                columns.append(PolyGF2.variable(target, name))
            else:
                raise AlignmentError(f"no image for variable {name} in {target.header()}")

        powers: Dict[Tuple[int, int], PolyGF2] = {}
        result: set = set()
        for key in self._set:
            term = PolyGF2.one(target)
            for i, e in enumerate(self.table.unpack(key)):
                if e == 0:
                    continue
                cached = powers.get((i, e))
                if cached is None:
                    cached = columns[i] ** e
                    powers[(i, e)] = cached
                term = term * cached
                if not term:
                    break
            result.symmetric_difference_update(term._set)
        return PolyGF2(target, frozenset(result))

    # ----- protocol

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyGF2):
            return NotImplemented
        return self.table == other.table and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.table, self._set))

    def __str__(self) -> str:
        return print_poly(self)

    def __repr__(self) -> str:
        return f"PolyGF2({print_poly(self)!r})"


def _toggle_collect(keys: Iterable[int]) -> frozenset:
    acc: set = set()
    for k in keys:
        if k in acc:
            acc.remove(k)
        else:
            acc.add(k)
    return frozenset(acc)


# ----- functional API


def poly_add(p: PolyGF2, q: PolyGF2) -> PolyGF2:
    return p + q


def poly_mul(p: PolyGF2, q: PolyGF2) -> PolyGF2:
    return p * q


def poly_pow(p: PolyGF2, e: int) -> PolyGF2:
    return p ** e


def coeff_of(p: PolyGF2, m: Monomial) -> int:
    return p.coeff(m)


def print_poly(p: PolyGF2) -> str:
    if not p.keys:
        return "0"
    return " + ".join(p.table.format_key(k) for k in p.keys)


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[+*^]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_poly(text: str, table: VariableTable) -> PolyGF2:
    """Parse the canonical text grammar, tolerating whitespace around operators"""
    tokens = _tokenize(text)
    pos = 0

    def peek() -> Tuple[str, str, int]:
        return tokens[pos]

    def take(kind: str, value: Optional[str] = None) -> Tuple[str, str, int]:
        nonlocal pos
        token = tokens[pos]
        if token[0] != kind or (value is not None and token[1] != value):
            expected = value or kind
            found = token[1] or "end of input"
            raise PolynomialParseError(f"expected {expected}, found {found!r}", token[2], text)
        pos += 1
        return token

    def term() -> Optional[int]:
        kind, value, start = peek()
        if kind == "int":
            take("int")
            if value == "1":
                return 0
            if value == "0":
                return None
            raise PolynomialParseError(f"constant {value} is not 0 or 1", start, text)
        exponents = [0] * table.size
        while True:
            _, name, name_pos = take("name")
            if not table.has(name):
                raise UnknownVariableError(name, name_pos, text)
            e = 1
            if peek()[0] == "op" and peek()[1] == "^":
                take("op", "^")
                _, digits, digits_pos = take("int")
                e = int(digits)
                if e > MAX_EXPONENT:
                    raise ExponentOverflowError(f"exponent {e} at position {digits_pos} exceeds {MAX_EXPONENT}")
            exponents[table.index(name)] += e
            if peek()[0] == "op" and peek()[1] == "*":
                take("op", "*")
                continue
            break
        return table.pack(exponents)

    collected: List[int] = []
    while True:
        key = term()
        if key is not None:
            collected.append(key)
        if peek()[0] == "op" and peek()[1] == "+":
            take("op", "+")
            continue
        break
    take("end")
    return PolyGF2(table, collected)
