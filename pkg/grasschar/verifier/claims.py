"""
Executable checks for every catalog claim

A check receives the claim context, the parameter set and an Evidence collector. It
records witnesses; any failed check turns the report into a failure, and Evidence.skip
marks a vacuous parameter range.
"""

from dataclasses import dataclass, field
from typing import List

from grasschar.algebra.gf2poly import PolyGF2, VariableTable, lucas_binom
from grasschar.algebra.groebner import ideal_member, ideals_equal, normal_form
from grasschar.algebra.quotient import GradedQuotient
from grasschar.rings.builders import GrassmannParams, embed, image_presentation
from grasschar.rings.families import (
    IMAGE_TABLE,
    borel_table,
    f1_closed_form,
    fukaya_lm,
    g_poly,
    image_basis_formula,
    oriented_basis_formula,
    reduce_mod_w1,
    s_poly_closed_form,
    wbar,
    wbar_closed,
    wbar_recurrent,
)
from grasschar.rings.gysin import gysin_dims
from grasschar.rings.maps import kernel_intersection, mult_w1, restriction_map
from grasschar.services.ring_registry import RingRegistry
from grasschar.verifier.catalog import claim
from grasschar.verifier.models import ClaimParams, Witness
from grasschar.verifier.tables import coefficient_tables

WBAR_RANGE = 200
SERIES_DEGREE = 60
MAX_LISTED = 5


class ClaimSkipped(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


@dataclass
class ClaimContext:
    registry: RingRegistry


@dataclass
class Evidence:
    witnesses: List[Witness] = field(default_factory=list)
    failed: bool = False

    def note(self, label: str, value: str) -> None:
        self.witnesses.append(Witness(label=label, value=value))

    def check(self, ok: bool, label: str, value: str) -> bool:
        self.note(label, value)
        if not ok:
            self.failed = True
        return ok

    def fail(self, label: str, value: str) -> None:
        self.check(False, label, value)

    def skip(self, reason: str = "degenerate") -> None:
        raise ClaimSkipped(reason)


def _grassmann(params: ClaimParams) -> GrassmannParams:
    return GrassmannParams(params.t, params.case or "minus1", params.gamma or 0)


def _listing(table: VariableTable, keys) -> str:
    keys = sorted(keys, reverse=True)
    shown = ", ".join(table.format_key(k) for k in keys[:MAX_LISTED])
    return shown + (f", ... ({len(keys)} total)" if len(keys) > MAX_LISTED else "")


# ----- polynomial families


@claim("wbar-consistency")
def check_wbar_consistency(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    bad = [r for r in range(WBAR_RANGE + 1) if wbar_closed(r, 3) != wbar_recurrent(r, 3)]
    ev.check(not bad, "closed vs recurrent", f"wbar(r) agree for r <= {WBAR_RANGE}" if not bad else f"differ at r = {bad[:MAX_LISTED]}")

    table = borel_table(3)
    total = PolyGF2.zero(table)
    for r in range(SERIES_DEGREE + 1):
        total = total + wbar_closed(r, 3)
    unit = PolyGF2.one(table)
    for name in table.names:
        unit = unit + PolyGF2.variable(table, name)
    product = unit * total
    low = [k for k in product.keys if table.degree_of(k) <= SERIES_DEGREE and k != 0]
    ok = not low and 0 in product.key_set
    ev.check(ok, "series inverse", f"(1+w1+w2+w3)*sum wbar(r) = 1 through degree {SERIES_DEGREE}" if ok else f"extra terms {_listing(table, low)}")

    bad = [r for r in range(WBAR_RANGE + 1) if reduce_mod_w1(wbar_closed(r, 3)) != g_poly(r)]
    ev.check(not bad, "w1 = 0", f"wbar(r) mod w1 = g(r) for r <= {WBAR_RANGE}" if not bad else f"differ at r = {bad[:MAX_LISTED]}")


@claim("g-recurrence")
def check_g_recurrence(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    w2 = PolyGF2.variable(IMAGE_TABLE, "w2")
    w3 = PolyGF2.variable(IMAGE_TABLE, "w3")
    bad = [r for r in range(WBAR_RANGE - 2) if g_poly(r + 3) != w2 * g_poly(r + 1) + w3 * g_poly(r)]
    ev.check(not bad, "recurrence", f"holds for r + 3 <= {WBAR_RANGE}" if not bad else f"fails at r = {bad[:MAX_LISTED]}")


@claim("g-vanish")
def check_g_vanish(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    g = g_poly(2 ** t - 3)
    ev.check(not g, f"g({2 ** t - 3})", str(g))
    w3 = PolyGF2.variable(IMAGE_TABLE, "w3")
    lhs = w3 * g_poly(2 ** t - 4)
    rhs = g_poly(2 ** t - 1)
    ev.check(lhs == rhs, f"w3*g({2 ** t - 4}) + g({2 ** t - 1})", str(lhs + rhs))


@claim("g-c-div-4")
def check_g_c_div_4(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    g = g_poly(2 ** params.t - 4)
    offending = [m for m in g.monomials() if m.exponents[1] % 4]
    if offending:
        ev.fail("w3 exponent not divisible by 4", ", ".join(IMAGE_TABLE.format_key(IMAGE_TABLE.key_of(m)) for m in offending))
    else:
        ev.note("monomials", f"{len(g)} monomials, all w3 exponents divisible by 4")


@claim("fukaya-lm")
def check_fukaya_lm(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    for i in range(t):
        f = g_poly(2 ** t - 3 + 2 ** i)
        expected = fukaya_lm(t, i)
        actual = IMAGE_TABLE.format_key(f.leading_key()) if f else "0"
        ev.check(bool(f) and f.leading_monomial() == expected, f"LM(f_{i})", actual)
    last = g_poly(2 ** t - 3 + 2 ** (t - 1))
    ev.check(last == PolyGF2.monomial(IMAGE_TABLE, w3=2 ** (t - 1) - 1), f"f_{t - 1}", str(last))


@claim("s-identity")
def check_s_identity(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    s = s_poly_closed_form(t)
    ev.check(s == g_poly(2 ** t - 4), f"S + g({2 ** t - 4})", str(s + g_poly(2 ** t - 4)))
    f1 = f1_closed_form(t)
    ev.check(f1 == g_poly(2 ** t - 1), f"f1 + g({2 ** t - 1})", str(f1 + g_poly(2 ** t - 1)))
    w3s = PolyGF2.variable(IMAGE_TABLE, "w3") * s
    ev.check(w3s == g_poly(2 ** t - 1), f"w3*S + g({2 ** t - 1})", str(w3s + g_poly(2 ** t - 1)))


@claim("tables")
def check_tables(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    table = borel_table(3)
    for row in coefficient_tables(params.t):
        product = PolyGF2.from_exponents(table, [row.multiplier]) * wbar(row.r, 3)
        direct = product.coeff(table.monomial(row.target))
        ev.check(direct == row.expected, f"{row.table} | {row.label}", f"coefficient {direct}")
        if row.triple is not None:
            a, b, c = row.triple
            shifted = tuple(m + e for m, e in zip(row.multiplier, row.triple))
            lucas = lucas_binom(a + b + c, a) * lucas_binom(b + c, b)
            ok = lucas == row.expected and shifted == row.target
            ev.check(ok, f"{row.table} | {row.label} | lucas", f"({a},{b},{c}) -> {lucas}")


# ----- Groebner bases of the image ideals


@claim("fukaya-reduced-membership")
def check_fukaya_reduced_membership(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    gb = ctx.registry.basis(image_presentation(2 ** t - 1))
    expected = {IMAGE_TABLE.key_of(fukaya_lm(t, i)) for i in range(t)}
    actual = set(gb.leading_keys)
    ev.check(actual == expected, "leading monomials", _listing(IMAGE_TABLE, actual))
    power = PolyGF2.monomial(IMAGE_TABLE, w3=2 ** (t - 1) - 1)
    ev.check(power in gb.elements, "pure power in basis", str(power))
    for i in range(t):
        remainder = normal_form(g_poly(2 ** t - 3 + 2 ** i), gb)
        ev.check(not remainder, f"NF(f_{i})", str(remainder))


@claim("ideal-eq-2t")
def check_ideal_eq_2t(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    a = ctx.registry.basis(image_presentation(2 ** t - 1))
    b = ctx.registry.basis(image_presentation(2 ** t))
    equal = ideals_equal(a, b)
    ev.check(equal, f"J({2 ** t - 1}) = J({2 ** t})", f"{len(a)} and {len(b)} basis elements, equal={equal}")


@claim("lemma-3.5")
def check_lemma_3_5(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    top = 2 ** t - 4
    ks = [k for k in range(1, top // 6 + 1) if top - 6 * k >= 0]
    if not ks:
        ev.skip("degenerate")
    gb = ctx.registry.basis(image_presentation(2 ** t - 1))
    for k in ks:
        m = PolyGF2.monomial(IMAGE_TABLE, w2=top - 6 * k, w3=4 * k)
        remainder = normal_form(m, gb)
        ev.check(not remainder, f"NF({m})", str(remainder))
    remainder = normal_form(PolyGF2.monomial(IMAGE_TABLE, w2=top), gb)
    ev.check(bool(remainder), f"NF(w2^{top})", str(remainder))


@claim("eq-g-square")
def check_eq_g_square(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    top = 2 ** t - 4
    gb = ctx.registry.basis(image_presentation(2 ** t - 1))
    w2_top = PolyGF2.monomial(IMAGE_TABLE, w2=top)
    remainder = normal_form(g_poly(top).square() + w2_top, gb)
    ev.check(not remainder, f"NF(g({top})^2 + w2^{top})", str(remainder))
    ev.check(bool(normal_form(w2_top, gb)), f"NF(w2^{top})", str(normal_form(w2_top, gb)))


@claim("lemma-4.2-membership")
def check_lemma_4_2(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    gb = ctx.registry.basis(image_presentation(2 ** t - 2))
    w2_top = PolyGF2.monomial(IMAGE_TABLE, w2=2 ** t - 4)
    member = ideal_member(w2_top, gb)
    ev.check(member, f"w2^{2 ** t - 4} in J({2 ** t - 2})", str(normal_form(w2_top, gb)))


# ----- kernel intersections in Borel rings


def _kernel_claim(ev: Evidence, source: GradedQuotient, target: GradedQuotient, kind: str, degree: int) -> None:
    ev.note("dimension", f"dim {source.name} in degree {degree} = {source.dimension(degree)}")
    kernel = kernel_intersection(mult_w1(source), restriction_map(kind, source, target), degree)
    ev.check(not kernel, "kernel", f"kernel dimension {len(kernel)} in degree {degree}")
    for v in kernel[:MAX_LISTED]:
        ev.fail("kernel vector", str(v))


@claim("prop-3.2")
def check_prop_3_2(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    r = ctx.registry
    _kernel_claim(ev, r.borel(2 ** t, 3), r.borel(2 ** t - 1, 3), "i-star", 2 ** t - 1)


@claim("prop-3.4")
def check_prop_3_4(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    r = ctx.registry
    _kernel_claim(ev, r.borel(2 ** t - 1, 3), r.borel(2 ** t - 2, 2), "j-star", 2 ** t - 4)


@claim("prop-4.1")
def check_prop_4_1(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    r = ctx.registry
    _kernel_claim(ev, r.borel(2 ** t - 1, 3), r.borel(2 ** t - 2, 3), "i-star", 2 ** t - 4)


@claim("prop-5.1")
def check_prop_5_1(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    r = ctx.registry
    _kernel_claim(ev, r.borel(2 ** t - 2, 3), r.borel(2 ** t - 3, 3), "i-star", 2 ** t - 4)


# ----- oriented presentations


@claim("prop-3.6")
def check_prop_3_6(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    ring = ctx.registry.oriented(_grassmann(params))
    table = ring.table
    a = PolyGF2.variable(table, "a")
    a_w2 = ring.normal_form(a * PolyGF2.monomial(table, w2=2 ** params.t - 4))
    cube = ring.normal_form(a ** 3)
    expected = a_w2 if params.gamma == 0 else PolyGF2.zero(table)
    ev.check(bool(a_w2), f"NF(a*w2^{2 ** params.t - 4})", str(a_w2))
    ev.check(cube == expected, "NF(a^3)", f"NF(a^3) = {cube}")


def _all_standard_keys(ring: GradedQuotient) -> set:
    top = ring.top_degree() or 0
    keys = set()
    for d in range(top + 1):
        keys.update(ring.basis_keys(d))
    return keys


@claim("basis-B")
def check_basis_b(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    ring = ctx.registry.oriented(_grassmann(params))
    actual = _all_standard_keys(ring)
    expected = {ring.table.key_of(m) for m in oriented_basis_formula(t)}
    ok = ev.check(actual == expected, "oriented basis", f"{len(actual)} standard monomials, formula gives {len(expected)}")
    if not ok:
        ev.fail("only in quotient", _listing(ring.table, actual - expected))
        ev.fail("only in formula", _listing(ring.table, expected - actual))

    image = ctx.registry.image(2 ** t - 1)
    actual = _all_standard_keys(image)
    expected = {IMAGE_TABLE.key_of(m) for m in image_basis_formula(t)}
    ev.check(actual == expected, "image basis", f"{len(actual)} standard monomials, formula gives {len(expected)}")


@claim("top-class")
def check_top_class(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    image = ctx.registry.image(2 ** t - 1)
    expected = IMAGE_TABLE.pack((2 ** (t - 2) - 1, 2 ** (t - 1) - 2))
    top = image.top_degree()
    ev.check(
        top == 2 ** (t + 1) - 8 and image.basis_keys(top) == (expected,),
        "image top class",
        f"degree {top}: {_listing(IMAGE_TABLE, image.basis_keys(top or 0))}",
    )
    ring = ctx.registry.oriented(_grassmann(params))
    expected = ring.table.pack((1, 2 ** (t - 2) - 1, 2 ** (t - 1) - 2))
    top = ring.top_degree()
    ev.check(
        top == 3 * 2 ** t - 12 and ring.basis_keys(top) == (expected,),
        "oriented top class",
        f"degree {top}: {_listing(ring.table, ring.basis_keys(top or 0))}",
    )


@claim("hilbert-vs-gysin")
def check_hilbert_vs_gysin(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    grassmann = _grassmann(params)
    n = grassmann.n
    dim = 3 * (n - 3)
    hilbert = ctx.registry.oriented(grassmann).hilbert_function(dim)
    gysin = gysin_dims(n, 3, dim, ring=ctx.registry.borel(n, 3))
    mismatched = [d for d in range(dim + 1) if hilbert[d] != gysin[d]]
    if mismatched:
        for d in mismatched[:MAX_LISTED]:
            ev.fail(f"degree {d}", f"presentation {hilbert[d]}, Gysin {gysin[d]}")
    else:
        ev.note("hilbert", ",".join(str(x) for x in hilbert))
        ev.note("total", f"degrees 0..{dim} agree, total dimension {sum(hilbert)}")


@claim("poincare-palindrome")
def check_poincare_palindrome(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    grassmann = _grassmann(params)
    dim = 3 * (grassmann.n - 3)
    ring = ctx.registry.oriented(grassmann)
    hilbert = ring.hilbert_function(dim)
    ev.check(hilbert == hilbert[::-1], "palindrome", ",".join(str(x) for x in hilbert))
    top = ring.top_degree()
    ev.check(top == dim, "top degree", f"{top}, manifold dimension {dim}")


@claim("a-square")
def check_a_square(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    grassmann = _grassmann(params)
    ring = ctx.registry.oriented(grassmann)
    table = ring.table
    top = 2 ** grassmann.t - 4
    a = PolyGF2.variable(table, "a")
    w2_top = PolyGF2.monomial(table, w2=top)
    square = ring.normal_form(a ** 2)

    if grassmann.case != "minus1":
        ev.check(not square, "NF(a^2)", str(square))
        ev.check(ring.is_zero(w2_top), f"NF(w2^{top})", str(ring.normal_form(w2_top)))
        return

    ev.check(bool(square), "NF(a^2)", str(square))
    g = embed(g_poly(top), table)

    def relation(x: PolyGF2) -> PolyGF2:
        value = x ** 2 + g * x
        if grassmann.gamma:
            value = value + w2_top
        return ring.normal_form(value)

    a_index = table.index("a")
    image_part = [
        PolyGF2(table, frozenset((k,)))
        for k in ring.basis_keys(top)
        if table.unpack(k)[a_index] == 0
    ]
    shifts = image_part + ([sum(image_part[1:], image_part[0])] if len(image_part) > 1 else [])
    for w in shifts:
        remainder = relation(a + w)
        ev.check(not remainder, f"relation at a + {w}", str(remainder))
    ev.note("shifts", f"{len(image_part)} image classes in degree {top}")


@claim("k2-ring")
def check_k2_ring(ctx: ClaimContext, params: ClaimParams, ev: Evidence) -> None:
    t = params.t
    h = 2 ** (t - 1)
    ring = ctx.registry.oriented_k2(t)
    table = ring.table
    b = PolyGF2.variable(table, "b")
    w2 = PolyGF2.variable(table, "w2")
    square = ring.normal_form(b ** 2)
    ev.check(square == w2 ** (h - 2) * b and bool(square), "NF(b^2)", str(square))
    for mu in (0, 1):
        shifted = b + w2 ** (h - 2) if mu else b
        ev.check(ring.normal_form(shifted ** 2) == square, f"NF((b + {mu}*w2^{h - 2})^2)", str(ring.normal_form(shifted ** 2)))
    w2_top = ring.normal_form(w2 ** (2 ** t - 4))
    ev.check(not w2_top, f"NF(w2^{2 ** t - 4})", str(w2_top))

    n = 2 ** t - 2
    dim = 2 * (n - 2)
    hilbert = ring.hilbert_function(dim)
    gysin = gysin_dims(n, 2, dim, ring=ctx.registry.borel(n, 2))
    ev.check(hilbert == gysin, "hilbert vs Gysin", ",".join(str(x) for x in hilbert))

