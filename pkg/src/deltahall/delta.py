"""Delta-Hall numbers, the Delta-Hall algebra and the 1-periodic derived Hall algebra.

A Delta-Hall number counts three-cycles of short exact sequences

    0 -> N -> A -> I -> 0,   0 -> I -> B -> L -> 0,   0 -> L -> M -> N -> 0

weighted by v**<L,I,N> * a_L a_I a_N / a_M, with v = sqrt(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import BasisAlgebra, Element
from .coeff import QuadNumber, VSum, vpow
from .quiver import Vec
from .repcat import HallTables, TruncationError


@dataclass(frozen=True)
class ThreeCycle:
    a: int
    b: int
    m: int
    l: int
    i: int
    n: int
    multiplicity: int  # F^B_LI * F^M_NL * F^A_IN


def lin_bracket(tables: HallTables, l: int, i: int, n: int) -> int:
    e = tables.euler
    return e(l, i) + e(i, i) + e(i, n) - e(l, n)


def _halves(a: Vec, b: Vec, m: Vec) -> tuple[Vec, Vec, Vec] | None:
    """Dimension vectors of (L, I, N) forced by the parity constraint, if integral and >= 0."""
    out = []
    for x, y, z in ((m, b, a), (a, b, m), (m, a, b)):
        d = [u + v - w for u, v, w in zip(x, y, z)]
        if any(t % 2 or t < 0 for t in d):
            return None
        out.append(tuple(t // 2 for t in d))
    return out[0], out[1], out[2]


def three_cycles(tables: HallTables, a: int, b: int, m: int) -> Iterator[ThreeCycle]:
    """Contributing cycles, with (L, I, N) restricted to the dimensions the parity constraint allows."""
    t = tables
    dims = _halves(t.dim(a), t.dim(b), t.dim(m))
    if dims is None:
        return
    dl, di, dn = dims
    cat = t.catalog
    for i in cat.with_dim(di):
        for l in cat.with_dim(dl):
            f1 = t.F(l, i, b)
            if not f1:
                continue
            for n in cat.with_dim(dn):
                mult = f1 * t.F(n, l, m) * t.F(i, n, a)
                if mult:
                    yield ThreeCycle(a, b, m, l, i, n, mult)


def three_cycles_unfiltered(tables: HallTables, a: int, b: int, m: int) -> Iterator[ThreeCycle]:
    """Same cycles, found by joining the subquotient tables with no dimension filter."""
    t = tables
    for (l, i), f1 in t.rows[b].items():
        for (i2, n), f3 in t.rows[a].items():
            if i2 != i:
                continue
            f2 = t.F(n, l, m)
            if f2:
                yield ThreeCycle(a, b, m, l, i, n, f1 * f2 * f3)


def _check_bound(tables: HallTables, a: int, b: int) -> None:
    total = tables.total(a) + tables.total(b)
    if total > tables.bound:
        raise TruncationError(f"product of classes {a}, {b} needs total dimension {total} > bound {tables.bound}")


def delta_hall_number(tables: HallTables, a: int, b: int, m: int) -> QuadNumber:
    t = tables
    acc = VSum(t.q)
    for c in three_cycles(t, a, b, m):
        w = Fraction(t.a(c.l) * t.a(c.i) * t.a(c.n) * c.multiplicity, t.a(m))
        acc.add(w, lin_bracket(t, c.l, c.i, c.n))
    return acc.value()


def derived_hall_number(tables: HallTables, a: int, b: int, m: int) -> QuadNumber:
    """G^M_AB computed inside the abelian category (denominator a_A a_B)."""
    t = tables
    acc = VSum(t.q)
    for c in three_cycles(t, a, b, m):
        w = Fraction(t.a(c.l) * t.a(c.i) * t.a(c.n) * c.multiplicity, t.a(a) * t.a(b))
        acc.add(w, lin_bracket(t, c.l, c.i, c.n))
    return acc.value()


def derived_aut(tables: HallTables, m: int) -> int:
    return tables.a(m) * tables.q ** tables.ext(m, m)


def _structure(tables: HallTables, a: int, b: int, number) -> Element:
    _check_bound(tables, a, b)
    t = tables
    out = Element()
    seen = set()
    for (l, i), _ in t.rows[b].items():
        for (i2, n), _ in t.rows[a].items():
            if i2 != i:
                continue
            dm = tuple(x + y for x, y in zip(t.dim(n), t.dim(l)))
            for m in t.catalog.with_dim(dm):
                if m not in seen and t.F(n, l, m):
                    seen.add(m)
                    out.add_term(m, number(t, a, b, m))
    return Element(sorted(out.items()))


class DeltaHallAlgebra(BasisAlgebra):
    """[A] * [B] = sum_M F^M_AB [M] over Q(sqrt q); unit [0]."""

    def __init__(self, tables: HallTables) -> None:
        super().__init__()
        self.tables = tables
        self.q = tables.q

    def unit(self) -> Element:
        return Element.basis(0, QuadNumber(1, 0, self.q))

    def basis_product(self, a: int, b: int) -> Element:
        return _structure(self.tables, a, b, delta_hall_number)

    def basis(self, m: int, coeff=1) -> Element:
        return Element.basis(m, QuadNumber(coeff, 0, self.q))


class DerivedHallAlgebra(BasisAlgebra):
    """u_A * u_B = sum_M G^M_AB u_M."""

    def __init__(self, tables: HallTables) -> None:
        super().__init__()
        self.tables = tables
        self.q = tables.q

    def unit(self) -> Element:
        return Element.basis(0, QuadNumber(1, 0, self.q))

    def basis_product(self, a: int, b: int) -> Element:
        return _structure(self.tables, a, b, derived_hall_number)

    def basis(self, m: int, coeff=1) -> Element:
        return Element.basis(m, QuadNumber(coeff, 0, self.q))


def delta_product(x: Element, y: Element, tables: HallTables) -> Element:
    return DeltaHallAlgebra(tables).mul(x, y)


def xi_map(tables: HallTables, x: Element) -> Element:
    """u_M -> [M] / a_M, extended linearly."""
    return Element((m, c * Fraction(1, tables.a(m))) for m, c in x.items())


def xi_inverse(tables: HallTables, x: Element) -> Element:
    return Element((m, c * tables.a(m)) for m, c in x.items())


def theta_generator(tables: HallTables, i: int) -> Element:
    """Image of B_i: -v^-1 [S_i] / a_{S_i}."""
    s = tables.simple(i)
    return Element.basis(s, -vpow(-1, tables.q) * Fraction(1, tables.a(s)))
