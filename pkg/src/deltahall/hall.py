"""The classical Ringel-Hall algebra (dual convention) and Green's formula."""

from __future__ import annotations

from fractions import Fraction

from .algebra import BasisAlgebra, Element
from .repcat import HallTables, TruncationError


def _require(tables: HallTables, total: int, what: str) -> None:
    if total > tables.bound:
        raise TruncationError(f"{what} needs total dimension {total} > bound {tables.bound}")


class HallAlgebra(BasisAlgebra):
    """[A] <> [B] = sum_M |Ext^1(A,B)_M| / |Hom(A,B)| [M], rational coefficients."""

    def __init__(self, tables: HallTables) -> None:
        super().__init__()
        self.tables = tables

    def unit(self) -> Element:
        return Element.basis(0, Fraction(1))

    def basis_product(self, a: int, b: int) -> Element:
        t = self.tables
        _require(t, t.total(a) + t.total(b), "Hall product")
        target = tuple(x + y for x, y in zip(t.dim(a), t.dim(b)))
        denom = t.q ** t.hom(a, b)
        return Element((m, Fraction(t.ext_count(a, b, m), denom)) for m in t.catalog.with_dim(target))


def hall_product(x: Element, y: Element, tables: HallTables) -> Element:
    return HallAlgebra(tables).mul(x, y)


def assoc3(tables: HallTables, a: int, b: int, c: int, m: int) -> tuple[int, int]:
    """Both sides of sum_X F^X_AB F^M_XC = sum_Y F^M_AY F^Y_BC."""
    t = tables
    _require(t, t.total(a) + t.total(b) + t.total(c), "assoc3")
    dab = tuple(x + y for x, y in zip(t.dim(a), t.dim(b)))
    dbc = tuple(x + y for x, y in zip(t.dim(b), t.dim(c)))
    lhs = sum(t.F(a, b, x) * t.F(x, c, m) for x in t.catalog.with_dim(dab))
    rhs = sum(t.F(a, y, m) * t.F(b, c, y) for y in t.catalog.with_dim(dbc))
    return lhs, rhs


def green_check(tables: HallTables, m: int, n: int, x: int, y: int) -> tuple[Fraction, Fraction]:
    """Both sides of Green's formula for (M, N, X, Y)."""
    t = tables
    _require(t, t.total(m) + t.total(n), "Green's formula")
    q = t.q
    dmn = tuple(u + w for u, w in zip(t.dim(m), t.dim(n)))
    lhs = Fraction(0)
    if dmn == tuple(u + w for u, w in zip(t.dim(x), t.dim(y))):
        for e in t.catalog.with_dim(dmn):
            lhs += Fraction(t.F(m, n, e) * t.F(x, y, e), t.a(e))
    rhs = Fraction(0)
    denom = t.a(m) * t.a(n) * t.a(x) * t.a(y)
    # F^M_AB > 0 exactly for the (quotient, sub) pairs recorded in M's row
    for (a, b), fm in t.rows[m].items():
        for (c, d), fn in t.rows[n].items():
            fx = t.F(a, c, x)
            if not fx:
                continue
            fy = t.F(b, d, y)
            if not fy:
                continue
            w = Fraction(fm * fn * fx * fy * t.a(a) * t.a(b) * t.a(c) * t.a(d), denom)
            rhs += w * Fraction(q) ** (-t.euler(a, d))
    return lhs, rhs
