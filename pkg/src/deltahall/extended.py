"""Extended Delta-Hall algebras: K_0 (or half K_0) classes adjoined, optional twisting.

Basis labels are ``ExtLabel(cls, kappa)`` for ``[M][K_alpha]`` where ``kappa``
stores 2*alpha, so plain and half-integral classes share one code path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Sequence

from .algebra import BasisAlgebra, Element
from .coeff import QuadNumber, VSum, vpow
from .delta import (DeltaHallAlgebra, DerivedHallAlgebra, _check_bound, three_cycles)
from .quiver import ParityError, Vec, add, bilinear, euler_matrix, half_shift, scale, sub
from .repcat import HallTables


class ExtLabel(NamedTuple):
    cls: int
    kappa: Vec  # twice the K_0 part

    def __str__(self) -> str:
        k = ", ".join(str(x // 2) if x % 2 == 0 else f"{x}/2" for x in self.kappa)
        return f"[{self.cls}][K({k})]"


def label(tables: HallTables, m: int, alpha: Sequence[int] | None = None) -> ExtLabel:
    """[M][K_alpha] with integral alpha (default 0)."""
    alpha = alpha if alpha is not None else tables.quiver.zero()
    return ExtLabel(m, scale(2, alpha))


def half_label(m: int, doubled: Sequence[int]) -> ExtLabel:
    return ExtLabel(m, tuple(doubled))


def negated_euler(tables: HallTables) -> list[list[int]]:
    """Twist matrix of phi(a, b) = v^-<a, b>."""
    return [[-x for x in row] for row in euler_matrix(tables.quiver)]


class ExtendedDeltaHallAlgebra(BasisAlgebra):
    """[A][K_a] * [B][K_b] = sum_M F^M_AB [M][K_{(A+B-M)/2 + a + b}].

    ``half`` admits half-integral K-labels. ``twist`` is an integer matrix T
    giving phi(x, y) = v^{x^T T y}; products are then scaled by
    phi(A + 2a, B + 2b).
    """

    def __init__(self, tables: HallTables, half: bool = False,
                 twist: Sequence[Sequence[int]] | None = None,
                 delta: DeltaHallAlgebra | None = None) -> None:
        super().__init__()
        self.tables = tables
        self.q = tables.q
        self.half = half
        self.twist = [list(r) for r in twist] if twist is not None else None
        self.delta = delta or DeltaHallAlgebra(tables)

    def _legal(self, x: ExtLabel) -> None:
        if not self.half and any(k % 2 for k in x.kappa):
            raise ParityError(f"half-integral label {x} in the plain extended algebra")

    def unit(self) -> Element:
        return self.basis(0)

    def basis(self, m: int, alpha: Sequence[int] | None = None, coeff=1) -> Element:
        return Element.basis(label(self.tables, m, alpha), QuadNumber(coeff, 0, self.q))

    def basis_product(self, x: ExtLabel, y: ExtLabel) -> Element:
        self._legal(x)
        self._legal(y)
        t = self.tables
        da, db = t.dim(x.cls), t.dim(y.cls)
        factor = None
        if self.twist is not None:
            factor = vpow(bilinear(self.twist, add(da, x.kappa), add(db, y.kappa)), self.q)
        out = Element()
        for m, c in self.delta.prod(x.cls, y.cls).items():
            shift = scale(2, half_shift(da, db, t.dim(m)))
            out.add_term(ExtLabel(m, add(shift, x.kappa, y.kappa)), c * factor if factor is not None else c)
        return out


def ext_product(x: Element, y: Element, tables: HallTables) -> Element:
    return ExtendedDeltaHallAlgebra(tables, half=True).mul(x, y)


def twisted_product(x: Element, y: Element, twist: Sequence[Sequence[int]], tables: HallTables) -> Element:
    return ExtendedDeltaHallAlgebra(tables, half=True, twist=twist).mul(x, y)


def degree(tables: HallTables, x: ExtLabel) -> Vec:
    """deg([M][K_a]) = M + 2a."""
    return add(tables.dim(x.cls), x.kappa)


def central_check(alg: BasisAlgebra, k_label: ExtLabel, labels: Iterable[ExtLabel],
                  product: Callable[[Element, Element], Element] | None = None) -> list[ExtLabel]:
    """Labels that fail to commute with ``k_label``; empty means central on the sweep."""
    mul = product or alg.mul
    k = Element.basis(k_label, 1)
    bad = []
    for lab in labels:
        e = Element.basis(lab, 1)
        if mul(k, e) != mul(e, k):
            bad.append(lab)
    return bad


def reduce_phi(x: Element) -> Element:
    """[M][K_a] -> [M]; defined on plain K_0 labels only."""
    out = Element()
    for lab, c in x.items():
        if any(k % 2 for k in lab.kappa):
            raise ParityError(f"cannot reduce half-integral label {lab}")
        out.add_term(lab.cls, c)
    return out


# -- iHall side ---------------------------------------------------------------


def tilde_number(tables: HallTables, a: int, b: int, m: int) -> QuadNumber:
    """F~^M_AB = sum v^-<A,B> q^<N,L> a_L a_I a_N / a_M F^B_LI F^M_NL F^A_IN."""
    t = tables
    acc = VSum(t.q)
    ab = t.euler(a, b)
    for c in three_cycles(t, a, b, m):
        w = Fraction(t.a(c.l) * t.a(c.i) * t.a(c.n) * c.multiplicity, t.a(m))
        acc.add(w, 2 * t.euler(c.n, c.l) - ab)
    return acc.value()


class IHallAlgebra(BasisAlgebra):
    """([A]*[K_a]) * ([B]*[K_b]) = sum_M F~^M_AB [M]*[K_{(A+B-M)/2 + a + b}]."""

    def __init__(self, tables: HallTables) -> None:
        super().__init__()
        self.tables = tables
        self.q = tables.q

    def unit(self) -> Element:
        return Element.basis(label(self.tables, 0), QuadNumber(1, 0, self.q))

    def basis_product(self, x: ExtLabel, y: ExtLabel) -> Element:
        t = self.tables
        _check_bound(t, x.cls, y.cls)
        da, db = t.dim(x.cls), t.dim(y.cls)
        out = Element()
        target = [m for m in range(t.n) if t.total(m) <= t.total(x.cls) + t.total(y.cls)]
        for m in target:
            c = tilde_number(t, x.cls, y.cls, m)
            if c:
                shift = scale(2, half_shift(da, db, t.dim(m)))
                out.add_term(ExtLabel(m, add(shift, x.kappa, y.kappa)), c)
        return out


def xi_tilde(tables: HallTables, m: int, alpha: Sequence[int] | None = None) -> Element:
    """[M]*[K_a] -> v^-<M,M> [M][K_a]."""
    return Element.basis(label(tables, m, alpha), vpow(-tables.euler(m, m), tables.q))


def xi_tilde_map(tables: HallTables, x: Element) -> Element:
    return Element((lab, c * vpow(-tables.euler(lab.cls, lab.cls), tables.q)) for lab, c in x.items())


# -- tensor factorization -----------------------------------------------------


class TensorAlgebra(BasisAlgebra):
    """H_Delta (x) Q(half K_0): labels (M, 2u), factorwise product."""

    def __init__(self, factor: BasisAlgebra) -> None:
        super().__init__()
        self.factor = factor
        self.tables = factor.tables
        self.q = self.tables.q

    def unit(self) -> Element:
        return Element.basis(ExtLabel(0, self.tables.quiver.zero()), QuadNumber(1, 0, self.q))

    def basis_product(self, x: ExtLabel, y: ExtLabel) -> Element:
        k = add(x.kappa, y.kappa)
        return Element((ExtLabel(m, k), c) for m, c in self.factor.prod(x.cls, y.cls).items())


def phi_tensor(tables: HallTables, x: Element) -> Element:
    """[M][K_a] -> [M] (x) [K_{M/2 + a}]."""
    return x.map_labels(lambda lab: ExtLabel(lab.cls, add(tables.dim(lab.cls), lab.kappa)))


def phi_tensor_inverse(tables: HallTables, x: Element) -> Element:
    return x.map_labels(lambda lab: ExtLabel(lab.cls, sub(lab.kappa, tables.dim(lab.cls))))


def psi_tensor(tables: HallTables, x: Element) -> Element:
    """[M][K_a] -> a_M u_M (x) [K_{M/2 + a}]."""
    return Element((ExtLabel(lab.cls, add(tables.dim(lab.cls), lab.kappa)), c * tables.a(lab.cls))
                   for lab, c in x.items())


def psi_tensor_inverse(tables: HallTables, x: Element) -> Element:
    """u_M (x) [K_a] -> [M][K_{a - M/2}] / a_M."""
    return Element((ExtLabel(lab.cls, sub(lab.kappa, tables.dim(lab.cls))), c * Fraction(1, tables.a(lab.cls)))
                   for lab, c in x.items())


def derived_tensor_algebra(tables: HallTables) -> TensorAlgebra:
    return TensorAlgebra(DerivedHallAlgebra(tables))
