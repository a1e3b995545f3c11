"""Generator images of the universal iquantum group and relation-instance checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable

from .algebra import Element
from .coeff import QuadNumber, qint, vpow
from .delta import theta_generator
from .extended import ExtendedDeltaHallAlgebra, ExtLabel, central_check, label, reduce_phi
from .repcat import HallTables, TruncationError


@dataclass
class GeneratorImage:
    b: dict[int, Element]
    k: dict[int, Element]


def make_images(tables: HallTables) -> GeneratorImage:
    """B_i -> -1/(q-1) v^-<S_i,S_i> [S_i],  k_i -> -q^-1 [K_i]."""
    q = tables.q
    b, k = {}, {}
    for i in range(tables.quiver.vertex_count):
        s = tables.simple(i)
        coeff = vpow(-tables.euler(s, s), q) * Fraction(-1, q - 1)
        b[i] = Element.basis(label(tables, s), coeff)
        k[i] = Element.basis(label(tables, 0, tables.quiver.simple(i)), QuadNumber(Fraction(-1, q), 0, q))
    return GeneratorImage(b, k)


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **operands) -> None:
        self.failures.append(operands)

    def to_json(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "passed": self.passed, "failures": self.failures}


def _basis_labels(tables: HallTables) -> list[ExtLabel]:
    return [label(tables, m) for m in range(tables.n)]


def check_k_relations(alg: ExtendedDeltaHallAlgebra, images: GeneratorImage,
                      labels: Iterable[ExtLabel] | None = None, product_fn=None) -> Report:
    """k_i commute pairwise, are central on the sweep, and multiply like group elements."""
    t = alg.tables
    mul = product_fn or alg.mul
    rep = Report("k-relations")
    labels = list(labels) if labels is not None else _basis_labels(t)
    q = t.q
    verts = sorted(images.k)
    for i, j in product(verts, verts):
        rep.checked += 1
        ki, kj = images.k[i], images.k[j]
        if mul(ki, kj) != mul(kj, ki):
            rep.fail(relation="k_i k_j = k_j k_i", i=i, j=j)
        alpha = tuple(a + b for a, b in zip(t.quiver.simple(i), t.quiver.simple(j)))
        expect = Element.basis(label(t, 0, alpha), QuadNumber(Fraction(1, q * q), 0, q))
        rep.checked += 1
        if mul(ki, kj) != expect:
            rep.fail(relation="k_i k_j = q^-2 [K_{e_i+e_j}]", i=i, j=j)
    for i in verts:
        k_lab = next(iter(images.k[i]))
        bad = central_check(alg, k_lab, labels, mul)
        rep.checked += len(labels)
        for lab in bad:
            rep.fail(relation="k_i central", i=i, label=str(lab))
    return rep


def check_rank1(alg: ExtendedDeltaHallAlgebra, images: GeneratorImage) -> Report:
    """Per-vertex consistency: supports, and reduction of b_i to the plain Delta-Hall image."""
    t = alg.tables
    rep = Report("rank1")
    for i in sorted(images.b):
        s = t.simple(i)
        rep.checked += 3
        if set(images.b[i]) != {label(t, s)}:
            rep.fail(relation="b_i supported on [S_i][K_0]", i=i)
        if set(images.k[i]) != {label(t, 0, t.quiver.simple(i))}:
            rep.fail(relation="k_i supported on [0][K_i]", i=i)
        if reduce_phi(images.b[i]) != theta_generator(t, i):
            rep.fail(relation="Phi(b_i) = -v^-1 [S_i]/a_{S_i}", i=i)
    k_rep = check_k_relations(alg, images)
    rep.checked += k_rep.checked
    rep.failures += k_rep.failures
    return rep


def check_commuting_pair(alg: ExtendedDeltaHallAlgebra, images: GeneratorImage, i: int, j: int) -> bool:
    t = alg.tables
    if i == j or t.quiver.edge_count(i, j) != 0:
        raise ValueError(f"vertices {i}, {j} are not a distinct non-adjacent pair")
    bi, bj = images.b[i], images.b[j]
    return alg.mul(bi, bj) == alg.mul(bj, bi)


@dataclass
class RelationResult:
    i: int
    j: int
    n_ij: int
    relation: Element
    target: Element
    lam: QuadNumber | None
    residual: Element

    @property
    def residual_zero(self) -> bool:
        return self.lam is not None and not self.residual

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "n_ij": self.n_ij,
            "residual_zero": self.residual_zero,
            "lambda": self.lam.to_json() if self.lam is not None else None,
        }


def serre_combination(alg: ExtendedDeltaHallAlgebra, images: GeneratorImage, i: int, j: int) -> Element:
    """b_i^2 b_j - [2] b_i b_j b_i + b_j b_i^2."""
    bi, bj = images.b[i], images.b[j]
    two = qint(2, alg.q)
    m = alg.mul_all
    return m(bi, bi, bj) - m(bi, bj, bi).scale(two) + m(bj, bi, bi)


def discover_rank2_relation(alg: ExtendedDeltaHallAlgebra, images: GeneratorImage, i: int, j: int) -> RelationResult:
    """Solve R = lambda * k_i b_j exactly; lambda is reported, not assumed."""
    t = alg.tables
    nij = t.quiver.edge_count(i, j)
    if i == j or nij != 1:
        raise ValueError(f"rank-2 template needs n_ij = 1, got {nij} for ({i}, {j})")
    need = 2 * t.total(t.simple(i)) + t.total(t.simple(j))
    if need > t.bound:
        raise TruncationError(f"rank-2 relation needs bound >= {need}")
    r = serre_combination(alg, images, i, j)
    target = alg.mul(images.k[i], images.b[j])
    lam = None
    if r and set(r) == set(target):
        lab = next(iter(target))
        lam = r[lab] / target[lab]
    residual = r - target.scale(lam) if lam is not None else r
    if residual:
        lam = None
    return RelationResult(i, j, nij, r, target, lam, residual)


def fit_vpower(values: dict[int, QuadNumber], span: int = 40) -> tuple[Fraction, int] | None:
    """Find rational c and integer k with c * v^k equal to every value (v = sqrt(q))."""
    qs = sorted(values)
    if any(v.a and v.b for v in values.values()):
        return None
    if all(not v for v in values.values()):
        return None
    odd = {bool(values[q].b) for q in qs}
    if len(odd) != 1:
        return None
    odd_k = odd.pop()
    for half in range(-span, span + 1):
        k = 2 * half + 1 if odd_k else 2 * half
        q0 = qs[0]
        c = (values[q0] / vpow(k, q0)).a
        if all(QuadNumber(c, 0, q) * vpow(k, q) == values[q] for q in qs):
            return c, k
    return None
