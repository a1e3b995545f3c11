"""Exhaustive identity sweeps over a truncated catalog.

Each suite returns a :class:`Report` listing every counterexample with its
operands. Sweeps only visit products whose factors fit inside the catalog
bound, so nothing is silently truncated.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .algebra import Element
from .coeff import QuadNumber, vpow
from .delta import (DeltaHallAlgebra, DerivedHallAlgebra, delta_hall_number, derived_hall_number,
                    lin_bracket, three_cycles, three_cycles_unfiltered, xi_map)
from .extended import (ExtendedDeltaHallAlgebra, ExtLabel, IHallAlgebra, TensorAlgebra, central_check,
                       degree, label, negated_euler, phi_tensor, phi_tensor_inverse, psi_tensor,
                       psi_tensor_inverse, reduce_phi, tilde_number, xi_tilde_map)
from .hall import HallAlgebra, assoc3, green_check
from .iqg import Report, check_commuting_pair, check_rank1, discover_rank2_relation, make_images
from .quiver import add, scale, sym_form
from .repcat import HallTables, TruncationError

SUITES = (
    "green", "assoc", "ext-assoc", "twist-assoc", "semi-derived", "derived-iso", "central",
    "parity", "ihall-scaling", "tensor", "rank1", "rank2", "commute",
)

TWIST_SEED = 20240611
RANDOM_TWISTS = 5


def _fmt(x) -> object:
    if isinstance(x, QuadNumber):
        return x.to_json()
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, Element):
        return [[str(k), _fmt(c)] for k, c in x.sorted_items()]
    return x


def pairs(t: HallTables) -> list[tuple[int, int]]:
    return [(a, b) for a in range(t.n) for b in range(t.n) if t.total(a) + t.total(b) <= t.bound]


def triples(t: HallTables) -> list[tuple[int, int, int]]:
    return [(a, b, c) for a in range(t.n) for b in range(t.n) for c in range(t.n)
            if t.total(a) + t.total(b) + t.total(c) <= t.bound]


def kappa_sweep(t: HallTables, half: bool = False) -> list[tuple[int, ...]]:
    """Doubled K-labels used in extended sweeps: 0, each e_i (or e_i/2), and -(1,...,1)."""
    n = t.quiver.vertex_count
    unit = 1 if half else 2
    out = [(0,) * n]
    out += [tuple(unit * (k == i) for k in range(n)) for i in range(n)]
    out.append(tuple(-unit for _ in range(n)))
    return out


def random_twists(n: int, count: int = RANDOM_TWISTS, seed: int = TWIST_SEED) -> list[list[list[int]]]:
    rng = random.Random(seed)
    return [[[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)] for _ in range(count)]


def _label_triples(t: HallTables, kappas: Sequence[tuple[int, ...]]):
    for a, b, c in triples(t):
        for ka, kb, kc in product(kappas, repeat=3):
            yield ExtLabel(a, ka), ExtLabel(b, kb), ExtLabel(c, kc)


def _label_pairs(t: HallTables, kappas: Sequence[tuple[int, ...]]):
    for a, b in pairs(t):
        for ka, kb in product(kappas, repeat=2):
            yield ExtLabel(a, ka), ExtLabel(b, kb)


def _assoc_sweep(rep: Report, alg, label_triples, what: str) -> None:
    for x, y, z in label_triples:
        ex, ey, ez = (Element.basis(v, 1) for v in (x, y, z))
        lhs = alg.mul(alg.mul(ex, ey), ez)
        rhs = alg.mul(ex, alg.mul(ey, ez))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(identity=what, a=str(x), b=str(y), c=str(z), lhs=_fmt(lhs), rhs=_fmt(rhs))


# -- suites -------------------------------------------------------------------


def suite_green(t: HallTables, **_) -> Report:
    rep = Report("green")
    for m, n in pairs(t):
        for x in range(t.n):
            for y in range(t.n):
                lhs, rhs = green_check(t, m, n, x, y)
                rep.checked += 1
                if lhs != rhs:
                    rep.fail(m=m, n=n, x=x, y=y, lhs=_fmt(lhs), rhs=_fmt(rhs))
    return rep


def suite_assoc(t: HallTables, **_) -> Report:
    rep = Report("assoc")
    hall = HallAlgebra(t)
    delta = DeltaHallAlgebra(t)
    for a, b, c in triples(t):
        for m in range(t.n):
            lhs, rhs = assoc3(t, a, b, c, m)
            rep.checked += 1
            if lhs != rhs:
                rep.fail(identity="Hall associativity", a=a, b=b, c=c, m=m, lhs=lhs, rhs=rhs)
        for alg, what in ((hall, "Hall product associativity"), (delta, "Delta-Hall associativity")):
            ea, eb, ec = (Element.basis(v, 1) for v in (a, b, c))
            lhs = alg.mul(alg.mul(ea, eb), ec)
            rhs = alg.mul(ea, alg.mul(eb, ec))
            for m in range(t.n):
                rep.checked += 1
                l, r = lhs.get(m, 0), rhs.get(m, 0)
                if l != r:
                    rep.fail(identity=what, a=a, b=b, c=c, m=m, lhs=_fmt(l), rhs=_fmt(r))
    return rep


def suite_ext_assoc(t: HallTables, **_) -> Report:
    rep = Report("ext-assoc")
    delta = DeltaHallAlgebra(t)
    plain = ExtendedDeltaHallAlgebra(t, delta=delta)
    half = ExtendedDeltaHallAlgebra(t, half=True, delta=delta)
    _assoc_sweep(rep, plain, _label_triples(t, kappa_sweep(t)), "extended associativity")
    _assoc_sweep(rep, half, _label_triples(t, kappa_sweep(t, half=True)), "half-K0 associativity")
    return rep


def twist_family(t: HallTables, twist: Sequence[Sequence[int]] | None = None) -> list[tuple[str, list[list[int]]]]:
    out = [("v^-<a,b>", negated_euler(t))]
    out += [(f"random#{k}", m) for k, m in enumerate(random_twists(t.quiver.vertex_count))]
    if twist is not None:
        out.append(("user", [list(r) for r in twist]))
    return out


def suite_twist_assoc(t: HallTables, twist=None, **_) -> Report:
    rep = Report("twist-assoc")
    delta = DeltaHallAlgebra(t)
    for name, mat in twist_family(t, twist):
        alg = ExtendedDeltaHallAlgebra(t, twist=mat, delta=delta)
        _assoc_sweep(rep, alg, _label_triples(t, kappa_sweep(t)), f"twisted associativity ({name})")
    return rep


def semi_derived_constants(t: HallTables, alg: ExtendedDeltaHallAlgebra, x: ExtLabel, y: ExtLabel) -> Element:
    """Structure constants of [A]<>[K_a] * [B]<>[K_b] in the semi-derived basis.

    The basis change is [M]<>[K_a] -> v^-<M,M> [M][K_a].
    """
    q = t.q
    ex = Element.basis(x, vpow(-t.euler(x.cls, x.cls), q))
    ey = Element.basis(y, vpow(-t.euler(y.cls, y.cls), q))
    prod = alg.mul(ex, ey)
    return Element((lab, c * vpow(t.euler(lab.cls, lab.cls), q)) for lab, c in prod.items())


def suite_semi_derived(t: HallTables, **_) -> Report:
    """With phi = v^-<a,b>, every semi-derived structure constant is rational."""
    rep = Report("semi-derived")
    alg = ExtendedDeltaHallAlgebra(t, twist=negated_euler(t))
    for x, y in _label_pairs(t, kappa_sweep(t)):
        for lab, c in semi_derived_constants(t, alg, x, y).sorted_items():
            rep.checked += 1
            if not c.is_rational():
                rep.fail(a=str(x), b=str(y), m=str(lab), coeff=_fmt(c))
    return rep


def raw_twisted_irrational(t: HallTables) -> list[tuple[ExtLabel, ExtLabel, ExtLabel, QuadNumber]]:
    """Twisted constants on the raw [M][K_a] basis that carry a sqrt(q) part."""
    alg = ExtendedDeltaHallAlgebra(t, twist=negated_euler(t))
    out = []
    for x, y in _label_pairs(t, kappa_sweep(t)):
        for lab, c in alg.prod(x, y).sorted_items():
            if not c.is_rational():
                out.append((x, y, lab, c))
    return out


def suite_derived_iso(t: HallTables, **_) -> Report:
    rep = Report("derived-iso")
    delta = DeltaHallAlgebra(t)
    derived = DerivedHallAlgebra(t)
    for a, b in pairs(t):
        for m in range(t.n):
            g = derived_hall_number(t, a, b, m)
            f = delta_hall_number(t, a, b, m)
            rep.checked += 1
            if g * (t.a(a) * t.a(b)) != f * t.a(m):
                rep.fail(identity="G a_A a_B = F^ a_M", a=a, b=b, m=m, g=_fmt(g), f=_fmt(f))
        ua, ub = derived.basis(a), derived.basis(b)
        lhs = xi_map(t, derived.mul(ua, ub))
        rhs = delta.mul(xi_map(t, ua), xi_map(t, ub))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(identity="Xi homomorphism", a=a, b=b, lhs=_fmt(lhs), rhs=_fmt(rhs))
    return rep


def suite_central(t: HallTables, **_) -> Report:
    rep = Report("central")
    delta = DeltaHallAlgebra(t)
    alg = ExtendedDeltaHallAlgebra(t, delta=delta)
    kappas = kappa_sweep(t)
    labels = [ExtLabel(m, k) for m in range(t.n) for k in kappas]
    alphas = kappas[1:] + [scale(2, (1,) * t.quiver.vertex_count)]
    for alpha in alphas:
        k_lab = ExtLabel(0, alpha)
        bad = central_check(alg, k_lab, labels)
        rep.checked += len(labels)
        for lab in bad:
            rep.fail(identity="[K_a] central", alpha=str(k_lab), label=str(lab))
    for x, y in _label_pairs(t, kappas):
        ex, ey = Element.basis(x, 1), Element.basis(y, 1)
        lhs = reduce_phi(alg.mul(ex, ey))
        rhs = delta.mul(reduce_phi(ex), reduce_phi(ey))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(identity="Phi homomorphism", a=str(x), b=str(y), lhs=_fmt(lhs), rhs=_fmt(rhs))
    one = alg.unit()
    for alpha in alphas:
        gen = Element.basis(ExtLabel(0, alpha), 1) - one
        rep.checked += 1
        if reduce_phi(gen):
            rep.fail(identity="[K_a] - 1 in kernel", alpha=str(alpha))
        for m in range(t.n):
            rep.checked += 1
            if reduce_phi(alg.mul(gen, alg.basis(m))):
                rep.fail(identity="ideal ([K_a] - 1) in kernel", alpha=str(alpha), m=m)
    return rep


def suite_parity(t: HallTables, **_) -> Report:
    rep = Report("parity")
    qf = t.quiver
    for a, b in pairs(t):
        da, db = t.dim(a), t.dim(b)
        for m in range(t.n):
            dm = t.dim(m)
            free = sorted((c.l, c.i, c.n, c.multiplicity) for c in three_cycles_unfiltered(t, a, b, m))
            filt = sorted((c.l, c.i, c.n, c.multiplicity) for c in three_cycles(t, a, b, m))
            rep.checked += 1
            if free != filt:
                rep.fail(identity="cycle sets agree", a=a, b=b, m=m, unfiltered=free, filtered=filt)
            for l, i, n, _ in free:
                dl, di, dn = t.dim(l), t.dim(i), t.dim(n)
                rep.checked += 1
                ok = (scale(2, dl) == add(dm, db, scale(-1, da))
                      and scale(2, di) == add(da, db, scale(-1, dm))
                      and scale(2, dn) == add(dm, da, scale(-1, db))
                      and 2 * sym_form(qf, dn, dl)
                      == t.euler(m, m) - t.euler(a, a) - t.euler(b, b) + sym_form(qf, da, db))
                if not ok:
                    rep.fail(identity="three-cycle dimension identities", a=a, b=b, m=m, l=l, i=i, n=n)
            f = delta_hall_number(t, a, b, m)
            rep.checked += 1
            shift = add(da, db, scale(-1, dm))
            if f and any(x % 2 for x in shift):
                rep.fail(identity="parity", a=a, b=b, m=m, coeff=_fmt(f))
            if f:
                rep.checked += 1
                half = tuple(x // 2 for x in shift)
                if any(h < 0 or h > min(x, y) for h, x, y in zip(half, da, db)):
                    rep.fail(identity="dimension support", a=a, b=b, m=m)
    return rep


def suite_ihall_scaling(t: HallTables, **_) -> Report:
    rep = Report("ihall-scaling")
    q = t.q
    for a, b in pairs(t):
        for m in range(t.n):
            lhs = tilde_number(t, a, b, m)
            rhs = vpow(t.euler(m, m) - t.euler(a, a) - t.euler(b, b), q) * delta_hall_number(t, a, b, m)
            rep.checked += 1
            if lhs != rhs:
                rep.fail(identity="F~ = v^(..) F^", a=a, b=b, m=m, lhs=_fmt(lhs), rhs=_fmt(rhs))
    ihall = IHallAlgebra(t)
    ext = ExtendedDeltaHallAlgebra(t)
    for x, y in _label_pairs(t, kappa_sweep(t)):
        ex, ey = Element.basis(x, QuadNumber(1, 0, q)), Element.basis(y, QuadNumber(1, 0, q))
        lhs = xi_tilde_map(t, ihall.mul(ex, ey))
        rhs = ext.mul(xi_tilde_map(t, ex), xi_tilde_map(t, ey))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(identity="Xi~ homomorphism", a=str(x), b=str(y), lhs=_fmt(lhs), rhs=_fmt(rhs))
    return rep


def suite_tensor(t: HallTables, **_) -> Report:
    rep = Report("tensor")
    delta = DeltaHallAlgebra(t)
    alg = ExtendedDeltaHallAlgebra(t, half=True, delta=delta)
    tens = TensorAlgebra(delta)
    dtens = TensorAlgebra(DerivedHallAlgebra(t))
    for x, y in _label_pairs(t, kappa_sweep(t, half=True)):
        ex, ey = Element.basis(x, 1), Element.basis(y, 1)
        xy = alg.mul(ex, ey)
        checks: list[tuple[str, Callable[[], bool]]] = [
            ("Phi_tensor homomorphism",
             lambda: phi_tensor(t, xy) == tens.mul(phi_tensor(t, ex), phi_tensor(t, ey))),
            ("Psi_tensor homomorphism",
             lambda: psi_tensor(t, xy) == dtens.mul(psi_tensor(t, ex), psi_tensor(t, ey))),
            ("Phi_tensor inverse", lambda: phi_tensor_inverse(t, phi_tensor(t, xy)) == xy),
            ("Psi_tensor inverse", lambda: psi_tensor_inverse(t, psi_tensor(t, xy)) == xy),
            ("degree additivity",
             lambda: all(degree(t, lab) == add(degree(t, x), degree(t, y)) for lab in xy)),
        ]
        for what, check in checks:
            rep.checked += 1
            if not check():
                rep.fail(identity=what, a=str(x), b=str(y))
    zero = t.quiver.zero()
    for m in range(t.n):
        img = psi_tensor_inverse(t, Element.basis(ExtLabel(m, zero), 1))
        expect = Element.basis(ExtLabel(m, scale(-1, t.dim(m))), Fraction(1, t.a(m)))
        rep.checked += 1
        if img != expect or any(degree(t, lab) != zero for lab in img):
            rep.fail(identity="degree-0 image of u_M (x) 1", m=m)
    return rep


def suite_rank1(t: HallTables, **_) -> Report:
    alg = ExtendedDeltaHallAlgebra(t)
    return check_rank1(alg, make_images(t))


def _adjacent(t: HallTables, mult: int | None = None) -> list[tuple[int, int]]:
    n = t.quiver.vertex_count
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                nij = t.quiver.edge_count(i, j)
                if (mult is None and nij > 0) or nij == mult:
                    out.append((i, j))
    return out


def suite_rank2(t: HallTables, **_) -> Report:
    rep = Report("rank2")
    rep.relations = []  # type: ignore[attr-defined]
    if _adjacent(t) and t.bound < 3:
        raise TruncationError("rank2 needs max-dim >= 3")
    alg = ExtendedDeltaHallAlgebra(t)
    images = make_images(t)
    for i, j in _adjacent(t, 1):
        res = discover_rank2_relation(alg, images, i, j)
        rep.checked += 1
        rep.relations.append(res.to_json())  # type: ignore[attr-defined]
        if not res.residual_zero:
            rep.fail(identity="R = lambda k_i b_j", i=i, j=j, residual=_fmt(res.residual))
    for i, j in _adjacent(t):
        nij = t.quiver.edge_count(i, j)
        if nij >= 2:
            # no template for multiple edges: export the degree-3 products only
            bi, bj = images.b[i], images.b[j]
            rep.relations.append({  # type: ignore[attr-defined]
                "i": i, "j": j, "n_ij": nij, "residual_zero": None, "lambda": None,
                "products": {
                    "bi_bi_bj": _fmt(alg.mul_all(bi, bi, bj)),
                    "bi_bj_bi": _fmt(alg.mul_all(bi, bj, bi)),
                    "bj_bi_bi": _fmt(alg.mul_all(bj, bi, bi)),
                },
            })
    return rep


def suite_commute(t: HallTables, **_) -> Report:
    rep = Report("commute")
    n = t.quiver.vertex_count
    todo = [(i, j) for i in range(n) for j in range(i + 1, n) if t.quiver.edge_count(i, j) == 0]
    if todo and t.bound < 2:
        raise TruncationError("commute needs max-dim >= 2")
    alg = ExtendedDeltaHallAlgebra(t)
    images = make_images(t)
    for i, j in todo:
        rep.checked += 1
        if not check_commuting_pair(alg, images, i, j):
            rep.fail(identity="b_i b_j = b_j b_i", i=i, j=j)
    return rep


RUNNERS: dict[str, Callable[..., Report]] = {
    "green": suite_green,
    "assoc": suite_assoc,
    "ext-assoc": suite_ext_assoc,
    "twist-assoc": suite_twist_assoc,
    "semi-derived": suite_semi_derived,
    "derived-iso": suite_derived_iso,
    "central": suite_central,
    "parity": suite_parity,
    "ihall-scaling": suite_ihall_scaling,
    "tensor": suite_tensor,
    "rank1": suite_rank1,
    "rank2": suite_rank2,
    "commute": suite_commute,
}


def run_suite(name: str, tables: HallTables, twist=None) -> Report:
    if name not in RUNNERS:
        raise ValueError(f"unknown check suite {name!r}; choose from {', '.join(SUITES)}")
    return RUNNERS[name](tables, twist=twist)
