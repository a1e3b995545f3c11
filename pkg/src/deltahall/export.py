"""Structure-constant tables as JSON-ready dicts, in canonical id order."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .coeff import QuadNumber
from .delta import DeltaHallAlgebra, DerivedHallAlgebra
from .extended import ExtendedDeltaHallAlgebra, label, negated_euler
from .hall import HallAlgebra
from .repcat import HallTables

TABLES = ("hall", "delta", "derived", "ext", "twisted")


def _coeff(c, q: int) -> dict[str, str]:
    if isinstance(c, (int, Fraction)):
        c = QuadNumber(c, 0, q)
    return c.to_json()


def structure_table(tables: HallTables, which: str, twist: Sequence[Sequence[int]] | None = None) -> dict:
    if which not in TABLES:
        raise ValueError(f"unknown table {which!r}; choose from {', '.join(TABLES)}")
    t = tables
    entries = []
    pairs = [(a, b) for a in range(t.n) for b in range(t.n) if t.total(a) + t.total(b) <= t.bound]
    if which in ("hall", "delta", "derived"):
        alg = {"hall": HallAlgebra, "delta": DeltaHallAlgebra, "derived": DerivedHallAlgebra}[which](t)
        for a, b in pairs:
            for m, c in sorted(alg.prod(a, b).items()):
                entries.append({"a": a, "b": b, "m": m, "coeff": _coeff(c, t.q)})
    else:
        if which == "twisted" and twist is None:
            twist = negated_euler(t)
        alg = ExtendedDeltaHallAlgebra(t, twist=twist if which == "twisted" else None)
        for a, b in pairs:
            for lab, c in sorted(alg.prod(label(t, a), label(t, b)).items()):
                entries.append({"a": a, "b": b, "m": lab.cls, "coeff": _coeff(c, t.q), "kshift": list(lab.kappa)})
    out = {
        "quiver": t.quiver.to_json(),
        "q": t.q,
        "max_dim": t.bound,
        "table": which,
        "entries": entries,
    }
    if which == "twisted":
        out["twist"] = [list(r) for r in twist]
    return out
