"""Quivers, dimension vectors and the forms on K_0 = Z^{Q_0}."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

Vec = tuple[int, ...]


class ParityError(ValueError):
    """A half-shift was requested for a vector with an odd entry."""


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        for s, t in arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow {s}->{t} references a missing vertex")
            if s == t:
                raise ValueError(f"loop at vertex {s}; quivers must be loop-free")
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def from_json(cls, obj: dict) -> Quiver:
        return cls(int(obj["vertices"]), tuple(tuple(a) for a in obj.get("arrows", [])))

    @classmethod
    def load(cls, path: str | Path) -> Quiver:
        return cls.from_json(json.loads(Path(path).read_text()))

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "arrows": [list(a) for a in self.arrows]}

    def edge_count(self, i: int, j: int) -> int:
        """n_ij: arrows between i and j in either direction."""
        return sum(1 for s, t in self.arrows if {s, t} == {i, j})

    def is_acyclic(self) -> bool:
        indeg = [0] * self.vertex_count
        for _, t in self.arrows:
            indeg[t] += 1
        stack = [v for v in range(self.vertex_count) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        stack.append(t)
        return seen == self.vertex_count

    def simple(self, i: int) -> Vec:
        return tuple(int(k == i) for k in range(self.vertex_count))

    def zero(self) -> Vec:
        return (0,) * self.vertex_count


def cartan(quiver: Quiver) -> list[list[int]]:
    n = quiver.vertex_count
    return [[2 * (i == j) - quiver.edge_count(i, j) * (i != j) for j in range(n)] for i in range(n)]


def euler_matrix(quiver: Quiver) -> list[list[int]]:
    """E with <d, e> = d^T E e."""
    n = quiver.vertex_count
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for s, t in quiver.arrows:
        m[s][t] -= 1
    return m


def _check(quiver: Quiver, *vs: Sequence[int]) -> None:
    for v in vs:
        if len(v) != quiver.vertex_count:
            raise ValueError(f"vector {tuple(v)} has length {len(v)}, expected {quiver.vertex_count}")


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    _check(quiver, d, e)
    return sum(x * y for x, y in zip(d, e)) - sum(d[s] * e[t] for s, t in quiver.arrows)


def sym_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    return euler_form(quiver, d, e) + euler_form(quiver, e, d)


def bilinear(matrix: Sequence[Sequence[int]], d: Sequence[int], e: Sequence[int]) -> int:
    return sum(d[i] * row[j] * e[j] for i, row in enumerate(matrix) for j in range(len(e)))


def half_shift(a: Sequence[int], b: Sequence[int], m: Sequence[int]) -> Vec:
    """(a + b - m) / 2, exactly."""
    doubled = [x + y - z for x, y, z in zip(a, b, m)]
    if any(x % 2 for x in doubled):
        raise ParityError(f"odd entry in {tuple(a)} + {tuple(b)} - {tuple(m)}")
    return tuple(x // 2 for x in doubled)


def add(*vs: Sequence[int]) -> Vec:
    return tuple(sum(xs) for xs in zip(*vs))


def sub(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Sequence[int]) -> Vec:
    return tuple(k * x for x in a)


@dataclass(frozen=True)
class HalfK0Class:
    """An element of (1/2)K_0, stored as twice its value."""

    doubled: Vec

    @classmethod
    def from_k0(cls, alpha: Sequence[int]) -> HalfK0Class:
        return cls(tuple(2 * x for x in alpha))

    def is_integral(self) -> bool:
        return all(x % 2 == 0 for x in self.doubled)

    def to_k0(self) -> Vec:
        if not self.is_integral():
            raise ParityError(f"{self} is not in K_0")
        return tuple(x // 2 for x in self.doubled)

    def __add__(self, other: HalfK0Class) -> HalfK0Class:
        return HalfK0Class(add(self.doubled, other.doubled))

    def __str__(self) -> str:
        return "(" + ", ".join(str(x // 2) if x % 2 == 0 else f"{x}/2" for x in self.doubled) + ")"
