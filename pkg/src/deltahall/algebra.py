"""Finite formal linear combinations and algebras given by basis products."""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable


class Element(dict):
    """A finite linear combination ``{basis label: coefficient}``.

    Zero coefficients are never stored, so ``==`` is exact equality of
    elements.
    """

    def __init__(self, items: Iterable[tuple[Hashable, Any]] | dict = ()) -> None:
        super().__init__()
        pairs = items.items() if isinstance(items, dict) else items
        for k, c in pairs:
            self.add_term(k, c)

    @classmethod
    def basis(cls, label: Hashable, coeff: Any = 1) -> Element:
        return cls([(label, coeff)])

    def add_term(self, label: Hashable, coeff: Any) -> None:
        if not coeff:
            return
        new = self[label] + coeff if label in self else coeff
        if new:
            self[label] = new
        else:
            del self[label]

    def __add__(self, other: Element) -> Element:
        out = Element(self)
        for k, c in other.items():
            out.add_term(k, c)
        return out

    def __neg__(self) -> Element:
        return Element((k, -c) for k, c in self.items())

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, c: Any) -> Element:
        return Element((k, c * x) for k, x in self.items())

    __rmul__ = scale

    def map_labels(self, f: Callable[[Hashable], Hashable]) -> Element:
        out = Element()
        for k, c in self.items():
            out.add_term(f(k), c)
        return out

    def sorted_items(self) -> list[tuple[Hashable, Any]]:
        return sorted(self.items(), key=lambda kc: kc[0])

    def __repr__(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"({c})*{k}" for k, c in self.sorted_items())


class BasisAlgebra:
    """An algebra specified by the product of two basis labels.

    Subclasses implement :meth:`basis_product`; results are memoized.
    """

    def __init__(self) -> None:
        self._memo: dict[tuple[Hashable, Hashable], Element] = {}

    def basis_product(self, x: Hashable, y: Hashable) -> Element:  # pragma: no cover - abstract
        raise NotImplementedError

    def unit(self) -> Element:  # pragma: no cover - abstract
        raise NotImplementedError

    def prod(self, x: Hashable, y: Hashable) -> Element:
        key = (x, y)
        if key not in self._memo:
            self._memo[key] = self.basis_product(x, y)
        return self._memo[key]

    def mul(self, x: Element, y: Element) -> Element:
        out = Element()
        for kx, cx in x.items():
            for ky, cy in y.items():
                c = cx * cy
                for km, cm in self.prod(kx, ky).items():
                    out.add_term(km, cm * c)
        return out

    def mul_all(self, *xs: Element) -> Element:
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out
