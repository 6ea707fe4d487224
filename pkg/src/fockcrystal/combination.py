"""Sparse formal integer combinations over hashable basis keys."""
from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator, Mapping, TypeVar

K = TypeVar("K", bound=Hashable)


class IntCombination:
    """An immutable element of the free abelian group on its keys.

    Zero coefficients are never stored.  Subclasses fix what a key is and may
    carry extra context (which must match for arithmetic); ``_context`` returns
    it and ``_rebuild`` makes a sibling with new terms.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            key = self._coerce_key(key)
            total = acc.get(key, 0) + coeff
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
        self._terms = acc

    def _coerce_key(self, key):
        return key

    def _context(self):
        return None

    def _rebuild(self, terms):
        return type(self)(terms)

    def _sort_key(self, key):
        return key

    # -- container protocol

    def __iter__(self) -> Iterator:
        return iter(self.keys())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key) -> int:
        return self._terms.get(self._coerce_key(key), 0)

    def keys(self) -> list:
        return sorted(self._terms, key=self._sort_key)

    def items(self) -> list[tuple]:
        return [(k, self._terms[k]) for k in self.keys()]

    def as_dict(self) -> dict:
        return dict(self.items())

    # -- arithmetic

    def _check(self, other):
        if type(other) is not type(self):
            return False
        if other._context() != self._context():
            raise ValueError(f"incompatible {type(self).__name__}s: {self._context()} vs {other._context()}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return self._rebuild(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self._rebuild(list(self._terms.items()) + [(k, -c) for k, c in other._terms.items()])

    def __neg__(self):
        return self._rebuild({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return self._rebuild({k: scalar * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._context() == other._context() and self._terms == other._terms

    __hash__ = None

    def map_linear(self, basis_image: Callable[[K], Iterable[tuple[K, int]]]):
        """Extend ``basis_image`` (key -> (key, coeff) pairs) linearly."""
        out = []
        for key, coeff in self._terms.items():
            out.extend((k, coeff * c) for k, c in basis_image(key))
        return self._rebuild(out)

    def __repr__(self) -> str:
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{c}*{k}" for k, c in self.items())
        return f"{type(self).__name__}({body})"
