"""Specht-class combinations: induction, restriction and the Morita splitting.

A ``GrothVector`` is an integer combination of Specht classes [S^lambda] of a
fixed level r.  Splitting the level along a composition (r_1, ..., r_t)
sends [S^lambda] to the tuple of its consecutive component blocks; a
``SplitVector`` is an integer combination of such tuples.
"""
from __future__ import annotations

from typing import Sequence

from .combination import IntCombination
from .errors import DomainError
from .partitions import (Multipartition, add_node, addable_nodes, as_multipartition,
                         enumerate_multipartitions, remove_node, removable_nodes)


class GrothVector(IntCombination):
    __slots__ = ("level",)

    def __init__(self, level: int, terms=()):
        if level < 1:
            raise DomainError(f"level must be at least 1, got {level}")
        self.level = level
        super().__init__(terms)

    def _coerce_key(self, key):
        lam = as_multipartition(key)
        if lam.level != self.level:
            raise DomainError(f"{lam} does not have level {self.level}")
        return lam

    def _context(self):
        return self.level

    def _rebuild(self, terms):
        return GrothVector(self.level, terms)

    def _sort_key(self, key):
        return key.sort_key()

    @classmethod
    def specht(cls, lam) -> "GrothVector":
        lam = as_multipartition(lam)
        return cls(lam.level, [(lam, 1)])

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(("" if c == 1 else f"{c}") + f"[S^{k}]" for k, c in self.items())


class SplitVector(IntCombination):
    __slots__ = ("split",)

    def __init__(self, split: Sequence[int], terms=()):
        self.split = _check_split(split)
        super().__init__(terms)

    def _coerce_key(self, key):
        key = tuple(as_multipartition(b) for b in key)
        if tuple(b.level for b in key) != self.split:
            raise DomainError(f"block levels {[b.level for b in key]} do not match split {self.split}")
        return key

    def _context(self):
        return self.split

    def _rebuild(self, terms):
        return SplitVector(self.split, terms)

    def _sort_key(self, key):
        return tuple(b.sort_key() for b in key)

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(("" if c == 1 else f"{c}")
                          + "[" + " ⊗ ".join(f"S^{b}" for b in k) + "]" for k, c in self.items())


def _check_split(split: Sequence[int]) -> tuple[int, ...]:
    split = tuple(split)
    if not split or any(not isinstance(x, int) or x < 1 for x in split):
        raise DomainError(f"a split must be a nonempty sequence of positive integers, got {split}")
    return split


def induce(v: GrothVector) -> GrothVector:
    """[S^lambda] -> sum of [S^mu] over mu = lambda plus one addable node."""
    return v.map_linear(lambda lam: [(add_node(lam, x), 1) for x in addable_nodes(lam)])


def restrict(v: GrothVector) -> GrothVector:
    return v.map_linear(lambda lam: [(remove_node(lam, x), 1) for x in removable_nodes(lam)])


def blocks(lam: Multipartition, split: Sequence[int]) -> tuple[Multipartition, ...]:
    split = _check_split(split)
    if sum(split) != lam.level:
        raise DomainError(f"split {split} does not sum to the level {lam.level}")
    out, start = [], 0
    for size in split:
        out.append(Multipartition(lam.components[start:start + size]))
        start += size
    return tuple(out)


def morita_split(v: GrothVector, split: Sequence[int]) -> SplitVector:
    split = _check_split(split)
    if sum(split) != v.level:
        raise DomainError(f"split {split} does not sum to the level {v.level}")
    return SplitVector(split, [(blocks(lam, split), c) for lam, c in v.items()])


def _blockwise(w: SplitVector, nodes_of, move) -> SplitVector:
    def image(key):
        for j, block in enumerate(key):
            for x in nodes_of(block):
                yield key[:j] + (move(block, x),) + key[j + 1:], 1
    return w.map_linear(image)


def induce_split(w: SplitVector) -> SplitVector:
    """Induce in each block in turn and sum over the blocks."""
    return _blockwise(w, addable_nodes, add_node)


def restrict_split(w: SplitVector) -> SplitVector:
    # an empty block has no removable node, so it contributes nothing
    return _blockwise(w, removable_nodes, remove_node)


def diagram_commutes(lam, split: Sequence[int], restriction: bool = False) -> bool:
    """Whether splitting commutes with induction (or restriction) on [S^lambda]."""
    v = GrothVector.specht(lam)
    if restriction:
        return morita_split(restrict(v), split) == restrict_split(morita_split(v, split))
    return morita_split(induce(v), split) == induce_split(morita_split(v, split))


def compositions(r: int) -> list[tuple[int, ...]]:
    """All compositions of r (ordered splits into positive parts)."""
    if r == 0:
        return [()]
    return [(first,) + rest for first in range(1, r + 1) for rest in compositions(r - first)]


def verify_diagram(r: int, n: int, restriction: bool = False) -> list[tuple[Multipartition, tuple[int, ...]]]:
    """Failures of the commuting square over all degree <= n and all splits."""
    failures = []
    for split in compositions(r):
        for deg in range(n + 1):
            for lam in enumerate_multipartitions(r, deg):
                if not diagram_commutes(lam, split, restriction):
                    failures.append((lam, split))
    return failures
