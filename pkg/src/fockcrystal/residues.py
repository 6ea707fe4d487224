"""Quantum characteristic, multicharges and node residues."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .partitions import Multipartition, Node


@dataclass(frozen=True)
class EParam:
    """The multiplicative order of q: an integer >= 2, 1 (q = 1) or infinity.

    ``order`` is ``None`` for infinity.
    """

    order: int | None

    def __post_init__(self):
        if self.order is not None and (not isinstance(self.order, int) or self.order < 1):
            raise DomainError(f"e must be 1, an integer >= 2 or infinity, got {self.order!r}")

    @classmethod
    def finite(cls, e: int) -> "EParam":
        if e < 2:
            raise DomainError(f"a finite e must be at least 2, got {e}")
        return cls(e)

    @classmethod
    def parse(cls, text: str | int) -> "EParam":
        if isinstance(text, int):
            return cls(text)
        t = text.strip().lower()
        if t in ("inf", "infinity", "oo", "∞"):
            return INFINITY
        try:
            return cls(int(t))
        except ValueError:
            raise DomainError(f"cannot parse e from {text!r}") from None

    @property
    def is_finite(self) -> bool:
        """True for e >= 2."""
        return self.order is not None and self.order >= 2

    @property
    def is_one(self) -> bool:
        return self.order == 1

    @property
    def is_infinite(self) -> bool:
        return self.order is None

    def reduce(self, value: int) -> int:
        if self.order is None:
            return value
        return value % self.order

    def __str__(self) -> str:
        return "inf" if self.order is None else str(self.order)

    def to_json(self) -> int | str:
        return "inf" if self.order is None else self.order


ONE = EParam(1)
INFINITY = EParam(None)


@dataclass(frozen=True)
class Multicharge:
    entries: tuple[int, ...]
    e: EParam

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise DomainError("a multicharge needs at least one entry")
        if any(not isinstance(s, int) or s < 0 for s in entries):
            raise DomainError(f"multicharge entries must be non-negative integers, got {entries}")
        if any(a > b for a, b in zip(entries, entries[1:])):
            raise DomainError(f"multicharge entries must be weakly increasing, got {entries}")
        if self.e.is_finite and entries[-1] >= self.e.order:
            raise DomainError(f"multicharge entries must be < e = {self.e}, got {entries}")
        if self.e.is_one and any(entries):
            raise DomainError(f"for e = 1 all charges are 0, got {entries}")

    @property
    def level(self) -> int:
        return len(self.entries)

    def __getitem__(self, c: int) -> int:
        """Charge of component ``c``, 1-based."""
        return self.entries[c - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


def normalize_multicharge(raw: Iterable[int], e: EParam) -> Multicharge:
    """The sorted representative of the residue multiset of ``raw``."""
    raw = tuple(raw)
    if e.is_one:
        return Multicharge((0,) * len(raw), e)
    if e.is_infinite and any(s < 0 for s in raw):
        raise DomainError(f"for e = inf the charges must be non-negative, got {raw}")
    return Multicharge(tuple(sorted(e.reduce(s) for s in raw)), e)


def residue(x: Node, s: Multicharge) -> int:
    if not 1 <= x.comp <= s.level:
        raise DomainError(f"node {x} has no component in a level-{s.level} multicharge")
    return s.e.reduce(x.col - x.row + s[x.comp])


def residue_content(lam: Multipartition, s: Multicharge) -> dict[int, int]:
    """Number of i-nodes of ``lam`` for every residue i that occurs."""
    _check_level(lam, s)
    return dict(sorted(Counter(residue(x, s) for x in lam.nodes()).items()))


def _check_level(lam: Multipartition, s: Multicharge):
    if lam.level != s.level:
        raise DomainError(f"{lam} has level {lam.level} but the multicharge has level {s.level}")
