"""Partitions, multipartitions and the nodes of their Young diagrams.

Nodes are triples ``(row, col, comp)``, all 1-based.  Multipartitions keep
their empty components so the level can always be read off the value.

The canonical string form is ``(3,1)|(2)|()``: one parenthesised component
per level, parts separated by commas, no whitespace.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .errors import DomainError, ParseError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for k, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise DomainError(f"partition parts must be positive integers, got {p!r}")
            if k and parts[k - 1] < p:
                raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, row: int) -> int:
        """Length of ``row`` (1-based); 0 past the last row."""
        return self[row - 1] if row <= len(self) else 0

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class Node(NamedTuple):
    row: int
    col: int
    comp: int

    def __str__(self) -> str:
        return f"({self.row},{self.col},{self.comp})"


def node_key(x: Node) -> tuple[int, int, int]:
    """Sort key putting higher nodes first."""
    return (x.comp, x.row, -x.col)


def node_above(x: Node, y: Node) -> bool:
    """True iff ``x`` lies strictly above (is higher than) ``y``."""
    a, b, c = x
    a2, b2, c2 = y
    return c < c2 or (c == c2 and a < a2) or (c == c2 and a == a2 and b > b2)


@total_ordering
@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in self.components)
        if not comps:
            raise DomainError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def empty(cls, r: int) -> "Multipartition":
        return cls((Partition(),) * r)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return sum(c.size for c in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, c: int) -> Partition:
        """Component ``c``, 1-based."""
        if not 1 <= c <= len(self.components):
            raise IndexError(f"component {c} out of range 1..{self.level}")
        return self.components[c - 1]

    def __contains__(self, x: Node) -> bool:
        return 1 <= x.comp <= self.level and x.row >= 1 and 1 <= x.col <= self[x.comp].part(x.row)

    def nodes(self) -> list[Node]:
        """All nodes of the Young diagram, highest first."""
        out = [Node(a, b, c)
               for c, comp in enumerate(self.components, 1)
               for a, length in enumerate(comp, 1)
               for b in range(length, 0, -1)]
        return out

    def sort_key(self):
        return (self.degree,
                tuple(-c.size for c in self.components),
                tuple(tuple(-p for p in c) for c in self.components))

    def __lt__(self, other: "Multipartition") -> bool:
        if not isinstance(other, Multipartition):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_multipartition(self)

    def __repr__(self) -> str:
        return f"Multipartition({format_multipartition(self)!r})"

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.components]

    @classmethod
    def from_json(cls, obj: Sequence[Sequence[int]]) -> "Multipartition":
        if not isinstance(obj, (list, tuple)):
            raise DomainError(f"expected an array of arrays, got {obj!r}")
        return cls(tuple(Partition(c) for c in obj))


def as_multipartition(value) -> Multipartition:
    """Coerce a canonical string, a JSON-style nested list, or a Partition."""
    if isinstance(value, Multipartition):
        return value
    if isinstance(value, str):
        return parse_multipartition(value)
    if isinstance(value, Partition):
        return Multipartition((value,))
    return Multipartition.from_json(value)


def addable_nodes(lam: Multipartition) -> list[Node]:
    """Addable nodes of ``lam``, highest to lowest."""
    out = []
    for c, comp in enumerate(lam.components, 1):
        for a in range(1, len(comp) + 2):
            length = comp.part(a)
            if a == 1 or comp.part(a - 1) > length:
                out.append(Node(a, length + 1, c))
    return out


def removable_nodes(lam: Multipartition) -> list[Node]:
    """Removable nodes of ``lam``, highest to lowest."""
    out = []
    for c, comp in enumerate(lam.components, 1):
        for a in range(1, len(comp) + 1):
            if comp.part(a) > comp.part(a + 1):
                out.append(Node(a, comp.part(a), c))
    return out


def add_node(lam: Multipartition, x: Node) -> Multipartition:
    if x not in addable_nodes(lam):
        raise DomainError(f"{x} is not an addable node of {lam}")
    parts = list(lam[x.comp])
    if x.row > len(parts):
        parts.append(1)
    else:
        parts[x.row - 1] += 1
    return _replace_component(lam, x.comp, Partition(parts))


def remove_node(lam: Multipartition, x: Node) -> Multipartition:
    if x not in removable_nodes(lam):
        raise DomainError(f"{x} is not a removable node of {lam}")
    parts = list(lam[x.comp])
    parts[x.row - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    return _replace_component(lam, x.comp, Partition(parts))


def _replace_component(lam: Multipartition, c: int, comp: Partition) -> Multipartition:
    comps = list(lam.components)
    comps[c - 1] = comp
    return Multipartition(tuple(comps))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def _compositions(n: int, r: int):
    # weak compositions of n into r parts, first part largest first
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for tail in _compositions(n - first, r - 1):
            yield (first,) + tail


@lru_cache(maxsize=None)
def enumerate_multipartitions(r: int, n: int) -> tuple[Multipartition, ...]:
    """All r-multipartitions of n, each once, in canonical order."""
    if r < 1:
        raise DomainError(f"level must be at least 1, got {r}")
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    out = []
    for sizes in _compositions(n, r):
        for comps in product(*(partitions(k) for k in sizes)):
            out.append(Multipartition(comps))
    return tuple(out)


def format_multipartition(lam: Multipartition) -> str:
    return "|".join(str(c) for c in lam.components)


def parse_multipartition(text: str) -> Multipartition:
    """Parse the canonical form, e.g. ``"(3,1)|(2)|()"``."""
    pos = 0
    comps = []

    def expect(ch: str):
        nonlocal pos
        if pos >= len(text) or text[pos] != ch:
            found = repr(text[pos]) if pos < len(text) else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", text, pos)
        pos += 1

    while True:
        start = pos
        expect("(")
        parts = []
        if pos < len(text) and text[pos] != ")":
            while True:
                num_start = pos
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
                digits = text[num_start:pos]
                if not digits:
                    raise ParseError("expected a positive integer", text, num_start)
                if digits[0] == "0":
                    raise ParseError("parts must be positive without leading zeros", text, num_start)
                parts.append(int(digits))
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                    continue
                break
        expect(")")
        try:
            comps.append(Partition(parts))
        except DomainError as exc:
            raise ParseError(str(exc), text, start) from None
        if pos == len(text):
            break
        expect("|")
    return Multipartition(tuple(comps))
