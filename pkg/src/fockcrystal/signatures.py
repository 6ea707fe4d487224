"""i-signatures and the normal / co-normal / good / co-good nodes they define."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DomainError
from .partitions import Multipartition, Node, addable_nodes, node_key, removable_nodes
from .residues import Multicharge, _check_level, residue


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __str__(self) -> str:
        return self.value


class SignatureSymbol(NamedTuple):
    sign: Sign
    node: Node

    def __str__(self) -> str:
        return f"{self.sign}{self.node}"


@dataclass(frozen=True)
class Signature:
    """Addable (+) and removable (-) i-nodes, highest first."""

    residue: int
    symbols: tuple[SignatureSymbol, ...]

    @property
    def word(self) -> str:
        return "".join(str(sym.sign) for sym in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return " ".join(map(str, self.symbols))


class ReducedSignature(Signature):
    """A signature with no adjacent (-, +) pair left, i.e. of shape +...+-...-."""


def require_crystal_e(s: Multicharge):
    if s.e.is_one:
        raise DomainError("crystal operations are undefined for e = 1 (q = 1)")


def i_signature(lam: Multipartition, s: Multicharge, i: int) -> Signature:
    require_crystal_e(s)
    _check_level(lam, s)
    syms = [SignatureSymbol(Sign.PLUS, x) for x in addable_nodes(lam) if residue(x, s) == i]
    syms += [SignatureSymbol(Sign.MINUS, x) for x in removable_nodes(lam) if residue(x, s) == i]
    syms.sort(key=lambda sym: node_key(sym.node))
    return Signature(i, tuple(syms))


def surviving_positions(signs: Sequence[Sign]) -> list[int]:
    """Positions left after repeatedly cancelling adjacent (-, +) pairs.

    Single pass: a + cancels the nearest unmatched - to its left, which is
    adjacent once everything between has cancelled.
    """
    plus_survivors = []
    open_minus = []
    for k, sign in enumerate(signs):
        if sign is Sign.MINUS:
            open_minus.append(k)
        elif open_minus:
            open_minus.pop()
        else:
            plus_survivors.append(k)
    return plus_survivors + open_minus


def reduce(sig: Signature) -> ReducedSignature:
    keep = surviving_positions([sym.sign for sym in sig.symbols])
    return ReducedSignature(sig.residue, tuple(sig.symbols[k] for k in keep))


def reduce_word(word: str) -> str:
    """Reduce a bare word over ``+`` and ``-``."""
    signs = [Sign(ch) for ch in word]
    return "".join(word[k] for k in surviving_positions(signs))


def reduced_signature(lam: Multipartition, s: Multicharge, i: int) -> ReducedSignature:
    return reduce(i_signature(lam, s, i))


def normal_nodes(lam: Multipartition, s: Multicharge, i: int) -> list[Node]:
    return [sym.node for sym in reduced_signature(lam, s, i).symbols if sym.sign is Sign.MINUS]


def conormal_nodes(lam: Multipartition, s: Multicharge, i: int) -> list[Node]:
    return [sym.node for sym in reduced_signature(lam, s, i).symbols if sym.sign is Sign.PLUS]


def good_node(lam: Multipartition, s: Multicharge, i: int) -> Node | None:
    """The highest i-normal node, or None."""
    normal = normal_nodes(lam, s, i)
    return normal[0] if normal else None


def cogood_node(lam: Multipartition, s: Multicharge, i: int) -> Node | None:
    """The lowest i-co-normal node, or None."""
    conormal = conormal_nodes(lam, s, i)
    return conormal[-1] if conormal else None


def phi(lam: Multipartition, s: Multicharge, i: int) -> int:
    return len(conormal_nodes(lam, s, i))


def eps(lam: Multipartition, s: Multicharge, i: int) -> int:
    return len(normal_nodes(lam, s, i))


def residues_in_play(lam: Multipartition, s: Multicharge) -> list[int]:
    """Residues worth inspecting: all of 0..e-1, or for e = inf those of the
    addable and removable nodes (every other phi_i, eps_i vanishes)."""
    require_crystal_e(s)
    if s.e.is_finite:
        return list(range(s.e.order))
    return sorted({residue(x, s) for x in addable_nodes(lam) + removable_nodes(lam)})


def phi_profile(lam: Multipartition, s: Multicharge) -> dict[int, int]:
    return {i: phi(lam, s, i) for i in residues_in_play(lam, s)}


def eps_profile(lam: Multipartition, s: Multicharge) -> dict[int, int]:
    return {i: eps(lam, s, i) for i in residues_in_play(lam, s)}
