"""Crystal operators and degree-truncated crystal graphs of Fock spaces."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .partitions import (Multipartition, add_node, addable_nodes, enumerate_multipartitions,
                         parse_multipartition, remove_node)
from .residues import EParam, Multicharge, residue
from .signatures import cogood_node, good_node, require_crystal_e, residues_in_play

Edge = tuple[Multipartition, int, Multipartition]


def f_tilde(lam: Multipartition, s: Multicharge, i: int) -> Multipartition | None:
    """Add the i-co-good node, or None if there is none."""
    x = cogood_node(lam, s, i)
    return None if x is None else add_node(lam, x)


def e_tilde(lam: Multipartition, s: Multicharge, i: int) -> Multipartition | None:
    """Remove the i-good node, or None if there is none."""
    x = good_node(lam, s, i)
    return None if x is None else remove_node(lam, x)


@dataclass(frozen=True)
class CrystalGraph:
    charge: Multicharge
    max_degree: int
    layers: tuple[tuple[Multipartition, ...], ...]
    edges: tuple[Edge, ...]
    kleshchev: bool = False

    @property
    def e(self) -> EParam:
        return self.charge.e

    @property
    def vertices(self) -> list[Multipartition]:
        return [v for layer in self.layers for v in layer]

    def counts(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def out_edges(self, v: Multipartition) -> list[Edge]:
        return [edge for edge in self.edges if edge[0] == v]

    def in_edges(self, v: Multipartition) -> list[Edge]:
        return [edge for edge in self.edges if edge[2] == v]


def _edge_key(edge: Edge):
    src, i, dst = edge
    return (src.sort_key(), i, dst.sort_key())


def _check_degree(n: int):
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")


def _f_edges(lam: Multipartition, s: Multicharge) -> list[Edge]:
    out = []
    for i in sorted({residue(x, s) for x in addable_nodes(lam)}):
        mu = f_tilde(lam, s, i)
        if mu is not None:
            out.append((lam, i, mu))
    return out


@lru_cache(maxsize=64)
def full_fock_crystal(s: Multicharge, n: int) -> CrystalGraph:
    """All multipartitions of degree <= n with every f-tilde edge among them."""
    require_crystal_e(s)
    _check_degree(n)
    layers = tuple(enumerate_multipartitions(s.level, d) for d in range(n + 1))
    edges = [edge for layer in layers[:-1] for lam in layer for edge in _f_edges(lam, s)]
    edges.sort(key=_edge_key)
    return CrystalGraph(s, n, layers, tuple(edges))


@lru_cache(maxsize=64)
def kleshchev_component(s: Multicharge, n: int) -> CrystalGraph:
    """The connected component of the empty multipartition, truncated at degree n.

    Undirected search inside the truncation is exact: a vertex of the component
    of the empty multipartition is reached from it by an f-tilde path through
    lower degrees only.
    """
    full = full_fock_crystal(s, n)
    adjacent: dict[Multipartition, list[Multipartition]] = {}
    for src, _, dst in full.edges:
        adjacent.setdefault(src, []).append(dst)
        adjacent.setdefault(dst, []).append(src)
    root = Multipartition.empty(s.level)
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in adjacent.get(v, ()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    layers = tuple(tuple(v for v in layer if v in seen) for layer in full.layers)
    edges = tuple(edge for edge in full.edges if edge[0] in seen)
    return CrystalGraph(s, n, layers, edges, kleshchev=True)


def is_kleshchev(lam: Multipartition, s: Multicharge) -> bool:
    require_crystal_e(s)
    if lam.level != s.level:
        raise DomainError(f"{lam} has level {lam.level} but the multicharge has level {s.level}")
    return lam in kleshchev_component(s, lam.degree).layers[lam.degree]


def peel(lam: Multipartition, s: Multicharge) -> list[tuple[int, Multipartition]]:
    """Strip good nodes (smallest applicable residue first) until none is left.

    Returns the (residue, result) steps.  Kleshchev multipartitions, and only
    those, peel all the way down to the empty one.
    """
    steps = []
    while True:
        for i in residues_in_play(lam, s):
            mu = e_tilde(lam, s, i)
            if mu is not None:
                steps.append((i, mu))
                lam = mu
                break
        else:
            return steps


def is_kleshchev_by_peeling(lam: Multipartition, s: Multicharge) -> bool:
    steps = peel(lam, s)
    end = steps[-1][1] if steps else lam
    return end.degree == 0


def export_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for src, i, dst in g.edges:
        lines.append(f'  "{src}" -> "{dst}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def crystal_to_json_obj(g: CrystalGraph) -> dict:
    return {
        "e": g.e.to_json(),
        "charge": list(g.charge.entries),
        "max_degree": g.max_degree,
        "kleshchev": g.kleshchev,
        "layers": [[str(v) for v in layer] for layer in g.layers],
        "edges": [[str(src), i, str(dst)] for src, i, dst in g.edges],
    }


def export_json(g: CrystalGraph) -> str:
    return json.dumps(crystal_to_json_obj(g), indent=2) + "\n"


def read_json(text: str) -> CrystalGraph:
    obj = json.loads(text)
    s = Multicharge(tuple(obj["charge"]), EParam.parse(obj["e"]))
    layers = tuple(tuple(parse_multipartition(v) for v in layer) for layer in obj["layers"])
    edges = tuple((parse_multipartition(a), i, parse_multipartition(b)) for a, i, b in obj["edges"])
    return CrystalGraph(s, obj["max_degree"], layers, edges, kleshchev=obj["kleshchev"])
