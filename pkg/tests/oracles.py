"""Brute-force reference computations, kept independent of the library paths
they are used to check."""
from __future__ import annotations

from itertools import combinations_with_replacement


def diagram(components) -> set[tuple[int, int, int]]:
    return {(a, b, c)
            for c, parts in enumerate(components, 1)
            for a, length in enumerate(parts, 1)
            for b in range(1, length + 1)}


def is_young_diagram(nodes: set[tuple[int, int, int]]) -> bool:
    return all((a == 1 or (a - 1, b, c) in nodes) and (b == 1 or (a, b - 1, c) in nodes)
               for a, b, c in nodes)


def _candidates(components):
    for c, parts in enumerate(components, 1):
        rows = len(parts) + 1
        cols = (parts[0] if parts else 0) + 1
        for a in range(1, rows + 1):
            for b in range(1, cols + 1):
                yield (a, b, c)


def brute_addable(components) -> set[tuple[int, int, int]]:
    d = diagram(components)
    return {x for x in _candidates(components) if x not in d and is_young_diagram(d | {x})}


def brute_removable(components) -> set[tuple[int, int, int]]:
    d = diagram(components)
    return {x for x in d if is_young_diagram(d - {x})}


def raw_partitions(n: int, cap: int | None = None):
    """Every partition of n as a tuple, by plain recursion."""
    cap = n if cap is None else cap
    if n == 0:
        return [()]
    out = []
    for first in range(1, min(n, cap) + 1):
        out += [(first,) + rest for rest in raw_partitions(n - first, first)]
    return out


def restricted_partitions(n: int, e: int):
    """e-restricted partitions: consecutive part differences and the last part below e."""
    def ok(p):
        padded = list(p) + [0]
        return all(padded[k] - padded[k + 1] < e for k in range(len(p)))
    return [p for p in raw_partitions(n) if ok(p)]


def partition_counts(nmax: int) -> list[int]:
    p = [1] + [0] * nmax
    for k in range(1, nmax + 1):
        for m in range(k, nmax + 1):
            p[m] += p[m - k]
    return p


def multipartition_counts(r: int, nmax: int) -> list[int]:
    """r-fold convolution of the partition counts."""
    p = partition_counts(nmax)
    acc = [1] + [0] * nmax
    for _ in range(r):
        acc = [sum(acc[k] * p[m - k] for k in range(m + 1)) for m in range(nmax + 1)]
    return acc


def all_reductions(word: str) -> set[str]:
    """Results of every order of cancelling adjacent '-+' pairs."""
    seen: dict[str, set[str]] = {}

    def go(w: str) -> set[str]:
        if w in seen:
            return seen[w]
        spots = [k for k in range(len(w) - 1) if w[k:k + 2] == "-+"]
        res = {w} if not spots else set().union(*(go(w[:k] + w[k + 2:]) for k in spots))
        seen[w] = res
        return res

    return go(word)


def charges(r: int, e: int | None, inf_max: int = 2):
    """Weakly increasing charge tuples with entries < e (or <= inf_max for e = inf)."""
    top = e if e is not None else inf_max + 1
    return list(combinations_with_replacement(range(top), r))
