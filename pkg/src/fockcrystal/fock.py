"""The level-r Fock space with exact integer coefficients.

Basis vectors are the multipartitions of level r; ``e_i`` removes an i-node,
``f_i`` adds one, ``h_i`` and ``d`` act diagonally.  Only finite e >= 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .combination import IntCombination
from .errors import DomainError
from .partitions import (Multipartition, add_node, addable_nodes, as_multipartition,
                         enumerate_multipartitions, remove_node, removable_nodes)
from .residues import Multicharge, residue, residue_content


def _require_fock_charge(s: Multicharge):
    if not s.e.is_finite:
        raise DomainError(f"the Fock space action needs a finite e >= 2, got e = {s.e}")


class FockVector(IntCombination):
    __slots__ = ("charge",)

    def __init__(self, charge: Multicharge, terms=()):
        _require_fock_charge(charge)
        self.charge = charge
        super().__init__(terms)

    def _coerce_key(self, key):
        lam = as_multipartition(key)
        if lam.level != self.charge.level:
            raise DomainError(f"{lam} does not have level {self.charge.level}")
        return lam

    def _context(self):
        return self.charge

    def _rebuild(self, terms):
        return FockVector(self.charge, terms)

    def _sort_key(self, key):
        return key.sort_key()

    @classmethod
    def basis(cls, lam, s: Multicharge) -> "FockVector":
        return cls(s, [(lam, 1)])

    @classmethod
    def zero(cls, s: Multicharge) -> "FockVector":
        return cls(s)


def _check_index(s: Multicharge, i: int):
    if not isinstance(i, int) or not 0 <= i < s.e.order:
        raise DomainError(f"residue index must lie in 0..{s.e.order - 1}, got {i!r}")


@lru_cache(maxsize=None)
def _e_image(lam: Multipartition, s: Multicharge, i: int):
    return tuple((remove_node(lam, x), 1) for x in removable_nodes(lam) if residue(x, s) == i)


@lru_cache(maxsize=None)
def _f_image(lam: Multipartition, s: Multicharge, i: int):
    return tuple((add_node(lam, x), 1) for x in addable_nodes(lam) if residue(x, s) == i)


def n_i(lam: Multipartition, s: Multicharge, i: int) -> int:
    """Addable minus removable i-nodes."""
    add = sum(1 for x in addable_nodes(lam) if residue(x, s) == i)
    rem = sum(1 for x in removable_nodes(lam) if residue(x, s) == i)
    return add - rem


def apply_e(v: FockVector, i: int) -> FockVector:
    _check_index(v.charge, i)
    return v.map_linear(lambda lam: _e_image(lam, v.charge, i))


def apply_f(v: FockVector, i: int) -> FockVector:
    _check_index(v.charge, i)
    return v.map_linear(lambda lam: _f_image(lam, v.charge, i))


def apply_h(v: FockVector, i: int) -> FockVector:
    _check_index(v.charge, i)
    return v.map_linear(lambda lam: [(lam, n_i(lam, v.charge, i))])


def apply_d(v: FockVector) -> FockVector:
    return v.map_linear(lambda lam: [(lam, -residue_content(lam, v.charge).get(0, 0))])


@dataclass(frozen=True)
class Weight:
    h: tuple[int, ...]
    d: int


def weight(lam: Multipartition, s: Multicharge) -> Weight:
    """Eigenvalues of h_0..h_{e-1} and d on the basis vector of ``lam``."""
    _require_fock_charge(s)
    h = tuple(n_i(lam, s, i) for i in range(s.e.order))
    return Weight(h, -residue_content(lam, s).get(0, 0))


def cartan_matrix(e: int) -> tuple[tuple[int, ...], ...]:
    """Generalised Cartan matrix of affine type A_{e-1}; for e = 2 the
    off-diagonal entries are -2."""
    if e < 2:
        raise DomainError(f"e must be at least 2, got {e}")
    return tuple(
        tuple(2 * (i == j) - ((j - i) % e == e - 1) - ((j - i) % e == 1) for j in range(e))
        for i in range(e))


def weight_via_roots(lam: Multipartition, s: Multicharge) -> Weight:
    """The weight computed as Lambda_s minus the residue content in simple roots."""
    _require_fock_charge(s)
    e = s.e.order
    a = cartan_matrix(e)
    content = residue_content(lam, s)
    c = [content.get(j, 0) for j in range(e)]
    h = tuple(sum(1 for sk in s.entries if sk % e == i) - sum(a[i][j] * c[j] for j in range(e))
              for i in range(e))
    return Weight(h, -c[0])


Operator = Callable[[FockVector], FockVector]


def commutator(x: Operator, y: Operator) -> Operator:
    return lambda v: x(y(v)) - y(x(v))


def ad_power(x: Operator, k: int, y: Operator) -> Operator:
    """(ad x)^k (y)."""
    op = y
    for _ in range(k):
        op = commutator(x, op)
    return op


@dataclass
class RelationCheck:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: str | None = None

    def record(self, ok: bool, describe: Callable[[], str]):
        self.cases += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = describe()


@dataclass
class RelationReport:
    e: int
    charge: tuple[int, ...]
    degree: int
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_obj(self) -> dict:
        return {
            "e": self.e,
            "charge": list(self.charge),
            "degree": self.degree,
            "passed": self.passed,
            "checks": [{"relation": c.name, "passed": c.passed, "cases": c.cases,
                        "counterexample": c.counterexample} for c in self.checks],
        }


def check_relations(s: Multicharge, n: int) -> RelationReport:
    """Check the defining relations on every basis vector of degree <= n."""
    _require_fock_charge(s)
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    e = s.e.order
    a = cartan_matrix(e)
    E = [lambda v, i=i: apply_e(v, i) for i in range(e)]
    F = [lambda v, i=i: apply_f(v, i) for i in range(e)]
    H = [lambda v, i=i: apply_h(v, i) for i in range(e)]
    D = apply_d

    checks = {name: RelationCheck(name) for name in (
        "[e_i,f_j] = delta_ij h_i",
        "[h_i,e_j] = a_ij e_j",
        "[h_i,f_j] = -a_ij f_j",
        "[d,e_j] = delta_0j e_j",
        "[d,f_j] = -delta_0j f_j",
        "[h_i,h_j] = [d,h_i] = 0",
        "Serre relations for e",
        "Serre relations for f",
    )}

    def expect(name, lhs: Operator, rhs: Operator, v: FockVector, label: str):
        diff = lhs(v) - rhs(v)
        checks[name].record(not diff, lambda: f"{label} on |{v.keys()[0]}>: difference {diff!r}")

    def zero(v):
        return FockVector.zero(s)

    def scaled(k: int, op: Operator) -> Operator:
        return lambda v: k * op(v)

    for deg in range(n + 1):
        for lam in enumerate_multipartitions(s.level, deg):
            v = FockVector.basis(lam, s)
            for i in range(e):
                expect("[d,e_j] = delta_0j e_j", commutator(D, E[i]),
                       scaled(int(i == 0), E[i]), v, f"j={i}")
                expect("[d,f_j] = -delta_0j f_j", commutator(D, F[i]),
                       scaled(-int(i == 0), F[i]), v, f"j={i}")
                expect("[h_i,h_j] = [d,h_i] = 0", commutator(D, H[i]), zero, v, f"i={i}")
                for j in range(e):
                    label = f"i={i}, j={j}"
                    expect("[e_i,f_j] = delta_ij h_i", commutator(E[i], F[j]),
                           H[i] if i == j else zero, v, label)
                    expect("[h_i,e_j] = a_ij e_j", commutator(H[i], E[j]),
                           scaled(a[i][j], E[j]), v, label)
                    expect("[h_i,f_j] = -a_ij f_j", commutator(H[i], F[j]),
                           scaled(-a[i][j], F[j]), v, label)
                    expect("[h_i,h_j] = [d,h_i] = 0", commutator(H[i], H[j]), zero, v, label)
                    if i == j:
                        continue
                    k = 1 - a[i][j]
                    expect("Serre relations for e", ad_power(E[i], k, E[j]), zero, v,
                           f"(ad e_{i})^{k} e_{j}")
                    expect("Serre relations for f", ad_power(F[i], k, F[j]), zero, v,
                           f"(ad f_{i})^{k} f_{j}")
    return RelationReport(e, s.entries, n, list(checks.values()))
