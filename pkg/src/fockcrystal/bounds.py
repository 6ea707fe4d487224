"""Lower bounds on the number of constituents of induced modules.

Ariki-Koike parameters are symbolic: each ``Q_i`` is ``u_tag * q^k``.  Two
parameters are q-connected exactly when their tags agree; distinct tags are
never q-connected.  The tag ``q0`` is reserved for pure powers of q.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .crystal import is_kleshchev
from .errors import DomainError, ParseError
from .partitions import Multipartition, Partition, addable_nodes
from .residues import INFINITY, EParam, Multicharge
from .signatures import phi_profile

PURE_Q = "q0"


@dataclass(frozen=True)
class UnitExpr:
    tag: str
    q_exponent: int = 0

    def __str__(self) -> str:
        if self.tag == PURE_Q:
            return f"q^{self.q_exponent}"
        return f"{self.tag}*q^{self.q_exponent}"


_TOKEN = re.compile(r"""
    (?:(?P<tag>u\w+)(?:\*(?P<qpart>q(?:\^(?P<exp1>-?\d+))?))?)
  | (?P<pure>q(?:\^(?P<exp2>-?\d+))?)
  | (?P<unit>1)
""", re.VERBOSE)


def parse_unit(token: str) -> UnitExpr:
    """Parse ``q^k``, ``q``, ``1``, ``u<id>`` or ``u<id>*q^k``."""
    text = token.strip()
    m = _TOKEN.fullmatch(text)
    if not m:
        raise ParseError("expected q^<int> or u<id>*q^<int>", token, 0)
    if m.group("tag"):
        exp = m.group("exp1")
        return UnitExpr(m.group("tag"), int(exp) if exp else (1 if m.group("qpart") else 0))
    if m.group("pure"):
        exp = m.group("exp2")
        return UnitExpr(PURE_Q, int(exp) if exp else 1)
    return UnitExpr(PURE_Q, 0)


def parse_units(text: str) -> list[UnitExpr]:
    return [parse_unit(tok) for tok in text.split(",")]


def parse_q(text: str) -> EParam:
    """``e<k>`` or ``<k>`` (root of unity of order k >= 2), ``1``, or ``generic``."""
    t = text.strip().lower()
    if t in ("generic", "inf", "infinity"):
        return INFINITY
    if t.startswith("e"):
        t = t[1:]
    try:
        return EParam(int(t))
    except ValueError:
        raise DomainError(f"cannot parse q from {text!r}; use e<k>, 1 or generic") from None


@dataclass(frozen=True)
class ParameterSet:
    """The order of q (finite, 1, or infinite for generic q) and Q_1..Q_r."""

    q: EParam
    Q: tuple[UnitExpr, ...]

    def __post_init__(self):
        Q = tuple(self.Q)
        if not Q:
            raise DomainError("at least one parameter Q_i is needed")
        if self.q.is_one:
            Q = tuple(UnitExpr(u.tag, 0) for u in Q)
        object.__setattr__(self, "Q", Q)

    @property
    def r(self) -> int:
        return len(self.Q)


def q_classes(p: ParameterSet) -> list[tuple[UnitExpr, ...]]:
    """q-connection classes of the parameters, in first-occurrence order."""
    groups: dict[str, list[UnitExpr]] = {}
    for u in p.Q:
        groups.setdefault(u.tag, []).append(u)
    return [tuple(g) for g in groups.values()]


def class_multicharge(members: Sequence[UnitExpr], q: EParam) -> Multicharge:
    if not members:
        raise DomainError("a q-connection class is never empty")
    exps = [u.q_exponent for u in members]
    if q.is_one:
        return Multicharge((0,) * len(exps), q)
    if q.is_finite:
        return Multicharge(tuple(sorted(x % q.order for x in exps)), q)
    low = min(exps)
    return Multicharge(tuple(sorted(x - low for x in exps)), q)


def class_bound(r_j: int, q: EParam) -> int:
    """Per-class bound: 2 r_j at q = 1, otherwise r_j + 1."""
    if r_j < 1:
        raise DomainError(f"class size must be positive, got {r_j}")
    return 2 * r_j if q.is_one else r_j + 1


@dataclass(frozen=True)
class ClassBound:
    members: tuple[UnitExpr, ...]
    size: int
    charge: Multicharge
    bound: int


@dataclass(frozen=True)
class BoundReport:
    r: int
    t: int
    classes: tuple[ClassBound, ...]
    theorem_bound: int
    refined_bound: int

    def to_json_obj(self) -> dict:
        return {
            "r": self.r,
            "t": self.t,
            "theorem_bound": self.theorem_bound,
            "refined_bound": self.refined_bound,
            "classes": [{"members": [str(u) for u in c.members], "r_j": c.size,
                         "charge": list(c.charge.entries), "bound": c.bound}
                        for c in self.classes],
        }


def theorem_bound(p: ParameterSet) -> BoundReport:
    """At least r + t constituents; per class the sharper bound sums higher."""
    classes = tuple(ClassBound(m, len(m), class_multicharge(m, p.q), class_bound(len(m), p.q))
                    for m in q_classes(p))
    t = len(classes)
    return BoundReport(p.r, t, classes, p.r + t, sum(c.bound for c in classes))


def fock_module_bound(s: Multicharge, lam: Multipartition) -> int:
    """Sum of phi_i over all i, valid for any vertex of the Fock crystal."""
    return sum(phi_profile(lam, s).values())


def module_bound(s: Multicharge, lam: Multipartition) -> int:
    """Crystal lower bound for the induction of the simple module labelled by a
    Kleshchev multipartition.  A lower bound only; it need not be attained."""
    if not is_kleshchev(lam, s):
        raise DomainError(f"{lam} is not Kleshchev for e = {s.e}, charge ({s}) (see is_kleshchev)")
    return fock_module_bound(s, lam)


def cherednik_bound(r: int) -> int:
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    return r


def q1_char0_count(r: int, alpha: Partition) -> int:
    """Exact constituent count at q = 1 over a field of characteristic 0.

    Symmetric-group induction is then multiplicity free with one constituent
    per addable node of ``alpha``; the count is r times that.
    """
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    alpha = Partition(alpha)
    return r * len(addable_nodes(Multipartition((alpha,))))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class DegenerateBound:
    char_p: int
    r: int
    base: int
    refined: int | None = None


def degenerate_bound(char_p: int, r: int, charge: Iterable[int] | None = None,
                     lam: Multipartition | None = None) -> DegenerateBound:
    """Bound for degenerate cyclotomic Hecke algebras over a field of
    characteristic ``char_p``; with ``charge`` and ``lam`` also the crystal
    refinement at e = char_p (e = inf in characteristic 0)."""
    if char_p != 0 and not _is_prime(char_p):
        raise DomainError(f"characteristic must be 0 or a prime, got {char_p}")
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    refined = None
    if (charge is None) != (lam is None):
        raise DomainError("the refined bound needs both a multicharge and a multipartition")
    if charge is not None:
        e = INFINITY if char_p == 0 else EParam.finite(char_p)
        s = Multicharge(tuple(charge), e)
        if s.level != r:
            raise DomainError(f"multicharge has level {s.level}, expected r = {r}")
        refined = module_bound(s, lam)
    return DegenerateBound(char_p, r, r + 1, refined)
