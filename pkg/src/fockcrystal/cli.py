"""Command line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or parse
errors.  Degrees are capped at 8 unless FOCKCRYSTAL_MAX_DEGREE says otherwise.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import Sequence, TextIO

from . import bounds, crystal, fock, grothendieck
from .errors import DomainError
from .partitions import Multipartition, Partition, enumerate_multipartitions, parse_multipartition
from .residues import EParam, Multicharge
from .signatures import (cogood_node, conormal_nodes, eps, good_node, i_signature, normal_nodes,
                         phi, phi_profile, reduce, residues_in_play)

DEFAULT_MAX_DEGREE = 8


class UsageError(Exception):
    pass


def max_degree() -> int:
    raw = os.environ.get("FOCKCRYSTAL_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"FOCKCRYSTAL_MAX_DEGREE must be an integer, got {raw!r}") from None


def _degree(n: int) -> int:
    if n < 0:
        raise UsageError(f"degree must be non-negative, got {n}")
    cap = max_degree()
    if n > cap:
        raise UsageError(f"degree {n} exceeds the cap {cap} (raise FOCKCRYSTAL_MAX_DEGREE)")
    return n


def _ints(flag: str, text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} must be comma-separated integers, got {text!r}") from None


def _charge(args) -> Multicharge:
    if args.charge is None:
        raise UsageError("--charge is required")
    if args.e is None:
        raise UsageError("--e is required")
    return Multicharge(_ints("--charge", args.charge), EParam.parse(args.e))


def _mp(args, s: Multicharge | None = None) -> Multipartition:
    if args.mp is None:
        raise UsageError("--mp is required")
    lam = parse_multipartition(args.mp)
    if s is not None and lam.level != s.level:
        raise UsageError(f"--mp has level {lam.level} but --charge has level {s.level}")
    return lam


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _nodes(nodes) -> str:
    return " ".join(map(str, nodes)) if nodes else "-"


# -- subcommands; each returns (exit code, text)

def cmd_enumerate(args):
    n = _degree(args.degree)
    mps = enumerate_multipartitions(args.r, n)
    if args.json:
        return 0, _dump([str(m) for m in mps])
    return 0, "".join(f"{m}\n" for m in mps)


def cmd_crystal(args):
    s = _charge(args)
    n = _degree(args.degree)
    g = (crystal.kleshchev_component if args.kleshchev else crystal.full_fock_crystal)(s, n)
    fmt = "json" if args.json else args.format
    if fmt == "dot":
        return 0, crystal.export_dot(g)
    if fmt == "json":
        return 0, crystal.export_json(g)
    if fmt == "counts":
        return 0, ",".join(map(str, g.counts())) + "\n"
    lines = [f"e = {g.e}, charge = ({s}), degree <= {n}"
             + (", Kleshchev component" if g.kleshchev else "")]
    for d, layer in enumerate(g.layers):
        lines.append(f"degree {d} ({len(layer)}): " + " ".join(map(str, layer)))
    for src, i, dst in g.edges:
        lines.append(f"{src} -{i}-> {dst}")
    return 0, "\n".join(lines) + "\n"


def cmd_kleshchev(args):
    s = _charge(args)
    if args.mp is not None:
        lam = _mp(args, s)
        _degree(lam.degree)
        member = crystal.is_kleshchev(lam, s)
        steps = crystal.peel(lam, s)
        if args.json:
            return 0, _dump({"mp": str(lam), "kleshchev": member,
                             "peeling": [[i, str(mu)] for i, mu in steps]})
        path = " ".join(f"-{i}-> {mu}" for i, mu in steps)
        return 0, f"{lam}: {'Kleshchev' if member else 'not Kleshchev'}\npeeling: {lam} {path}\n"
    if args.degree is None:
        raise UsageError("kleshchev needs --mp or --degree")
    n = _degree(args.degree)
    layer = crystal.kleshchev_component(s, n).layers[n]
    if args.json:
        return 0, _dump([str(m) for m in layer])
    return 0, "".join(f"{m}\n" for m in layer)


def cmd_signature(args):
    s = _charge(args)
    lam = _mp(args, s)
    residues = [args.i] if args.i is not None else residues_in_play(lam, s)
    rows = []
    for i in residues:
        if s.e.is_finite and not 0 <= i < s.e.order:
            raise UsageError(f"--i must lie in 0..{s.e.order - 1}")
        sig = i_signature(lam, s, i)
        rows.append({
            "i": i,
            "signature": str(sig),
            "reduced": str(reduce(sig)),
            "normal": [str(x) for x in normal_nodes(lam, s, i)],
            "conormal": [str(x) for x in conormal_nodes(lam, s, i)],
            "good": None if good_node(lam, s, i) is None else str(good_node(lam, s, i)),
            "cogood": None if cogood_node(lam, s, i) is None else str(cogood_node(lam, s, i)),
            "phi": phi(lam, s, i),
            "eps": eps(lam, s, i),
        })
    if args.json:
        return 0, _dump({"mp": str(lam), "e": s.e.to_json(), "charge": list(s.entries),
                         "residues": rows})
    lines = [f"{lam}  (e = {s.e}, charge = ({s}))"]
    for row in rows:
        lines += [
            f"i = {row['i']}",
            f"  signature: {row['signature'] or '-'}",
            f"  reduced:   {row['reduced'] or '-'}",
            f"  normal:    {_nodes(row['normal'])}",
            f"  co-normal: {_nodes(row['conormal'])}",
            f"  good:      {row['good'] or '-'}",
            f"  co-good:   {row['cogood'] or '-'}",
            f"  phi = {row['phi']}, eps = {row['eps']}",
        ]
    return 0, "\n".join(lines) + "\n"


def cmd_fock_verify(args):
    s = _charge(args)
    n = _degree(args.degree)
    report = fock.check_relations(s, n)
    code = 0 if report.passed else 1
    if args.json:
        return code, _dump(report.to_json_obj())
    lines = [f"e = {report.e}, charge = ({s}), basis vectors of degree <= {n}"]
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{status}  {c.name}  ({c.cases} cases)")
        if c.counterexample:
            lines.append(f"      counterexample: {c.counterexample}")
    return code, "\n".join(lines) + "\n"


def _split(text: str) -> tuple[int, ...]:
    return _ints("--split", text)


def cmd_branch(args):
    if args.verify_diagram:
        if args.r is None or args.degree is None:
            raise UsageError("--verify-diagram needs --r and --degree")
        n = _degree(args.degree)
        failures = grothendieck.verify_diagram(args.r, n, restriction=args.restrict)
        code = 1 if failures else 0
        which = "restriction" if args.restrict else "induction"
        if args.json:
            return code, _dump({"r": args.r, "degree": n, "functor": which,
                                "passed": not failures,
                                "failures": [[str(lam), list(sp)] for lam, sp in failures]})
        lines = [f"{which} square over r = {args.r}, degree <= {n}: "
                 + ("commutes" if not failures else f"{len(failures)} failures")]
        lines += [f"  {lam} split {','.join(map(str, sp))}" for lam, sp in failures]
        return code, "\n".join(lines) + "\n"
    lam = _mp(args)
    v = grothendieck.GrothVector.specht(lam)
    image = grothendieck.restrict(v) if args.restrict else grothendieck.induce(v)
    if args.split:
        image = grothendieck.morita_split(image, _split(args.split))
        terms = [[[str(b) for b in key], c] for key, c in image.items()]
    else:
        terms = [[str(key), c] for key, c in image.items()]
    if args.json:
        return 0, _dump({"mp": str(lam), "functor": "restrict" if args.restrict else "induce",
                         "split": list(_split(args.split)) if args.split else None,
                         "terms": terms})
    lines = []
    for key, c in terms:
        label = " ⊗ ".join(key) if isinstance(key, list) else key
        lines.append(f"{c} {label}")
    return 0, "\n".join(lines) + ("\n" if lines else "0\n")


def cmd_bound(args):
    modes = [m for m in ("module", "degenerate", "cherednik", "q1_count") if getattr(args, m)]
    if len(modes) > 1:
        raise UsageError("choose at most one of --module, --degenerate, --cherednik, --q1-count")
    mode = modes[0] if modes else "theorem"

    if mode == "theorem":
        if args.q is None or args.Q is None:
            raise UsageError("bound needs --q and --Q")
        p = bounds.ParameterSet(bounds.parse_q(args.q), tuple(bounds.parse_units(args.Q)))
        report = bounds.theorem_bound(p)
        if args.json:
            return 0, _dump(report.to_json_obj())
        lines = [f"r = {report.r}, t = {report.t}"]
        for k, c in enumerate(report.classes, 1):
            lines.append(f"class {k}: {', '.join(map(str, c.members))}  r_j = {c.size}  "
                         f"charge = ({c.charge})  bound = {c.bound}")
        lines.append(f"theorem bound (r + t): {report.theorem_bound}")
        lines.append(f"refined bound: {report.refined_bound}")
        return 0, "\n".join(lines) + "\n"

    if mode in ("module", "cherednik"):
        s = _charge(args)
        lam = _mp(args, s)
        _degree(lam.degree)
        profile = phi_profile(lam, s)
        value = (bounds.module_bound if mode == "module" else bounds.fock_module_bound)(s, lam)
        out = {"mp": str(lam), "e": s.e.to_json(), "charge": list(s.entries),
               "phi": {str(i): v for i, v in profile.items()}, "bound": value}
        if mode == "cherednik":
            out["cherednik_bound"] = bounds.cherednik_bound(s.level)
        if args.json:
            return 0, _dump(out)
        lines = [f"{lam}  (e = {s.e}, charge = ({s}))"]
        lines += [f"  phi_{i} = {v}" for i, v in profile.items() if v]
        lines.append(f"sum of phi: {value}")
        if mode == "cherednik":
            lines.append(f"Cherednik bound r: {out['cherednik_bound']}")
        return 0, "\n".join(lines) + "\n"

    if mode == "q1_count":
        if args.r is None or args.alpha is None:
            raise UsageError("--q1-count needs --r and --alpha")
        alpha = parse_multipartition(args.alpha)
        if alpha.level != 1:
            raise UsageError("--alpha must be a single partition")
        count = bounds.q1_char0_count(args.r, Partition(alpha[1]))
        if args.json:
            return 0, _dump({"r": args.r, "alpha": str(alpha), "count": count})
        return 0, f"{count}\n"

    if args.char is None or args.r is None:
        raise UsageError("--degenerate needs --char and --r")
    charge = lam = None
    if args.charge is not None or args.mp is not None:
        if args.charge is None or args.mp is None:
            raise UsageError("the refined degenerate bound needs both --charge and --mp")
        charge = _ints("--charge", args.charge)
        lam = parse_multipartition(args.mp)
        _degree(lam.degree)
    result = bounds.degenerate_bound(args.char, args.r, charge, lam)
    if args.json:
        return 0, _dump({"char": result.char_p, "r": result.r, "bound": result.base,
                         "refined": result.refined})
    text = f"bound (r + 1): {result.base}\n"
    if result.refined is not None:
        text += f"refined (sum of phi): {result.refined}\n"
    return 0, text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockcrystal",
        description="Fock space crystals and constituent bounds for Ariki-Koike algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(usage=p.format_usage)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    def charge_flags(p):
        p.add_argument("--e", help="order of q: an integer >= 2, or inf")
        p.add_argument("--charge", help="weakly increasing charges, e.g. 0,1")

    p = add("enumerate", cmd_enumerate, "list the r-multipartitions of a degree")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add("crystal", cmd_crystal, "generate a degree-truncated Fock space crystal")
    charge_flags(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--kleshchev", action="store_true", help="only the component of the empty multipartition")
    p.add_argument("--format", choices=("plain", "dot", "json", "counts"), default="plain")

    p = add("kleshchev", cmd_kleshchev, "test a multipartition, or list a Kleshchev layer")
    charge_flags(p)
    p.add_argument("--mp")
    p.add_argument("--degree", type=int)

    p = add("signature", cmd_signature, "i-signatures, normal and good nodes, phi and eps")
    charge_flags(p)
    p.add_argument("--mp")
    p.add_argument("--i", type=int)

    p = add("fock-verify", cmd_fock_verify, "check the defining relations on a Fock space truncation")
    charge_flags(p)
    p.add_argument("--degree", type=int, required=True)

    p = add("branch", cmd_branch, "induce or restrict a Specht class, or verify the Morita square")
    p.add_argument("--mp")
    p.add_argument("--split", help="composition of r, e.g. 2,1")
    p.add_argument("--restrict", action="store_true")
    p.add_argument("--verify-diagram", action="store_true")
    p.add_argument("--r", type=int)
    p.add_argument("--degree", type=int)

    p = add("bound", cmd_bound, "lower bounds on constituents of induced modules")
    p.add_argument("--q", help="e<k> for a root of unity of order k, 1, or generic")
    p.add_argument("--Q", help='parameters, e.g. "q^0,q^2,u1*q^1"')
    p.add_argument("--module", action="store_true", help="sum of phi for a Kleshchev multipartition")
    p.add_argument("--cherednik", action="store_true", help="sum of phi for any multipartition")
    p.add_argument("--degenerate", action="store_true", help="degenerate cyclotomic Hecke bound")
    p.add_argument("--q1-count", action="store_true", help="exact count at q = 1, characteristic 0")
    charge_flags(p)
    p.add_argument("--mp")
    p.add_argument("--char", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--alpha", help="partition for --q1-count, e.g. (2,1)")
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        # argparse prints help and errors itself; send them to the given streams
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except (UsageError, DomainError) as exc:
        err.write(f"fockcrystal {args.command}: error: {exc}\n")
        err.write(args.usage())
        return 2
    out.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
