"""Command-line front end: ``hopftwist verify|exponent|indicators|tables|export``.

Exit codes: 0 ok, 1 check or agreement failure, 2 parse error,
3 bound exceeded, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .catalog import Package
from .cyclo import format_cyc
from .errors import (
    HopfError,
    MethodDisagreement,
    MNotDivisibleByOrder,
    OrderBoundExceeded,
    ParseError,
    UnknownAutomorphism,
    UnknownModule,
    UnknownName,
)
from .fileformat import dumps_algebra, load_algebra, load_representation
from .invariants import indicator_report, twisted_exponent, twisted_exponent_via_q
from .reps import character, ensure_representation
from .structures import (
    HopfAutomorphism,
    ensure_verified,
    identity_automorphism,
    make_automorphism,
    verify_automorphism,
    verify_axioms,
)

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_BOUND, EXIT_USAGE = range(5)


class CheckFailed(HopfError):
    """A verification command found a failing check."""


class UsageError(HopfError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _lit(x) -> str:
    return format_cyc(x.minimal())


# -- loading ----------------------------------------------------------------------


class Session:
    """The algebra selected on the command line, with lazily checked automorphisms."""

    def __init__(self, args):
        self.args = args
        if args.builtin and args.file:
            raise UsageError("give either FILE or --builtin, not both")
        if args.builtin:
            pkg = catalog.builtin(args.builtin)
            self.algebra = pkg.algebra
            self.raw_auts = {k: a.map for k, a in pkg.automorphisms.items()}
            self._auts = dict(pkg.automorphisms)
            self.package = pkg
        elif args.file:
            loaded = load_algebra(args.file)
            self.algebra = loaded.algebra
            self.raw_auts = loaded.automorphism_maps
            self._auts = {}
            self.package = Package(self.algebra, {}, {})
        else:
            raise UsageError("no algebra given: pass FILE or --builtin NAME")

    def automorphism(self, name: str | None) -> HopfAutomorphism:
        if name is None or name == "id" and "id" not in self.raw_auts:
            return identity_automorphism(self.algebra)
        if name in self._auts:
            return self._auts[name]
        if name not in self.raw_auts:
            known = ", ".join(["id", *self.raw_auts])
            raise UnknownAutomorphism(f"unknown automorphism {name!r}; available: {known}")
        ensure_verified(self.algebra)
        aut = make_automorphism(self.algebra, self.raw_auts[name], name)
        self._auts[name] = aut
        return aut

    def module(self, name: str | None):
        if name is None:
            return None
        mods = catalog.standard_modules(self.package)
        if name in mods:
            return mods[name]
        if os.path.exists(name):
            return load_representation(name, self.algebra)
        raise UnknownModule(f"unknown module {name!r}; available: {', '.join(mods)}")


# -- commands ---------------------------------------------------------------------


def cmd_verify(args, out):
    s = Session(args)
    H = s.algebra
    reports = [verify_axioms(H)]
    for name, f in s.raw_auts.items():
        rep = verify_automorphism(H, f)
        reports.append(type(rep)(f"automorphism {name}", rep.checks))
    ok = all(r.ok for r in reports)
    if args.format == "json":
        out.write(json.dumps({"algebra": H.name, "ok": ok, "reports": [r.to_dict() for r in reports]}, indent=2) + "\n")
    else:
        for rep in reports:
            out.write(f"[{rep.subject if rep.subject != 'algebra' else H.name}]\n")
            for c in rep.checks:
                out.write(f"{c}\n")
        if ok:
            out.write("all checks passed\n")
        else:
            first = next(r for r in reports if not r.ok)
            out.write(f"first failing check: {first.subject}: {first.first_failure}\n")
    if not ok:
        raise CheckFailed("verification failed")
    return EXIT_OK


def _module_label(rep):
    return "regular" if rep is None else rep.name


def cmd_exponent(args, out):
    s = Session(args)
    H = ensure_verified(s.algebra)
    tau = s.automorphism(args.aut)
    rep = s.module(args.module)
    results = {}
    if args.method in ("def", "both"):
        results["definition"] = twisted_exponent(H, tau, rep, args.bound)
    if args.method in ("q", "both"):
        from .reps import regular_representation

        results["q_order"] = twisted_exponent_via_q(H, tau, rep or regular_representation(H), args.bound)
    values = {r.value for r in results.values()}
    agree = len(values) == 1
    first = next(iter(results.values()))
    if args.format == "json":
        payload = {
            "algebra": H.name,
            "automorphism": tau.name,
            "module": _module_label(rep),
            "r": tau.order,
            "exponent": first.value if agree else None,
            "d_tau": first.d_tau if agree else None,
            "methods": {k: {"exponent": v.value, "d_tau": v.d_tau, "bound": v.bound_used} for k, v in results.items()},
            "agree": agree,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"algebra {H.name}, automorphism {tau.name} (order {tau.order}), module {_module_label(rep)}\n")
        for k, v in results.items():
            out.write(f"  {k:<10} exp_tau = {v.value}  d_tau = {v.d_tau}\n")
        if len(results) > 1:
            out.write("methods agree\n" if agree else "METHODS DISAGREE\n")
        if agree:
            out.write(f"{first.value}\n")
    if not agree:
        raise MethodDisagreement("definition and q_tau order give different exponents")
    return EXIT_OK


def cmd_indicators(args, out):
    s = Session(args)
    H = ensure_verified(s.algebra)
    tau = s.automorphism(args.aut)
    rep = s.module(args.module)
    if rep is None:
        raise UsageError("indicators needs --module")
    ensure_representation(rep)
    report = indicator_report(H, tau, rep, args.m_max, args.method, args.bound)
    if args.format == "json":
        payload = {
            "algebra": H.name,
            "automorphism": report.automorphism,
            "module": report.module,
            "r": report.r,
            "exponent": report.exponent,
            "period": report.period,
            "observed_period": report.observed_period,
            "ring_conductor": report.ring_conductor,
            "all_rational_integers": report.all_rational_integers,
            "methods": list(report.entries[0].methods),
            "values": [
                {"m": e.m, "nu": _lit(e.value), "in_ring": e.in_ring, "integer": e.is_integer}
                for e in report.entries
            ],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    methods = " = ".join(report.entries[0].methods)
    out.write(f"algebra {H.name}, automorphism {report.automorphism} (order {report.r}), module {report.module}\n")
    out.write(f"{'m':>4}  nu_m  [{methods}]\n")
    for e in report.entries:
        out.write(f"{e.m:>4}  {_lit(e.value)}\n")
    obs = report.observed_period if report.observed_period is not None else "n/a"
    out.write(f"exp_tau = {report.exponent}, period d_tau = {report.period} (observed {obs})\n")
    ring = "z(%d)" % report.exponent
    member = "yes" if all(e.in_ring for e in report.entries) else "no"
    out.write(f"values in Z[{ring}]: {member}; smallest ring conductor {report.ring_conductor}; "
              f"all rational integers: {'yes' if report.all_rational_integers else 'no'}\n")
    return EXIT_OK


def _format_element(H, vec) -> str:
    parts = []
    for label, c in zip(H.basis_labels, vec):
        if not c:
            continue
        c = c.minimal()
        neg = c.is_rational() and c.to_fraction() < 0
        mag = -c if neg else c
        if label == "1":
            body = _lit(mag)
        elif mag == 1:
            body = label
        else:
            txt = _lit(mag)
            body = f"({txt})*{label}" if (" " in txt) else f"{txt}*{label}"
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def h8_tables(bound=None) -> dict:
    pkg = catalog.builtin("h8")
    H = pkg.algebra
    mods = [pkg.modules[f"V{i}"] for i in range(1, 6)]
    chars = {f"chi{i}": [_lit(v) for v in character(m).values] for i, m in enumerate(mods, start=1)}
    gens = ["1", "x", "y", "z"]
    auts = {
        name: {g: _format_element(H, a.map.column(H.index(g))) for g in gens}
        for name, a in pkg.automorphisms.items()
    }
    exps = {}
    for name, a in pkg.automorphisms.items():
        row = {m.name: twisted_exponent(H, a, m, bound).value for m in mods}
        row["H8"] = twisted_exponent(H, a, None, bound).value
        exps[name] = row
    return {
        "basis": list(H.basis_labels),
        "characters": chars,
        "automorphism_generators": gens,
        "automorphisms": auts,
        "automorphism_orders": {k: a.order for k, a in pkg.automorphisms.items()},
        "exponents": exps,
    }


def _grid(header, rows) -> str:
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    fmt = lambda r: "  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    lines = [fmt(header), "  ".join("-" * w for w in widths)]
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines) + "\n"


def cmd_tables(args, out):
    if args.builtin.lower() != "h8":
        raise UsageError("tables is only defined for --builtin h8")
    t = h8_tables(args.bound)
    if args.format == "json":
        out.write(json.dumps(t, indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK
    out.write("Characters of the irreducible H8-modules\n")
    out.write(_grid(["", *t["basis"]], [[k, *v] for k, v in t["characters"].items()]))
    out.write("\nAutomorphisms of H8 (images of generators)\n")
    g = t["automorphism_generators"]
    out.write(_grid(["", *g], [[k, *(v[x] for x in g)] for k, v in t["automorphisms"].items()]))
    out.write("\nTwisted exponents exp_tau(V)\n")
    cols = ["V1", "V2", "V3", "V4", "V5", "H8"]
    out.write(_grid(["", *cols], [[k, *(v[c] for c in cols)] for k, v in t["exponents"].items()]))
    return EXIT_OK


def cmd_export(args, out):
    pkg = catalog.builtin(args.builtin)
    if args.module:
        from .fileformat import dumps_representation

        mods = catalog.standard_modules(pkg)
        if args.module not in mods:
            raise UnknownModule(f"unknown module {args.module!r}; available: {', '.join(mods)}")
        out.write(dumps_representation(mods[args.module]))
    else:
        out.write(dumps_algebra(pkg.algebra, pkg.automorphisms))
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    # a fresh parent per parser: argparse shares action objects with its children
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default text)")
    common.add_argument("--bound", type=_positive, default=argparse.SUPPRESS,
                        help="search bound for exponents (default 2*r*dim^3)")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopftwist", description="Twisted exponents and indicators of Hopf algebras.",
                parents=[_common()])
    p.set_defaults(format="text", bound=None)
    sub = p.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True

    def source(sp):
        sp.add_argument("file", nargs="?", help="algebra file (JSON)")
        sp.add_argument("--builtin", help=f"built-in algebra: {', '.join(catalog.BUILTIN_NAMES)}")

    sp = sub.add_parser("verify", parents=[_common()], help="check Hopf axioms and automorphisms")
    source(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("exponent", parents=[_common()], help="twisted exponent exp_tau")
    source(sp)
    sp.add_argument("--aut", default=None, help="automorphism name (default identity)")
    sp.add_argument("--module", default=None, help="module NAME or FILE (default: the algebra)")
    sp.add_argument("--method", choices=("def", "q", "both"), default="def")
    sp.set_defaults(func=cmd_exponent)

    sp = sub.add_parser("indicators", parents=[_common()], help="twisted Frobenius-Schur indicators")
    source(sp)
    sp.add_argument("--aut", default=None, help="automorphism name (default identity)")
    sp.add_argument("--module", required=True, help="module NAME or FILE")
    sp.add_argument("--m-max", dest="m_max", type=_positive, default=None,
                    help="largest m (default 4*d_tau(V))")
    sp.add_argument("--method", choices=("charsum", "trace", "both"), default="both")
    sp.set_defaults(func=cmd_indicators)

    sp = sub.add_parser("tables", parents=[_common()], help="character, automorphism and exponent tables")
    sp.add_argument("--builtin", default="h8")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("export", parents=[_common()], help="write a built-in as an algebra file")
    sp.add_argument("--builtin", required=True)
    sp.add_argument("--module", default=None, help="export this module instead of the algebra")
    sp.set_defaults(func=cmd_export)
    return p


def _exit_code(exc) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, OrderBoundExceeded):
        return EXIT_BOUND
    if isinstance(exc, (UnknownName, UsageError, MNotDivisibleByOrder)):
        return EXIT_USAGE
    # CheckFailed, MethodDisagreement, Invalid*, NotInvolutory, NoNormalizedIntegral, ...
    return EXIT_CHECK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except HopfError as exc:
        code = _exit_code(exc)
        msg = str(exc)
        if isinstance(exc, OrderBoundExceeded):
            msg = f"bound exceeded; exponent may be infinite (bound {exc.bound})"
        if args.format == "json":
            out.write(json.dumps({"error": msg, "exit_code": code}) + "\n")
        print(f"hopftwist: error: {msg}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
