"""Command-line surface.

    homalg verify FILE [--identity NAME]... [--expr EQUATION]
                       [--strategy generic|basis] [--json]
    homalg twist FILE --map NAME -o OUT [--force]
    homalg untwist FILE -o OUT
    homalg polarize FILE -o OUT
    homalg opposite FILE -o OUT
    homalg check-endo FILE --map NAME [--json]
    homalg check-morphism FILE_A FILE_B --map NAME [--json]
    homalg check-unit FILE --element LABEL [--json]
    homalg catalog list
    homalg catalog show KEY [--emit] [-o OUT]

Exit status: 0 when every check holds (under assumptions included), 1 when
some check fails, 2 on input or usage errors.

Files without a twist designation are treated as ordinary algebras: the
identity map stands in for the twisting map wherever an identity needs one
(this is the classical, untwisted reading of every builtin identity).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import catalog as _catalog
from .algebra import (
    check_unit,
    is_endomorphism,
    is_morphism,
    opposite,
    polarize,
    untwist,
    yau_twist,
)
from .errors import HomAlgebraError, NotEndomorphism
from .fileio import CheckRecord, Report, load, save, saves
from .identities import builtin, check, check_builtin, is_multilinear
from .parser import parse_identity

# default verify suite: cheap multilinear checks on basis tuples first,
# then the nonlinear identities on generic elements
_DEFAULT_SUITE = (
    "commutative",
    "hom_associative",
    "left_hom_alternative_linearized",
    "right_hom_alternative_linearized",
    "associator_alternating_12",
    "associator_alternating_23",
    "associator_alternating_13",
    "left_hom_alternative",
    "right_hom_alternative",
    "hom_flexible",
    "hom_jordan",
    "hom_jordan_variant_a",
    "hom_jordan_variant_b",
)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except HomAlgebraError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="homalg",
        description="Exact verification and construction of twisted "
                    "(Hom-) algebra structures given by structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run identity checks against a file")
    p.add_argument("file")
    p.add_argument("--identity", action="append", default=[],
                   help="builtin identity name (repeatable)")
    p.add_argument("--expr", action="append", default=[],
                   help="identity equation in the surface syntax (repeatable)")
    p.add_argument("--strategy", choices=("generic", "basis"),
                   help="force a strategy; default picks basis for "
                        "multilinear identities and generic otherwise")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    for name, op in (("twist", None), ("untwist", untwist),
                     ("polarize", polarize), ("opposite", opposite)):
        p = sub.add_parser(name, help="write the %s of the algebra" % name)
        p.add_argument("file")
        p.add_argument("-o", "--output", required=True)
        if name == "twist":
            p.add_argument("--map", required=True)
            p.add_argument("--force", action="store_true",
                           help="twist even by a non-endomorphism; the "
                                "skipped certificate is recorded")
            p.set_defaults(handler=_cmd_twist)
        else:
            p.set_defaults(handler=_make_transform(name, op))

    p = sub.add_parser("check-endo", help="endomorphism certificate for a map")
    p.add_argument("file")
    p.add_argument("--map", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_check_endo)

    p = sub.add_parser("check-morphism",
                       help="morphism certificate between two files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--map", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_check_morphism)

    p = sub.add_parser("check-unit", help="two-sided unit check for an element")
    p.add_argument("file")
    p.add_argument("--element", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_check_unit)

    p = sub.add_parser("catalog", help="browse the built-in algebra catalog")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    pl = csub.add_parser("list")
    pl.set_defaults(handler=_cmd_catalog_list)
    ps = csub.add_parser("show")
    ps.add_argument("key")
    ps.add_argument("--emit", action="store_true",
                    help="write the entry in the algebra file format")
    ps.add_argument("-o", "--output")
    ps.set_defaults(handler=_cmd_catalog_show)

    return parser


def _load_for_checks(path):
    """Load a file; substitute the identity map when no twist is declared."""
    loaded = load(path)
    algebra = loaded.algebra
    implicit = algebra.alpha is None
    if implicit:
        algebra = algebra.with_identity_alpha()
    return loaded, algebra, implicit


def _cmd_verify(args):
    loaded, algebra, implicit = _load_for_checks(args.file)
    report = Report("verify", args.file)
    if implicit:
        report.notes.append("no twist map declared; identities use the "
                            "identity map")

    tasks = []
    if args.identity or args.expr:
        for name in args.identity:
            tasks.append((name, builtin(name)))
        for text in args.expr:
            tasks.append((text, parse_identity(text)))
    else:
        commutative = check_builtin(algebra, "commutative",
                                    _pick_strategy(args, "commutative"))
        report.add(CheckRecord("commutative",
                               _pick_strategy(args, "commutative"),
                               commutative.verdict, commutative.witness,
                               commutative.assumptions))
        for name in _DEFAULT_SUITE[1:]:
            b = builtin(name)
            if b.requires_commutative and not commutative.holds:
                continue
            tasks.append((name, b))

    for label, target in tasks:
        started = time.perf_counter()
        if hasattr(target, "asts"):   # builtin
            strategy = _pick_strategy(args, target)
            result = check_builtin(algebra, target, strategy)
        else:                          # parsed IdentityAST
            strategy = args.strategy or (
                "basis" if is_multilinear(target) else "generic")
            result = check(algebra, target, strategy)
        elapsed = time.perf_counter() - started
        report.add(CheckRecord(label, strategy, result.verdict,
                               result.witness, result.assumptions, elapsed))

    _emit_report(report, args)
    return 0 if report.all_hold else 1


def _pick_strategy(args, target):
    if getattr(args, "strategy", None):
        return args.strategy
    if isinstance(target, str):
        target = builtin(target)
    return "basis" if all(is_multilinear(a) for a in target.asts) else "generic"


def _cmd_twist(args):
    loaded = load(args.file)
    algebra = loaded.algebra
    if args.map not in loaded.maps:
        raise HomAlgebraError("file %s declares no map %r" % (args.file, args.map))
    f = loaded.maps[args.map]
    report = Report("twist", args.file)
    certificate = is_endomorphism(algebra, f)
    if not certificate.holds and not args.force:
        raise NotEndomorphism(
            "map %r is not an endomorphism (defect at %s); use --force to "
            "twist anyway" % (args.map, certificate.witness.at), certificate)
    note = "endomorphism precondition overridden by --force" \
        if (not certificate.holds and args.force) else ""
    report.add(CheckRecord("endomorphism:%s" % args.map, "basis-pairs",
                           certificate.verdict, certificate.witness,
                           certificate.assumptions, note=note))
    twisted = yau_twist(algebra, f, force=True)
    save(twisted, args.output, maps={args.map: f}, twist=args.map)
    print(report.render_text(), end="")
    print("wrote %s" % args.output)
    return 0


def _make_transform(name, op):
    def handler(args):
        loaded = load(args.file)
        result = op(loaded.algebra)
        maps = dict(loaded.maps)
        twist = None
        if result.alpha is not None:
            for mname, m in maps.items():
                if m == result.alpha:
                    twist = mname
                    break
        save(result, args.output, maps=maps, twist=twist)
        print("wrote %s" % args.output)
        return 0
    return handler


def _cmd_check_endo(args):
    loaded = load(args.file)
    if args.map not in loaded.maps:
        raise HomAlgebraError("file %s declares no map %r" % (args.file, args.map))
    result = is_endomorphism(loaded.algebra, loaded.maps[args.map])
    report = Report("check-endo", args.file)
    report.add(CheckRecord("endomorphism:%s" % args.map, "basis-pairs",
                           result.verdict, result.witness, result.assumptions))
    _emit_report(report, args)
    return 0 if report.all_hold else 1


def _cmd_check_morphism(args):
    loaded_a = load(args.file_a)
    loaded_b = load(args.file_b)
    f = loaded_a.maps.get(args.map) or loaded_b.maps.get(args.map)
    if f is None:
        raise HomAlgebraError("neither file declares a map %r" % args.map)
    result = is_morphism(loaded_a.algebra, loaded_b.algebra, f)
    report = Report("check-morphism", "%s -> %s" % (args.file_a, args.file_b))
    report.add(CheckRecord("morphism:%s" % args.map, "basis-pairs",
                           result.verdict, result.witness, result.assumptions))
    _emit_report(report, args)
    return 0 if report.all_hold else 1


def _cmd_check_unit(args):
    loaded = load(args.file)
    algebra = loaded.algebra
    u = algebra.basis_vector(algebra.label_index(args.element))
    result = check_unit(algebra, u)
    report = Report("check-unit", args.file)
    report.add(CheckRecord("unit:%s" % args.element, "basis-pairs",
                           result.verdict, result.witness, result.assumptions))
    _emit_report(report, args)
    return 0 if report.all_hold else 1


def _cmd_catalog_list(args):
    for key in _catalog.list_keys():
        print(key)
    return 0


def _cmd_catalog_show(args):
    entry = _catalog.get(args.key)
    if args.emit:
        text = saves(entry.algebra, maps=entry.maps)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
            print("wrote %s" % args.output)
        else:
            print(text, end="")
        return 0
    algebra = entry.algebra
    print("key:        %s" % entry.key)
    print("dim:        %d" % algebra.dim)
    print("basis:      %s" % ", ".join(algebra.basis))
    if algebra.params:
        print("params:     %s" % ", ".join(
            p.name + (" (nonzero)" if p.nonzero else "") for p in algebra.params))
    if algebra.unit is not None:
        print("unit:       %s" % algebra.basis[algebra.unit])
    print("twist map:  %s" % ("declared" if algebra.alpha is not None else "none"))
    if entry.maps:
        print("maps:       %s" % ", ".join(sorted(entry.maps)))
    print("products:")
    for i, j, k, c in algebra.mu:
        lhs = "%s*%s" % (algebra.basis[i], algebra.basis[j])
        print("  %-8s += (%s) %s" % (lhs, c, algebra.basis[k]))
    print("provenance: %s" % entry.provenance)
    if entry.expected:
        print("expected:   %s" % ", ".join(
            "%s=%s" % pair for pair in entry.expected))
    return 0


def _emit_report(report, args):
    if getattr(args, "json", False):
        sys.stdout.write(report.render_json())
    else:
        sys.stdout.write(report.render_text())


if __name__ == "__main__":
    sys.exit(main())
