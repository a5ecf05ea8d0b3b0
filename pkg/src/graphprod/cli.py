"""Command-line front end.

Exit codes: 0 yes/true/ok, 1 no/false, 2 undetermined, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import autos
from .abelian import FGAbelian, LabelError, expand_graph, primary_decomposition
from .classify import Verdict, classify
from .document import DocumentError, GeneratorNames, expanded_document, load_document
from .graph import (
    has_separating_star,
    has_sil,
    link_condition_holds,
    star_complement_components,
    star_containments,
)
from .symmetry import SymmetryError, automorphisms, census
from .words import Presentation, WordError

EXIT_YES, EXIT_NO, EXIT_UNDETERMINED, EXIT_INPUT = 0, 1, 2, 3

VERDICT_EXIT = {Verdict.YES: EXIT_YES, Verdict.NO: EXIT_NO, Verdict.UNDETERMINED: EXIT_UNDETERMINED}

CONSTRUCTORS = (
    "partial-conjugation",
    "factor",
    "dominated-transvection",
    "commutator-transvection",
    "graph",
    "inner",
)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _set(xs) -> str:
    return "{" + ", ".join(str(x) for x in sorted(xs)) + "}"


def _bool(b: bool) -> str:
    return "true" if b else "false"


# --- subcommands -------------------------------------------------------------

def cmd_classify(args, out) -> int:
    g, labels = load_document(args.file)
    report = classify(g, labels)
    out.write(_dump(report.to_dict()) if args.json else report.to_text())
    # semicompleteness drives the exit code; completeness is reported alongside
    return VERDICT_EXIT[report.semicomplete]


def cmd_check(args, out) -> int:
    g, _ = load_document(args.file)
    what = args.predicate
    if what == "sep-star":
        v = has_separating_star(g)
        result = {"predicate": "separating-star", "value": v is not None, "witness": v}
        if v is not None:
            result["components"] = [sorted(c) for c in star_complement_components(g, v)]
    elif what == "sil":
        t = has_sil(g)
        result = {"predicate": "sil", "value": t is not None, "witness": None if t is None else list(t)}
    elif what == "star-containment":
        pairs = star_containments(g)
        result = {
            "predicate": "star-containment",
            "value": bool(pairs),
            "witness": list(pairs[0]) if pairs else None,
            "pairs": [list(p) for p in pairs],
        }
    else:
        ok, pair = link_condition_holds(g)
        result = {"predicate": "link-condition", "value": ok, "witness": None if ok else list(pair)}

    if args.json:
        out.write(_dump(result))
    else:
        out.write(f"{result['predicate']}: {_bool(result['value'])}\n")
        w = result["witness"]
        if what == "sil" and w:
            out.write(f"witness: ({w[0]}, {w[1]} | {w[2]})\n")
        elif w is not None:
            out.write(f"witness: {w if isinstance(w, str) else tuple(w)}\n")
        for key in ("components", "pairs"):
            if key in result:
                out.write(f"{key}: {result[key]}\n")
    return EXIT_YES if result["value"] else EXIT_NO


def cmd_expand(args, out) -> int:
    g, labels = load_document(args.file)
    try:
        eg = expand_graph(g, labels)
    except LabelError as exc:
        raise DocumentError(str(exc)) from None
    out.write(_dump(expanded_document(eg)))
    return EXIT_YES


def _label_key(label):
    if isinstance(label, FGAbelian):
        return ("abelian", tuple(primary_decomposition(label)))
    return ("non_abelian", label.name, label.known_semicomplete)


def cmd_autgroup(args, out) -> int:
    g, labels = load_document(args.file)
    perms = automorphisms(g, {v: _label_key(labels[v]) for v in g.vertices})
    asym = len(perms) == 1
    if args.json:
        out.write(_dump({
            "order": len(perms),
            "asymmetric": asym,
            "automorphisms": [dict(p.items()) for p in perms],
        }))
    else:
        out.write(f"order: {len(perms)}\nasymmetric: {_bool(asym)}\n")
        for p in perms:
            moved = [f"{a}->{b}" for a, b in p.items() if a != b]
            out.write("  " + (" ".join(moved) if moved else "id") + "\n")
    return EXIT_YES if asym else EXIT_NO


def cmd_census(args, out) -> int:
    try:
        report = census(args.n)
    except SymmetryError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        out.write(_dump(report.to_dict()))
    else:
        out.write(
            f"n: {report.n}\n"
            f"total_classes: {report.total_classes}\n"
            f"asymmetric_classes: {report.asymmetric_classes}\n"
            f"asymmetric_with_separating_star: {report.asymmetric_with_separating_star}\n"
        )
        for g in report.representatives:
            out.write(f"  {[tuple(e) for e in g.edge_list()]}\n")
    return EXIT_YES


def _presentation(path):
    g, labels = load_document(path)
    try:
        eg = expand_graph(g, labels)
    except LabelError as exc:
        raise DocumentError(f"word commands need abelian labels: {exc}") from None
    return Presentation.from_expanded(eg), GeneratorNames(eg)


def _parse_word(p, names, text):
    return p.parse(text, names.resolve)


def cmd_nf(args, out) -> int:
    p, names = _presentation(args.file)
    w = p.normalize(_parse_word(p, names, args.word))
    out.write(p.format(w, names.name) + "\n")
    return EXIT_YES


def cmd_eq(args, out) -> int:
    p, names = _presentation(args.file)
    same = p.equals(_parse_word(p, names, args.word1), _parse_word(p, names, args.word2))
    out.write(_bool(same) + "\n")
    return EXIT_YES if same else EXIT_NO


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {text!r}") from None


def _build_map(p, names, ctor: str, params: list[str]):
    def need(k):
        if len(params) < k:
            raise InputError(f"{ctor} needs at least {k} parameters")

    def exactly(k):
        if len(params) != k:
            raise InputError(f"{ctor} takes exactly {k} parameters")

    if ctor == "partial-conjugation":
        need(3)
        v = names.resolve(params[0])
        comp = [names.resolve(x) for x in params[2:]]
        return autos.make_partial_conjugation(p, v, _int(params[1], "exponent"), comp)
    if ctor == "factor":
        exactly(2)
        return autos.make_factor_automorphism(p, names.resolve(params[0]), _int(params[1], "multiplier"))
    if ctor == "dominated-transvection":
        exactly(2)
        return autos.make_dominated_transvection(p, *(names.resolve(x) for x in params))
    if ctor == "commutator-transvection":
        exactly(3)
        return autos.make_commutator_transvection(p, *(names.resolve(x) for x in params))
    if ctor == "graph":
        sigma = {}
        for item in params:
            a, sep, b = item.partition("=")
            if not sep:
                raise InputError(f"graph permutation entries look like a=b, got {item!r}")
            sigma[names.resolve(a)] = names.resolve(b)
        return autos.make_graph_automorphism(p, sigma)
    if ctor == "inner":
        return autos.inner(p, _parse_word(p, names, " ".join(params)))
    raise InputError(f"unknown constructor {ctor!r}; choose from {', '.join(CONSTRUCTORS)}")


def cmd_aut(args, out) -> int:
    p, names = _presentation(args.file)
    ctor = args.constructor.replace("_", "-")
    try:
        f = _build_map(p, names, ctor, args.params)
    except autos.AutError as exc:
        raise InputError(str(exc)) from None
    out.write(f"kind: {f.kind}\nimages:\n")
    for v in p.generators:
        out.write(f"  {names.name(v)} -> {p.format(f.images[v], names.name)}\n")
    bad = autos.validate_homomorphism(p, f)
    if bad is not None:
        shown = tuple(names.name(v) for v in bad.vertices)
        out.write(f"homomorphism: violated {bad.relation} {' '.join(shown)}\n")
        return EXIT_NO
    out.write("homomorphism: ok\n")
    code = EXIT_YES
    if args.check_ia:
        verdict = autos.is_ia(p, f)
        if verdict.in_ia:
            out.write("ia: true\n")
        else:
            out.write(f"ia: false (witness {names.name(verdict.witness)})\n")
            code = EXIT_NO
    if args.find_conjugator is not None:
        r = args.find_conjugator
        if r < 0:
            raise InputError("--find-conjugator radius must be nonnegative")
        a = autos.find_conjugator(p, f, r)
        if a is None:
            out.write(f"conjugator: none up to radius {r}\n")
            code = EXIT_UNDETERMINED
        else:
            out.write(f"conjugator: found {p.format(a, names.name)}\n")
            code = EXIT_YES
    return code


# --- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphprod", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("classify", help="semicompleteness and completeness verdicts")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("check", help="evaluate one graph predicate")
    s.add_argument("predicate", choices=["sep-star", "sil", "star-containment", "link-condition"])
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("expand", help="prime-power cyclic expansion")
    s.add_argument("file")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("autgroup", help="label-preserving graph automorphisms")
    s.add_argument("file")
    s.set_defaults(func=cmd_autgroup)

    s = sub.add_parser("census", help="isomorphism classes of graphs on n vertices")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("nf", help="normal form of a word")
    s.add_argument("file")
    s.add_argument("word")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("eq", help="word problem")
    s.add_argument("file")
    s.add_argument("word1")
    s.add_argument("word2")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("aut", help="build and analyse a generator map")
    s.add_argument("file")
    s.add_argument("constructor")
    s.add_argument("params", nargs="*")
    s.add_argument("--check-ia", action="store_true")
    s.add_argument("--find-conjugator", type=int, metavar="R")
    s.set_defaults(func=cmd_aut)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (InputError, DocumentError, WordError, LabelError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
