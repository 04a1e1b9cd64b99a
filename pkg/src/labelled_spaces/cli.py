"""Command-line interface.

Every subcommand takes an .lgr file first; bare names are also resolved
against the shipped fixtures, so `lspace tight loops4.lgr ...` works from
anywhere.  Exit codes: 0 success, 1 semantic failure, 2 parse or usage error.
"""

import argparse
import os
import sys

from . import fixtures
from .boundary import boundary_paths, isolated_points
from .errors import DomainError, InputError, LabelledSpaceError, ParseError
from .family import validate
from .filters import parse_filter_family, ultrafilters
from .graph import is_labelled_path
from .lgrfile import load_graph_file
from .semigroup import inverse, is_idempotent, leq, multiply, parse_element
from .spectra import compare_spectrum_with_boundary, refute_tightness, tight_spectrum
from .transition import UltrafilterTransitionGraph
from .util import format_vset, format_word, parse_word


def _resolve(path):
    if os.path.exists(path):
        return path
    candidate = os.path.join(os.path.dirname(fixtures.path("x")), os.path.basename(path))
    if os.path.exists(candidate):
        return candidate
    raise InputError("no such graph file: %s" % path)


def _load(path):
    return load_graph_file(_resolve(path))


def _word_arg(fam, text):
    word = parse_word(text)
    fam.graph.check_word(word)
    if not is_labelled_path(fam.graph, word):
        raise DomainError("%s is not a labelled path" % format_word(word))
    return word


def cmd_validate(args, out):
    g, fam = _load(args.graph)
    report = validate(g, fam.sets)
    out.write(report.flags_line() + "\n")
    for name in sorted(report.witnesses):
        parts = " ".join(
            format_vset(w) if isinstance(w, frozenset) else str(w)
            for w in report.witnesses[name]
        )
        out.write("witness %s: %s\n" % (name, parts))
    if args.require:
        wanted = {flag.strip() for flag in args.require.split(",") if flag.strip()}
        unknown = wanted - {"accommodating", "wlr", "complements"}
        if unknown:
            raise InputError("unknown flags: %s" % " ".join(sorted(unknown)))
        have = {
            "accommodating": report.accommodating,
            "wlr": report.weakly_left_resolving,
            "complements": report.complement_closed,
        }
        if not all(have[f] for f in wanted):
            return 1
    return 0


def cmd_balgebra(args, out):
    _, fam = _load(args.graph)
    word = _word_arg(fam, args.word)
    alg = fam.algebra(word)
    out.write("word: %s\n" % format_word(word))
    out.write("top: %s\n" % ("none" if alg.top is None else format_vset(alg.top)))
    out.write("elements: %s\n" % " ".join(format_vset(e) for e in alg.elements))
    out.write("atoms: %s\n" % " ".join(format_vset(a) for a in alg.atoms))
    return 0


def cmd_mul(args, out):
    _, fam = _load(args.graph)
    s = parse_element(fam, args.left)
    t = parse_element(fam, args.right)
    out.write("%s\n" % multiply(fam, s, t))
    return 0


def cmd_inv(args, out):
    _, fam = _load(args.graph)
    out.write("%s\n" % inverse(parse_element(fam, args.element)))
    return 0


def cmd_leq(args, out):
    _, fam = _load(args.graph)
    p = parse_element(fam, args.left)
    q = parse_element(fam, args.right)
    if not (is_idempotent(p) and is_idempotent(q)):
        raise DomainError("leq compares idempotents")
    out.write("%s\n" % str(leq(fam, p, q)).lower())
    return 0


def cmd_ultrafilters(args, out):
    _, fam = _load(args.graph)
    word = _word_arg(fam, args.word)
    for flt in ultrafilters(fam.algebra(word)):
        out.write("%s ; gen=%s\n" % (format_word(word), format_vset(flt.gen)))
    return 0


def cmd_ufgraph(args, out):
    _, fam = _load(args.graph)
    out.write(UltrafilterTransitionGraph(fam).format_listing() + "\n")
    return 0


def cmd_tight(args, out):
    _, fam = _load(args.graph)
    spec = tight_spectrum(fam, args.max_word, args.max_cycle)
    out.write("finite type (%d):\n" % len(spec.finite))
    for d in spec.finite:
        out.write("  %s\n" % d.format())
    out.write("infinite type (%d):\n" % len(spec.infinite))
    for d in spec.infinite:
        out.write("  %s\n" % d.format())
    out.write(
        "lassos exhaust infinite type: %s\n"
        % ("no (branching cycles)" if spec.has_branching_cycles else "yes")
    )
    return 0


def cmd_boundary(args, out):
    g, _ = _load(args.graph)
    rep = boundary_paths(g, args.max_len, args.max_cycle)
    out.write("finite paths (%d):\n" % len(rep.finite))
    for p in rep.finite:
        out.write("  %s\n" % p)
    out.write("infinite paths (%d):\n" % len(rep.infinite))
    for p in rep.infinite:
        out.write("  %s\n" % p)
    out.write(
        "lassos exhaust infinite paths: %s\n"
        % ("no (branching cycles)" if rep.has_branching_cycles else "yes")
    )
    return 0


def cmd_compare(args, out):
    g, _ = _load(args.graph)
    rep = compare_spectrum_with_boundary(g, args.max_len, args.max_cycle)
    out.write(rep.counts_line() + "\n")
    out.write("bijection: %s\n" % ("yes" if rep.bijective else "no"))
    for line in rep.unmatched_boundary:
        out.write("only in boundary: %s\n" % line)
    for line in rep.unmatched_spectrum:
        out.write("only in spectrum: %s\n" % line)
    return 0 if rep.bijective else 1


def cmd_refute(args, out):
    _, fam = _load(args.graph)
    family = parse_filter_family(fam, args.filter)
    found = refute_tightness(fam, family, args.depth)
    if found is None:
        out.write("no counterexample at depth %d\n" % args.depth)
    else:
        x, cert = found
        out.write("not tight: %s\n" % x)
        out.write("cover parts: %s\n" % " ".join(format_vset(p) for p in cert.parts))
    return 0


def cmd_isolated(args, out):
    g, _ = _load(args.graph)
    points = isolated_points(g, args.max_prefix)
    out.write("isolated points (%d):\n" % len(points))
    for p in points:
        out.write("  %s\n" % p)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lspace",
        description="Inverse semigroups of labelled spaces: filters, tight spectra, boundary paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn):
        p = sub.add_parser(name)
        p.add_argument("graph", help=".lgr file (bare fixture names are resolved)")
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate)
    p.add_argument("--require", default="", help="comma list: accommodating,wlr,complements")
    p = add("balgebra", cmd_balgebra)
    p.add_argument("--word", required=True)
    p = add("mul", cmd_mul)
    p.add_argument("left")
    p.add_argument("right")
    p = add("inv", cmd_inv)
    p.add_argument("element")
    p = add("leq", cmd_leq)
    p.add_argument("left")
    p.add_argument("right")
    p = add("ultrafilters", cmd_ultrafilters)
    p.add_argument("--word", required=True)
    add("ufgraph", cmd_ufgraph)
    p = add("tight", cmd_tight)
    p.add_argument("--max-word", type=int, default=4)
    p.add_argument("--max-cycle", type=int, default=3)
    p = add("boundary", cmd_boundary)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--max-cycle", type=int, default=3)
    p = add("compare", cmd_compare)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--max-cycle", type=int, default=3)
    p = add("refute", cmd_refute)
    p.add_argument("--filter", required=True)
    p.add_argument("--depth", type=int, default=4)
    p = add("isolated", cmd_isolated)
    p.add_argument("--max-prefix", type=int, default=0)
    return parser


def run_command(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args, out)
    except (ParseError, InputError) as exc:
        err.write("error: %s\n" % exc)
        return 2
    except LabelledSpaceError as exc:
        err.write("error: %s\n" % exc)
        return 1


def main():
    raise SystemExit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
