"""
Command-line front end.

Exit codes: 0 success, 1 input error, 2 the open book construction does not
apply (empty binding).
"""
import argparse
import sys
from fractions import Fraction

from . import linalg
from .errors import EmptyBindingError, PlumbookError
from .graph import (
    degrees,
    first_homology,
    format_graph,
    intersection_matrix,
    is_non_positive,
    parse_graph,
)
from .milnor import milnor_report, planar_milnor_criterion
from .openbook import render_openbook, synthesize
from .seifert import SeifertInvariants, horizontal_criterion, star_graph

EXIT_INPUT, EXIT_CONSTRUCTION = 1, 2


def _tf(flag):
    return "t" if flag else "f"


def _bool(flag):
    return str(bool(flag)).lower()


def _vec(xs):
    return ",".join(str(x) for x in xs)


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise PlumbookError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def homology_text(factors, rank):
    parts = [f"Z/{d}" for d in factors] + ["Z"] * rank
    return " + ".join(parts) if parts else "trivial"


def render_homology(graph, fmt):
    factors, rank = first_homology(graph)
    if fmt == "machine":
        return f"homology factors={_vec(factors)} rank={rank}\n"
    return f"H1: {homology_text(factors, rank)}\n"


def render_milnor(graph, report, fmt):
    m = "none" if report.m is None else _vec(report.m)
    if fmt == "machine":
        reasons = ";".join(r.replace(" ", "_") for r in report.reasons)
        return (
            f"milnor negative_definite={_tf(report.negative_definite)} n={_vec(report.n)} "
            f"condition1={''.join(_tf(c) for c in report.condition1)} m={m} "
            f"m_nonneg_integral={_tf(report.m_nonneg_integral)} fast_path={_tf(report.fast_path)} "
            f"uniqueness_applicable={_tf(report.uniqueness_applicable)} "
            f"verdict={report.verdict} reasons={reasons or '-'}\n"
        )
    lines = [
        f"negative definite: {_bool(report.negative_definite)}",
        f"n: ({_vec(report.n)})",
        "condition n_i >= d_i + 2g_i: "
        + " ".join(f"{v}={_bool(c)}" for v, c in zip(graph.ids, report.condition1)),
        f"m: ({m})" if report.m is not None else "m: none (intersection matrix singular)",
        f"m non-negative integral: {_bool(report.m_nonneg_integral)}",
        f"fast path e_i + 2d_i + 2g_i <= 0: {_bool(report.fast_path)}",
        f"uniqueness applicable: {_bool(report.uniqueness_applicable)}",
        f"verdict: {report.verdict_line}",
    ]
    return "\n".join(lines) + "\n"


def render_analysis(graph, fmt):
    ob = synthesize(graph)
    report = milnor_report(graph)
    nonpos, slack = is_non_positive(graph)
    negdef = report.negative_definite
    tree = planar_milnor_criterion(graph)
    if fmt == "machine":
        out = []
        for v, d, s in zip(graph.vertices, degrees(graph), slack):
            out.append(f"vertex id={v.id} e={v.euler} g={v.genus} d={d} slack={s}")
        out.append(
            f"predicates non_positive={_tf(nonpos)} negative_definite={_tf(negdef)} "
            f"planar_milnor={_tf(tree)}"
        )
        return "".join(
            ["\n".join(out) + "\n", render_openbook(ob, "machine"),
             render_milnor(graph, report, "machine"), render_homology(graph, "machine")]
        )
    lines = ["graph:"]
    for v, d, s in zip(graph.vertices, degrees(graph), slack):
        lines.append(f"  {v.id}: e={v.euler} g={v.genus} d={d} e+d={s}")
    for e in graph.edges:
        lines.append(f"  edge {e.u} {e.v}" + (f" x{e.multiplicity}" if e.multiplicity > 1 else ""))
    lines += [
        "intersection matrix:",
        *("  " + " ".join(f"{x:>3}" for x in row) for row in intersection_matrix(graph)),
        f"leading minors: {_vec(linalg.leading_principal_minors(intersection_matrix(graph)))}",
        f"non-positive: {_bool(nonpos)}",
        f"negative definite: {_bool(negdef)}",
        f"planar milnor criterion: {_bool(tree)}",
        "",
        "open book:",
    ]
    text = "\n".join(lines) + "\n" + render_openbook(ob, "text")
    text += "\nmilnor:\n" + render_milnor(graph, report, "text")
    text += "\n" + render_homology(graph, "text")
    return text


def cmd_analyze(args):
    return render_analysis(_load(args.path), args.format)


def cmd_openbook(args):
    return render_openbook(synthesize(_load(args.path)), args.format)


def cmd_milnor(args):
    graph = _load(args.path)
    n = None
    if args.n is not None:
        try:
            n = [int(x) for x in args.n.split(",")]
        except ValueError:
            raise PlumbookError(f"--n expects comma-separated integers, got {args.n!r}") from None
    return render_milnor(graph, milnor_report(graph, n), args.format)


def cmd_homology(args):
    return render_homology(_load(args.path), args.format)


def cmd_seifert(args):
    try:
        ratios = [Fraction(r) for r in args.r]
    except (ValueError, ZeroDivisionError):
        raise PlumbookError(f"--r expects p/q, got {args.r!r}") from None
    s = SeifertInvariants(args.g, args.n, tuple(ratios))
    text = format_graph(star_graph(s))
    if args.format == "text":
        horizontal, planar = horizontal_criterion(s)
        text += f"# horizontal open book (n + k <= 0): {_bool(horizontal)}\n"
        text += f"# can be planar (g = 0): {_bool(planar)}\n"
    return text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors, not construction failures
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(
        prog="plumbook",
        description="Open books on plumbings of circle bundles over surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.set_defaults(func=func)
        return p

    add("analyze", cmd_analyze, "full report for a graph file").add_argument("path")
    add("openbook", cmd_openbook, "page and monodromy of the open book").add_argument("path")
    p = add("milnor", cmd_milnor, "compare with Milnor open books")
    p.add_argument("path")
    p.add_argument("--n", help="binding vector override, comma-separated")
    add("homology", cmd_homology, "first homology of the plumbed manifold").add_argument("path")
    p = add("seifert", cmd_seifert, "emit the star-shaped graph for Seifert invariants")
    p.add_argument("--g", type=int, required=True, help="base genus")
    p.add_argument("--n", type=int, required=True, help="central Euler number")
    p.add_argument("--r", action="append", default=[], help="ratio p/q with 0 < p/q < 1")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except EmptyBindingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except PlumbookError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
