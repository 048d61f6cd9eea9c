"""The permdual command line"""
import argparse
import logging
import sys

from .bijection import (
    VertexLabeledTree,
    bijection_B,
    bijection_B_inverse,
    enumerate_Fdown,
    enumerate_Fup,
    iter_factorizations,
)
from .chord import check_clockwise_decreasing, check_noncrossing, chord_diagram, gy_dual
from .dual import METHODS, dual
from .errors import ResourceCapExceeded
from .fixtures import get_fixture_text
from .mindbody import body_trace, mb_sequence
from .perm import TranspositionSequence
from .render import chord_svg, edge_digraph_to_dot, to_dot
from .trails import LabeledMultigraph, TrailDoubleCover, all_realizations, edge_digraph, migt_cover, realize
from .utils import parse_range, read_text_input
from .verify import SUITES, run_suite
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _text(args):
    if getattr(args, "fixture", None):
        return get_fixture_text(args.fixture)
    return read_text_input(args.input)


def _sequence_or_graph(text):
    """Either text format: 'n=4; (3,4) ...' or 'n=4; m=5;' followed by edge lines"""
    if "m=" in text.split("\n", 1)[0].replace(" ", ""):
        return LabeledMultigraph.parse(text)
    return LabeledMultigraph.from_sequence(TranspositionSequence.parse(text))


def _write(path, content):
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(content + "\n")
    logger.info("Wrote %s", path)


def cmd_dual(args):
    s = _sequence_or_graph(_text(args)).to_sequence()
    if args.method == "all":
        for name in METHODS:
            print(f"{name}: {dual(s, name)}")
        d = dual(s)
    else:
        d = dual(s, args.method)
        print(d)
    if args.emit_dot:
        _write(args.emit_dot, to_dot(s) + "\n" + to_dot(d))
    return EXIT_OK


def cmd_verify(args):
    low, high = parse_range(args.n)
    command = " ".join(["verify"] + args.argv)
    report = run_suite(
        args.suite,
        (low, high),
        seed=args.seed,
        sample_size=args.sample_size,
        fixture=args.fixture,
        timing=args.timing,
        command=command,
    )
    print(report.to_json() if args.json else report.to_string())
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_enumerate(args):
    if args.count_only:
        print(sum(1 for _ in iter_factorizations(args.n, args.direction, args.method)))
        return EXIT_OK
    enumerate_ = enumerate_Fdown if args.direction == "down" else enumerate_Fup
    for s in enumerate_(args.n, args.method, cross_check=args.cross_check):
        print(s)
    return EXIT_OK


def cmd_bijection(args):
    text = _text(args)
    if args.inverse:
        print(bijection_B_inverse(VertexLabeledTree.parse(text)))
    else:
        print(bijection_B(TranspositionSequence.parse(text)))
    return EXIT_OK


def cmd_migt(args):
    cover = migt_cover(_sequence_or_graph(_text(args)))
    if args.vertex is not None:
        print(cover.trail(args.vertex))
    else:
        print(cover)
    if args.emit_dot:
        _write(args.emit_dot, edge_digraph_to_dot(edge_digraph(cover)))
    return EXIT_OK


def cmd_realize(args):
    cover = TrailDoubleCover.parse(_text(args))
    if args.all:
        for result in all_realizations(cover):
            print(result)
    print(realize(cover))
    if args.emit_dot:
        _write(args.emit_dot, edge_digraph_to_dot(edge_digraph(cover)))
    return EXIT_OK


def cmd_chord(args):
    s = TranspositionSequence.parse(_text(args))
    diagram = chord_diagram(s)
    status = EXIT_OK
    d = None
    if args.check:
        for check in (check_noncrossing(diagram), check_clockwise_decreasing(diagram)):
            print(check)
            if not check:
                status = EXIT_FAILURE
    if args.gy_dual or args.dual_overlay:
        d = gy_dual(s)
        if args.gy_dual:
            print(d.to_sequence())
    if args.emit_svg:
        _write(args.emit_svg, chord_svg(diagram, dual=d if args.dual_overlay else None))
    return status


def cmd_mb_trace(args):
    s = TranspositionSequence.parse(_text(args))
    if args.mind is not None:
        print(" ".join(map(str, body_trace(s, args.mind).points)))
    else:
        for k, assignment in enumerate(mb_sequence(s)):
            print(f"A_{k} = {assignment}")
    return EXIT_OK


def _input_arguments(parser):
    parser.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
    parser.add_argument("--fixture", help="read a worked example shipped with permdual instead")


def get_parser():
    parser = argparse.ArgumentParser(
        prog="permdual",
        description="Duals of transposition sequences, greedy trails, and the factorizations of the long cycle",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for traces")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("dual", help="the dual of a transposition sequence")
    _input_arguments(p)
    p.add_argument("--method", choices=sorted(METHODS) + ["all"], default="algebraic")
    p.add_argument("--emit-dot", metavar="FILE", help="write the graph and its dual in the DOT language")
    p.set_defaults(run=cmd_dual)

    p = commands.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--n", default="3..6", help="inclusive range of n, e.g. 3..6")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--sample-size", type=int, default=None)
    p.add_argument("--fixture", help="run the tdc suite on a cover shipped with permdual")
    p.add_argument("--timing", action="store_true", help="report the running time")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(run=cmd_verify)

    p = commands.add_parser("enumerate", help="the factorizations of the long cycle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--direction", choices=["down", "up"], default="down")
    p.add_argument("--method", choices=["dfs", "prufer"], default="dfs")
    p.add_argument("--cross-check", action="store_true", help="compare with the other method")
    output = p.add_mutually_exclusive_group()
    output.add_argument("--count-only", action="store_true")
    output.add_argument("--emit", action="store_true", help="print every member (the default)")
    p.set_defaults(run=cmd_enumerate)

    p = commands.add_parser("bijection", help="the bijection B between F↓n and the trees")
    _input_arguments(p)
    direction = p.add_mutually_exclusive_group()
    direction.add_argument("--forward", action="store_true", help="sequence to tree (the default)")
    direction.add_argument("--inverse", action="store_true", help="tree to sequence")
    p.set_defaults(run=cmd_bijection)

    p = commands.add_parser("migt", help="the Minimal Increasing Greedy Trails of a graph")
    _input_arguments(p)
    p.add_argument("--vertex", type=int, help="only the trail starting at this vertex")
    p.add_argument("--emit-dot", metavar="FILE", help="write the Edge Digraph in the DOT language")
    p.set_defaults(run=cmd_migt)

    p = commands.add_parser("realize", help="realize a Trail Double Cover, or show why it cannot be")
    _input_arguments(p)
    p.add_argument("--all", action="store_true", help="list every realizing edge order")
    p.add_argument("--emit-dot", metavar="FILE", help="write the Edge Digraph in the DOT language")
    p.set_defaults(run=cmd_realize)

    p = commands.add_parser("chord", help="the circle chord diagram of a tree")
    _input_arguments(p)
    p.add_argument("--check", action="store_true", help="check the non-crossing and clockwise-decreasing properties")
    p.add_argument("--gy-dual", action="store_true", help="print the Goulden-Yong dual")
    p.add_argument("--emit-svg", metavar="FILE")
    p.add_argument("--dual-overlay", action="store_true", help="draw the Goulden-Yong dual on the SVG")
    p.set_defaults(run=cmd_chord)

    p = commands.add_parser("mb-trace", help="the Corresponding Mind-Body Sequence")
    _input_arguments(p)
    p.add_argument("--mind", type=int, help="only the bodies visited by this mind")
    p.set_defaults(run=cmd_mb_trace)

    return parser


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = get_parser().parse_args(argv)
    args.argv = argv[argv.index(args.command) + 1 :]
    logging.getLogger("permdual").setLevel(
        logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING
    )
    try:
        return args.run(args)
    except ResourceCapExceeded as err:
        print(f"permdual: {err}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as err:
        print(f"permdual: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INPUT
