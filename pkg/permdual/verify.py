"""Verification suites: every duality, realizability, structural and chord
diagram property, checked exhaustively on small n and on random samples"""
import json
import logging
import time
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

import permdual.options as opt

from .bijection import (
    bijection_B,
    bijection_B_inverse,
    cayley_count,
    iter_Fdown,
    iter_Fup,
    random_Fdown,
    relabel_S,
    relabel_S_inverse,
    verify_structural,
)
from .chord import chord_diagram, check_clockwise_decreasing, check_noncrossing, gy_dual, region_walk
from .dual import algebraic_dual, dual_equivalence_report, graph_algorithm_steps, trail_dual
from .fixtures import get_fixture
from .mindbody import mb_sequence
from .perm import TranspositionSequence, conjugate_sequence, product, trajectory
from .trails import (
    LabeledMultigraph,
    check_labeling,
    edge_digraph,
    migt,
    migt_cover,
    random_graph,
    realize,
    tdc_permutation,
    tdc_validate,
)

logging.basicConfig()
logger = logging.getLogger(__name__)

SUITES = ("duals", "tdc", "structural", "chord", "bijection", "count")
COLUMNS = ["suite", "check", "n", "scope", "checked", "status", "counterexample", "detail"]


@dataclass
class RunReport:
    """The outcome of a verification run, one row per check"""

    command: str
    checks: pd.DataFrame = field(default_factory=lambda: pd.DataFrame(columns=COLUMNS))
    timing: float = None

    def __post_init__(self):
        self.checks = self.checks.sort_values(["suite", "check", "n", "scope"], kind="mergesort").reset_index(
            drop=True
        )

    @property
    def passed(self):
        return bool((self.checks["status"] == "pass").all())

    @property
    def failures(self):
        return self.checks[self.checks["status"] != "pass"]

    def to_json(self):
        report = {
            "command": self.command,
            "result": "pass" if self.passed else "fail",
            "checks": json.loads(self.checks.to_json(orient="records")),
        }
        if self.timing is not None:
            report["seconds"] = round(self.timing, 3)
        return json.dumps(report, indent=2, ensure_ascii=False)

    def to_string(self):
        lines = [f"command: {self.command}"]
        summary = self.checks.drop(columns=["counterexample", "detail"])
        lines.append(summary.to_string(index=False) if len(summary) else "(no checks)")
        for row in self.failures.itertuples():
            lines.append(f"counterexample for {row.suite}/{row.check} ({row.scope}):")
            if row.counterexample:
                lines.append(row.counterexample)
            if row.detail:
                lines.append(row.detail)
        if self.timing is not None:
            lines.append(f"seconds: {self.timing:.3f}")
        lines.append("result: " + ("pass" if self.passed else "fail"))
        return "\n".join(lines)


class _Check:
    """Counts the cases of one check, and keeps the first counterexample. The
    counterexample is the failing input in its text format, anything else
    goes to the detail"""

    def __init__(self, suite, check, n, scope):
        self.row = dict(suite=suite, check=check, n=n, scope=scope, checked=0, status="pass", counterexample="", detail="")

    def __call__(self, ok, counterexample="", detail=""):
        self.row["checked"] += 1
        if not ok and self.row["status"] == "pass":
            self.row["status"] = "fail"
            self.row["counterexample"] = str(counterexample)
            self.row["detail"] = str(detail() if callable(detail) else detail)


def _rng(seed):
    return np.random.default_rng(opt.seed if seed is None else seed)


def random_sequence(rng, n=None, length=None):
    """A random transposition sequence, n in 2..max_random_n and length in 0..max_random_length"""
    if n is None:
        n = int(rng.integers(2, opt.max_random_n + 1))
    if length is None:
        length = int(rng.integers(0, opt.max_random_length + 1))
    return random_graph(rng, n, length).to_sequence()


def _members(n, rng, sample_size):
    """All of F↓n when n is small enough, a uniform random sample otherwise"""
    if n <= opt.exhaustive_limit:
        return f"F↓{n}", iter_Fdown(n)
    if sample_size >= cayley_count(n):
        logger.warning("A sample of %d is larger than F↓%d, enumerating it instead", sample_size, n)
        return f"F↓{n}", iter_Fdown(n)
    return f"{sample_size} random members of F↓{n}", (random_Fdown(n, rng) for _ in range(sample_size))


def _dual_checks(suite, n, scope, sequences):
    agreement = _Check(suite, "four-way agreement", n, scope)
    involution = _Check(suite, "involution", n, scope)
    inverse = _Check(suite, "inverse product", n, scope)
    prefix = _Check(suite, "prefix identity", n, scope)
    prepend = _Check(suite, "prepend law", n, scope)
    for s in sequences:
        report = dual_equivalence_report(s)
        agreement(report.agree, s, lambda: report.to_frame().to_string())
        d = report.duals["algebraic"]
        involution(algebraic_dual(d) == s, s)
        inverse(product(d) == product(s).inverse(), s)
        prefix(
            all(
                product(TranspositionSequence(s.n, s.entries[:k][::-1] + d.entries[:k][::-1])).is_identity()
                for k in range(len(s) + 1)
            ),
            s,
        )
        if len(s):
            head, rest = s[:1], s[1:]
            prepend(d == conjugate_sequence(head + algebraic_dual(rest), s.entry(1)), s)
    return [c.row for c in (agreement, involution, inverse, prefix, prepend)]


def suite_duals(n_range, seed=None, sample_size=None):
    sample_size = opt.sample_size if sample_size is None else sample_size
    rng = _rng(seed)
    rows = []
    low, high = n_range
    for n in range(low, high + 1):
        scope, members = _members(n, rng, sample_size)
        rows.extend(_dual_checks("duals", n, scope, members))
        logger.info("duals: checked %s", scope)

    sequences = [random_sequence(rng) for _ in range(sample_size)]
    rows.extend(_dual_checks("duals", 0, f"{sample_size} random sequences", sequences))

    example = get_fixture("four_vertex")
    expected = get_fixture("four_vertex_dual")
    check = _Check("duals", "worked example", example.n, "four_vertex")
    for name, d in dual_equivalence_report(example).duals.items():
        check(d == expected, example, f"{name}: {d}")
    steps = _Check("duals", "graph algorithm steps", example.n, "four_vertex_steps")
    steps(graph_algorithm_steps(LabeledMultigraph.from_sequence(example)) == get_fixture("four_vertex_steps"), example)
    bodies = _Check("duals", "mind-body sequence", example.n, "four_vertex_mind_body")
    bodies(mb_sequence(example) == get_fixture("four_vertex_mind_body"), example)
    return rows + [check.row, steps.row, bodies.row]


def _cover_checks(suite, n, scope, graphs):
    valid = _Check(suite, "MIGTs form a Trail Double Cover", n, scope)
    trajectories = _Check(suite, "MIGTs follow the trajectories", n, scope)
    permutation = _Check(suite, "cover permutation is the product", n, scope)
    acyclic = _Check(suite, "Edge Digraph is acyclic", n, scope)
    realized = _Check(suite, "MIGT cover is realizable", n, scope)
    for graph in graphs:
        s = graph.to_sequence()
        cover = migt_cover(graph)
        report = tdc_validate(cover)
        valid(report.ok, graph, report)
        if not report.ok:
            continue
        trajectories(
            all(migt(graph, x).vertices == trajectory(s, x).points for x in range(1, graph.n + 1)),
            graph,
        )
        permutation(tdc_permutation(cover) == product(s), graph)
        acyclic(edge_digraph(cover).is_acyclic(), graph)
        result = realize(cover)
        realized(bool(result) and check_labeling(cover, result.order), graph)
    return [c.row for c in (valid, trajectories, permutation, acyclic, realized)]


def _cover_fixture_checks(name):
    cover = get_fixture(name)
    valid = _Check("tdc", "valid Trail Double Cover", cover.graph.n, name)
    report = tdc_validate(cover)
    valid(report.ok, cover, report)
    realizable = _Check("tdc", "realizable", cover.graph.n, name)
    if report.ok:
        result = realize(cover)
        realizable(bool(result), cover, result)
    return [valid.row] + ([realizable.row] if report.ok else [])


def suite_tdc(n_range, seed=None, sample_size=None, fixture=None):
    if fixture is not None:
        return _cover_fixture_checks(fixture)

    sample_size = opt.sample_size if sample_size is None else sample_size
    rng = _rng(seed)
    rows = []
    graphs = (LabeledMultigraph.from_sequence(random_sequence(rng)) for _ in range(sample_size))
    rows.extend(_cover_checks("tdc", 0, f"{sample_size} random graphs", graphs))

    low, high = n_range
    for n in range(low, high + 1):
        scope, members = _members(n, rng, sample_size)
        rows.extend(_cover_checks("tdc", n, scope, map(LabeledMultigraph.from_sequence, members)))
        logger.info("tdc: checked %s", scope)

    example = get_fixture("four_vertex_migts")
    orders = _Check("tdc", "both topological sorts realize", example.graph.n, "four_vertex_migts")
    for order in [(1, 2, 3, 4, 5), (1, 2, 4, 3, 5)]:
        orders(check_labeling(example, order), example, f"order {order}")
    counterexample = _Check("tdc", "six-cycle certificate", 6, "two_triangles")
    result = realize(get_fixture("two_triangles"))
    counterexample(not result and sorted(result.cycle) == [1, 2, 3, 4, 5, 6], get_fixture("two_triangles"), result)
    return rows + [orders.row, counterexample.row]


def suite_structural(n_range, seed=None, sample_size=None):
    sample_size = opt.sample_size if sample_size is None else sample_size
    rng = _rng(seed)
    rows = []
    low, high = n_range
    for n in range(low, high + 1):
        scope, members = _members(n, rng, sample_size)
        check = _Check("structural", "partitions and indices", n, scope)
        for s in members:
            report = verify_structural(s)
            check(report.ok, s, report)
        rows.append(check.row)
        logger.info("structural: checked %s", scope)
    return rows


def suite_chord(n_range, seed=None, sample_size=None):
    sample_size = opt.sample_size if sample_size is None else sample_size
    rng = _rng(seed)
    rows = []
    low, high = n_range
    for n in range(low, high + 1):
        scope, members = _members(n, rng, sample_size)
        noncrossing = _Check("chord", "non-crossing", n, scope)
        decreasing = _Check("chord", "clockwise-decreasing", n, scope)
        regions = _Check("chord", "regions are bounded by the MIGTs", n, scope)
        dual = _Check("chord", "Goulden-Yong dual is the dual", n, scope)
        for s in members:
            diagram = chord_diagram(s)
            crossing = check_noncrossing(diagram)
            noncrossing(crossing.ok, s, crossing)
            ordering = check_clockwise_decreasing(diagram)
            decreasing(ordering.ok, s, ordering)
            if not crossing.ok or not ordering.ok:
                continue
            graph = LabeledMultigraph.from_sequence(s)
            regions(
                all(
                    region_walk(diagram, x).chords == frozenset(migt(graph, x).edge_labels)
                    for x in range(1, n + 1)
                ),
                s,
            )
            dual(gy_dual(s) == trail_dual(graph), s)
        rows.extend(c.row for c in (noncrossing, decreasing, regions, dual))
        logger.info("chord: checked %s", scope)

    example = get_fixture("nine_vertex")
    expected = _Check("chord", "worked example", example.n, "nine_vertex_gy_dual")
    expected(gy_dual(example) == get_fixture("nine_vertex_gy_dual"), example)
    return rows + [expected.row]


def suite_bijection(n_range, seed=None, sample_size=None):
    sample_size = opt.sample_size if sample_size is None else sample_size
    rng = _rng(seed)
    rows = []
    low, high = n_range
    for n in range(low, high + 1):
        scope, members = _members(n, rng, sample_size)
        forward = _Check("bijection", "B⁻¹ ∘ B is the identity", n, scope)
        images = set()
        for s in members:
            tree = bijection_B(s)
            images.add(tree)
            forward(bijection_B_inverse(tree) == s, s)
        rows.append(forward.row)
        if scope == f"F↓{n}":
            injective = _Check("bijection", "B is onto the trees", n, scope)
            injective(len(images) == cayley_count(n), detail=f"{len(images)} trees for n={n}")
            rows.append(injective.row)

            backward = _Check("bijection", "S⁻¹ ∘ S is the identity", n, f"F↑{n}")
            for t in iter_Fup(n):
                backward(relabel_S_inverse(relabel_S(t)) == t, t)
            rows.append(backward.row)
        logger.info("bijection: checked %s", scope)

    example = _Check("bijection", "worked example of S", 8, "eight_vertex")
    image = relabel_S(get_fixture("eight_vertex"), check_product=False)
    example(image == get_fixture("eight_vertex_relabeled"), get_fixture("eight_vertex"), image)
    return rows + [example.row]


def suite_count(n_range, seed=None, sample_size=None):
    rows = []
    low, high = n_range
    for n in range(low, high + 1):
        for method in ("dfs", "prufer"):
            check = _Check("count", f"|F↓n| = n^(n-2) ({method})", n, f"F↓{n}")
            count = sum(1 for _ in iter_Fdown(n, method))
            check(count == cayley_count(n), detail=f"{count} members for n={n}")
            rows.append(check.row)
        agree = _Check("count", "dfs and prufer agree", n, f"F↓{n}")
        agree(set(iter_Fdown(n, "dfs")) == set(iter_Fdown(n, "prufer")), detail=f"n={n}")
        rows.append(agree.row)
        logger.info("count: checked n=%d", n)
    return rows


RUNNERS = {
    "duals": suite_duals,
    "tdc": suite_tdc,
    "structural": suite_structural,
    "chord": suite_chord,
    "bijection": suite_bijection,
    "count": suite_count,
}


def run_suite(suite, n_range=None, seed=None, sample_size=None, fixture=None, timing=False, command=None):
    """Run one suite, or all of them with suite='all', and collect a RunReport"""
    if suite != "all" and suite not in RUNNERS:
        raise ValueError(f"suite should be 'all' or one of {SUITES}, not {suite!r}")
    if fixture is not None and suite != "tdc":
        raise ValueError("Only the tdc suite runs on a fixture")
    if n_range is None:
        n_range = opt.exhaustive_n
    if command is None:
        command = f"verify --suite {suite} --n {n_range[0]}..{n_range[1]}"

    start = time.perf_counter()
    rows = []
    for name in SUITES if suite == "all" else (suite,):
        if name == "tdc":
            rows.extend(suite_tdc(n_range, seed, sample_size, fixture=fixture))
        else:
            rows.extend(RUNNERS[name](n_range, seed, sample_size))
    elapsed = time.perf_counter() - start

    return RunReport(command, pd.DataFrame(rows, columns=COLUMNS), elapsed if timing else None)