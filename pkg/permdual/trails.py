"""Edge-labeled multigraphs, Minimal Increasing Greedy Trails (MIGTs),
Trail Double Covers, Edge Digraphs and the realizability test"""
import logging
import re
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field

import networkx as nx

from .errors import InvalidCover, LabelOutOfRange, ParseError
from .perm import Permutation, TranspositionSequence

logging.basicConfig()
logger = logging.getLogger(__name__)

_GRAPH_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*m\s*=\s*(\d+)\s*;\s*$")
_GRAPH_EDGE = re.compile(r"^\s*(\d+)\s*:\s*(\d+)\s+(\d+)\s*$")
_TRAIL_LINE = re.compile(r"^\s*(\d+)\s*:(.*)$")
_TRAIL_TOKEN = re.compile(r"\s*(?:-(\d+)-|(\d+))")


@dataclass(frozen=True)
class LabeledMultigraph:
    """A loop-less multigraph on [n]; edges[k - 1] joins the endpoints of the edge labeled k"""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise ValueError(f"n should be positive, not {n}")
        edges = []
        for x, y in self.edges:
            x, y = int(x), int(y)
            if x == y:
                raise ValueError(f"Loop at vertex {x}")
            for v in (x, y):
                if not 1 <= v <= n:
                    raise LabelOutOfRange(f"{v} is not a vertex of a graph on [{n}]")
            edges.append((min(x, y), max(x, y)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def m(self):
        return len(self.edges)

    def edge(self, label):
        if not 1 <= label <= self.m:
            raise LabelOutOfRange(f"No edge labeled {label} in a graph with {self.m} edges")
        return self.edges[label - 1]

    def incidence(self):
        """For each vertex, the sorted labels of its edges and the far endpoints"""
        incident = {v: ([], []) for v in range(1, self.n + 1)}
        for label, (x, y) in enumerate(self.edges, start=1):
            incident[x][0].append(label)
            incident[x][1].append(y)
            incident[y][0].append(label)
            incident[y][1].append(x)
        return incident

    @classmethod
    def from_sequence(cls, s):
        return cls(s.n, [(t.x, t.y) for t in s])

    def to_sequence(self):
        return TranspositionSequence(self.n, self.edges)

    def to_networkx(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        for label, (x, y) in enumerate(self.edges, start=1):
            graph.add_edge(x, y, key=label)
        return graph

    @classmethod
    def parse(cls, text):
        """Parse 'n=<k>; m=<j>;' followed by lines 'k: x y'"""
        lines = [line for line in text.strip().splitlines() if line.strip()]
        if not lines:
            raise ParseError("Empty graph text")
        header = _GRAPH_HEADER.match(lines[0])
        if not header:
            raise ParseError(f"A graph should start with 'n=<k>; m=<j>;', got {lines[0]!r}")
        n, m = int(header.group(1)), int(header.group(2))
        edges = {}
        for line in lines[1:]:
            match = _GRAPH_EDGE.match(line)
            if not match:
                raise ParseError(f"Expected an edge line 'k: x y', got {line!r}")
            label, x, y = (int(g) for g in match.groups())
            if label in edges:
                raise ParseError(f"Edge {label} is defined twice")
            edges[label] = (x, y)
        if sorted(edges) != list(range(1, m + 1)):
            raise ParseError(f"The edge labels should be exactly 1..{m}, got {sorted(edges)}")
        return cls(n, [edges[label] for label in range(1, m + 1)])

    def __str__(self):
        lines = [f"n={self.n}; m={self.m};"]
        lines.extend(f"{label}: {x} {y}" for label, (x, y) in enumerate(self.edges, start=1))
        return "\n".join(lines)


def relabel(graph, labeling):
    """The same multigraph with edge e now labeled labeling[e]"""
    if sorted(labeling) != list(range(1, graph.m + 1)) or sorted(labeling.values()) != list(
        range(1, graph.m + 1)
    ):
        raise ValueError(f"{labeling} is not a bijection of the edges onto [{graph.m}]")
    edges = [None] * graph.m
    for edge, label in labeling.items():
        edges[label - 1] = graph.edge(edge)
    return LabeledMultigraph(graph.n, edges)


@dataclass(frozen=True)
class Trail:
    """⟨v_1, e_1, v_2, ..., e_(k-1), v_k⟩ with no repeated edge"""

    vertices: tuple
    edge_labels: tuple = ()

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        edge_labels = tuple(int(e) for e in self.edge_labels)
        if len(vertices) != len(edge_labels) + 1:
            raise ValueError(f"A trail with {len(edge_labels)} edges has {len(edge_labels) + 1} vertices")
        if len(set(edge_labels)) != len(edge_labels):
            raise ValueError(f"The trail {vertices} repeats an edge: {edge_labels}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edge_labels", edge_labels)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def is_trivial(self):
        return not self.edge_labels

    def joins(self, graph):
        """Whether each e_i of this trail is an edge of graph joining v_i and v_(i+1)"""
        for i, label in enumerate(self.edge_labels):
            if not 1 <= label <= graph.m:
                return False
            a, b = self.vertices[i], self.vertices[i + 1]
            if graph.edge(label) != (min(a, b), max(a, b)):
                return False
        return all(1 <= v <= graph.n for v in self.vertices)

    @classmethod
    def parse(cls, text):
        """Parse 'v1 -e1- v2 -e2- v3'"""
        vertices, edges = [], []
        position = 0
        text = text.rstrip()
        while position < len(text):
            match = _TRAIL_TOKEN.match(text, position)
            if not match:
                raise ParseError(f"Cannot read a trail from {text!r}")
            edge, vertex = match.groups()
            if vertex is not None:
                if len(vertices) != len(edges):
                    raise ParseError(f"Two consecutive vertices in {text!r}")
                vertices.append(int(vertex))
            else:
                if len(vertices) != len(edges) + 1:
                    raise ParseError(f"Two consecutive edges in {text!r}")
                edges.append(int(edge))
            position = match.end()
        if len(vertices) != len(edges) + 1:
            raise ParseError(f"A trail starts and ends with a vertex, got {text!r}")
        return cls(vertices, edges)

    def __str__(self):
        parts = [str(self.vertices[0])]
        for label, vertex in zip(self.edge_labels, self.vertices[1:]):
            parts.append(f"-{label}- {vertex}")
        return " ".join(parts)


@dataclass(frozen=True)
class Violation:
    kind: str  # 'trail', 'start', 'double-use' or 'end'
    detail: str


@dataclass(frozen=True)
class CoverReport:
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(f"{v.kind}: {v.detail}" for v in self.violations)


def tdc_validate(cover):
    """Check the Trail Double Cover conditions on a candidate cover"""
    graph, trails = cover.graph, cover.trails
    violations = []
    for trail in trails:
        if not trail.joins(graph):
            violations.append(Violation("trail", f"{trail} is not a trail of the graph"))

    starts = Counter(trail.start for trail in trails)
    for v in range(1, graph.n + 1):
        if starts[v] != 1:
            violations.append(Violation("start", f"{starts[v]} trails start at vertex {v}"))
    for v in sorted(set(starts) - set(range(1, graph.n + 1))):
        violations.append(Violation("start", f"A trail starts at {v}, which is not a vertex"))

    uses = Counter(label for trail in trails for label in trail.edge_labels)
    for label in range(1, graph.m + 1):
        if uses[label] != 2:
            violations.append(Violation("double-use", f"Edge {label} is used by {uses[label]} trails"))

    ends = Counter(trail.end for trail in trails)
    for v in range(1, graph.n + 1):
        if ends[v] != 1:
            violations.append(Violation("end", f"{ends[v]} trails end at vertex {v}"))

    return CoverReport(tuple(violations))


@dataclass(frozen=True)
class TrailDoubleCover:
    """A graph with one trail per start vertex, every edge used by exactly
    two trails. Trails are stored by start vertex; the conditions are only
    checked by tdc_validate, so that candidate covers can be represented."""

    graph: LabeledMultigraph
    trails: tuple = field(default=())

    def __post_init__(self):
        trails = tuple(sorted(self.trails, key=lambda trail: trail.start))
        object.__setattr__(self, "trails", trails)

    def trail(self, start):
        for trail in self.trails:
            if trail.start == start:
                return trail
        raise LabelOutOfRange(f"No trail starts at {start}")

    def validated(self):
        """This cover, or InvalidCover when a condition fails"""
        report = tdc_validate(self)
        if not report:
            raise InvalidCover(str(report))
        return self

    @classmethod
    def parse(cls, text):
        """A graph block, a line 'trails:', then one line 'start: v1 -e1- v2 ...' per trail"""
        graph_text, separator, trails_text = text.partition("trails:")
        if not separator:
            raise ParseError("A cover lists its trails after a 'trails:' line")
        graph = LabeledMultigraph.parse(graph_text)
        trails = []
        for line in trails_text.strip().splitlines():
            if not line.strip():
                continue
            match = _TRAIL_LINE.match(line)
            if not match:
                raise ParseError(f"Expected a trail line 'start: v1 -e1- v2 ...', got {line!r}")
            trail = Trail.parse(match.group(2).strip())
            if trail.start != int(match.group(1)):
                raise ParseError(f"The trail {trail} does not start at {match.group(1)}")
            trails.append(trail)
        return cls(graph, trails)

    def __str__(self):
        lines = [str(self.graph), "trails:"]
        lines.extend(f"{trail.start}: {trail}" for trail in self.trails)
        return "\n".join(lines)


def migt(graph, u, incidence=None):
    """The Minimal Increasing Greedy Trail T_u: always take the smallest
    edge label larger than every label used so far"""
    if not 1 <= u <= graph.n:
        raise LabelOutOfRange(f"{u} is not a vertex of a graph on [{graph.n}]")
    if incidence is None:
        incidence = graph.incidence()
    vertices, edges = [u], []
    last = 0
    while True:
        labels, far = incidence[vertices[-1]]
        i = bisect_right(labels, last)
        if i == len(labels):
            break
        last = labels[i]
        edges.append(last)
        vertices.append(far[i])
    return Trail(vertices, edges)


def migt_cover(graph):
    """The set of MIGTs of a labeled graph, which is a Trail Double Cover"""
    incidence = graph.incidence()
    return TrailDoubleCover(graph, [migt(graph, u, incidence) for u in range(1, graph.n + 1)])


def tdc_permutation(cover):
    """Each trail maps its start vertex to its end vertex"""
    return Permutation(trail.end for trail in cover.validated().trails)


@dataclass(frozen=True)
class EdgeDigraph:
    """Nodes are the edges of the base graph, arcs join consecutive edges of a trail"""

    nodes: tuple
    arcs: frozenset

    def to_networkx(self):
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.nodes)
        digraph.add_edges_from(sorted(self.arcs))
        return digraph

    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.to_networkx())


def edge_digraph(cover):
    arcs = set()
    for trail in cover.validated().trails:
        arcs.update(zip(trail.edge_labels, trail.edge_labels[1:]))
    return EdgeDigraph(tuple(range(1, cover.graph.m + 1)), frozenset(arcs))


@dataclass(frozen=True)
class Realizable:
    """labeling[e] is the new label of edge e; order lists the edges by new label"""

    labeling: dict
    order: tuple

    def __bool__(self):
        return True

    def __str__(self):
        return "realizable: " + " ".join(str(e) for e in self.order)


@dataclass(frozen=True)
class NotRealizable:
    """cycle is a directed cycle of the Edge Digraph, back to its first node"""

    cycle: tuple

    def __bool__(self):
        return False

    def __str__(self):
        return "not realizable: " + " -> ".join(str(e) for e in self.cycle + self.cycle[:1])


def _labeling(order):
    return {edge: label for label, edge in enumerate(order, start=1)}


def check_labeling(cover, order):
    """Whether labeling the edges in the given order yields exactly the trails of the cover"""
    labeling = _labeling(order)
    try:
        relabeled = relabel(cover.graph, labeling)
    except ValueError:
        return False
    edge_of = {label: edge for edge, label in labeling.items()}
    for trail in migt_cover(relabeled).trails:
        original = Trail(trail.vertices, [edge_of[label] for label in trail.edge_labels])
        if original != cover.trail(trail.start):
            return False
    return True


def realize(cover):
    """Find an edge labeling whose MIGTs are the given cover, or a directed
    cycle of its Edge Digraph proving that there is none"""
    digraph = edge_digraph(cover).to_networkx()
    try:
        order = tuple(nx.lexicographical_topological_sort(digraph))
    except nx.NetworkXUnfeasible:
        cycle = [u for u, _ in nx.find_cycle(digraph)]
        start = cycle.index(min(cycle))
        logger.info("The Edge Digraph has a directed cycle of length %d", len(cycle))
        return NotRealizable(tuple(cycle[start:] + cycle[:start]))

    if not check_labeling(cover, order):
        raise RuntimeError(f"The topological order {order} does not realize the cover")
    return Realizable(_labeling(order), order)


def all_realizations(cover):
    """Every edge order realizing the cover, one per topological sort of its Edge Digraph"""
    digraph = edge_digraph(cover).to_networkx()
    if not nx.is_directed_acyclic_graph(digraph):
        return
    for order in nx.all_topological_sorts(digraph):
        order = tuple(order)
        if not check_labeling(cover, order):
            raise RuntimeError(f"The topological order {order} does not realize the cover")
        yield Realizable(_labeling(order), order)


def sequence_to_graph(s):
    return LabeledMultigraph.from_sequence(s)


def graph_to_sequence(graph):
    return graph.to_sequence()


def random_graph(rng, n, m):
    """A random labeled multigraph on [n] with m edges"""
    edges = []
    for _ in range(m):
        x, y = rng.choice(n, size=2, replace=False) + 1
        edges.append((int(x), int(y)))
    return LabeledMultigraph(n, edges)
