"""The dual of a transposition sequence, computed in four independent ways"""
import logging
from collections import deque
from dataclasses import dataclass

import pandas as pd

from .mindbody import mb_dual
from .perm import Transposition, TranspositionSequence
from .trails import LabeledMultigraph, migt_cover

logging.basicConfig()
logger = logging.getLogger(__name__)


def trail_dual(graph):
    """Edge k joins x and y when the MIGTs T_x and T_y both use the edge labeled k"""
    users = {label: [] for label in range(1, graph.m + 1)}
    for trail in migt_cover(graph).trails:
        for label in trail.edge_labels:
            users[label].append(trail.start)
    return LabeledMultigraph(graph.n, [tuple(users[label]) for label in range(1, graph.m + 1)])


def algebraic_dual(s):
    """⟨s_1, s_2^(s_1), s_3^(s_2 s_1), ..., s_m^(s_(m-1) ... s_1)⟩"""
    # conjugator[v - 1] is the image of v under s_(k-1) ... s_1
    conjugator = list(range(1, s.n + 1))
    dual = []
    for t in s:
        dual.append(Transposition(conjugator[t.x - 1], conjugator[t.y - 1]))
        conjugator[t.x - 1], conjugator[t.y - 1] = conjugator[t.y - 1], conjugator[t.x - 1]
    return TranspositionSequence(s.n, dual)


def _graph_algorithm(graph):
    """Yield (k, ends, label_of) after edge k has been added to G* and the
    labels of its endpoints swapped. ends[k] holds the nodes of edge k in G*,
    label_of[node] the current label of a node; both are updated in place."""
    node_of = list(range(graph.n + 1))
    label_of = list(range(graph.n + 1))
    ends = {}
    for k in range(graph.m, 0, -1):
        a, b = graph.edge(k)
        ends[k] = (node_of[a], node_of[b])
        node_of[a], node_of[b] = node_of[b], node_of[a]
        label_of[node_of[a]], label_of[node_of[b]] = a, b
        yield k, ends, label_of


def _labeled_edges(ends, label_of):
    return {k: tuple(sorted((label_of[u], label_of[v]))) for k, (u, v) in sorted(ends.items())}


def graph_algorithm_steps(graph):
    """The intermediate graphs G* of the graph algorithm, one per processed edge,
    as maps edge label -> endpoints"""
    steps = []
    for k, ends, label_of in _graph_algorithm(graph):
        steps.append(_labeled_edges(ends, label_of))
        logger.debug("After edge %d: %s", k, steps[-1])
    return steps


def graph_algorithm_dual(graph):
    """Process the edges from m down to 1: add edge k between its endpoints in G*,
    then swap the labels of these endpoints"""
    last = deque(_graph_algorithm(graph), maxlen=1)
    if not last:
        return LabeledMultigraph(graph.n)
    _, ends, label_of = last[0]
    edges = _labeled_edges(ends, label_of)
    return LabeledMultigraph(graph.n, [edges[k] for k in range(1, graph.m + 1)])


def _by_trails(s):
    return trail_dual(LabeledMultigraph.from_sequence(s)).to_sequence()


def _by_graph_algorithm(s):
    return graph_algorithm_dual(LabeledMultigraph.from_sequence(s)).to_sequence()


METHODS = {
    "mb": mb_dual,
    "trail": _by_trails,
    "algebraic": algebraic_dual,
    "graph-alg": _by_graph_algorithm,
}


def dual(s, method="algebraic"):
    """The dual of a transposition sequence, with any of the METHODS"""
    if method not in METHODS:
        raise ValueError(f"method should be one of {sorted(METHODS)}, not {method!r}")
    return METHODS[method](s)


@dataclass(frozen=True)
class DualReport:
    sequence: TranspositionSequence
    duals: dict

    @property
    def divergences(self):
        """(k, method, entry) for every entry that differs from the Mind-Body Dual"""
        reference = self.duals["mb"]
        return [
            (k, method, entry)
            for method, other in self.duals.items()
            for k, (expected, entry) in enumerate(zip(reference, other), start=1)
            if expected != entry
        ]

    @property
    def agree(self):
        return not self.divergences

    def __bool__(self):
        return self.agree

    def to_frame(self):
        """One row per entry, one column per method"""
        return pd.DataFrame(
            {method: [str(t) for t in d] for method, d in self.duals.items()},
            index=pd.RangeIndex(1, len(self.sequence) + 1, name="k"),
        )


def dual_equivalence_report(s):
    return DualReport(s, {method: compute(s) for method, compute in METHODS.items()})
