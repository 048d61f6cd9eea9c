from .bijection import (
    VertexLabeledTree,
    VertexPartition,
    bijection_B,
    bijection_B_inverse,
    cpart,
    enumerate_Fdown,
    enumerate_Fup,
    fpart,
    random_Fdown,
    relabel_S,
    relabel_S_inverse,
    verify_structural,
)
from .chord import CircleChordDiagram, chord_diagram, gy_dual, region_walk
from .dual import algebraic_dual, dual, dual_equivalence_report, graph_algorithm_dual, trail_dual
from .mindbody import MindBodyAssignment, body_swap, mb_dual, mb_sequence, mind_swap
from .perm import Permutation, Transposition, TranspositionSequence, product, trajectory
from .render import show
from .trails import LabeledMultigraph, Trail, TrailDoubleCover, migt, migt_cover, realize
from .version import __version__

__all__ = [
    "__version__",
    "show",
    "Permutation",
    "Transposition",
    "TranspositionSequence",
    "product",
    "trajectory",
    "MindBodyAssignment",
    "mind_swap",
    "body_swap",
    "mb_sequence",
    "mb_dual",
    "LabeledMultigraph",
    "Trail",
    "TrailDoubleCover",
    "migt",
    "migt_cover",
    "realize",
    "dual",
    "trail_dual",
    "algebraic_dual",
    "graph_algorithm_dual",
    "dual_equivalence_report",
    "VertexLabeledTree",
    "VertexPartition",
    "enumerate_Fdown",
    "enumerate_Fup",
    "relabel_S",
    "relabel_S_inverse",
    "bijection_B",
    "bijection_B_inverse",
    "fpart",
    "cpart",
    "random_Fdown",
    "verify_structural",
    "CircleChordDiagram",
    "chord_diagram",
    "region_walk",
    "gy_dual",
]
