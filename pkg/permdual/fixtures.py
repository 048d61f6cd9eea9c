"""Worked examples shipped with the package, in the text formats of permdual"""
import os
import re

from .bijection import VertexLabeledTree
from .errors import ParseError
from .mindbody import MindBodyAssignment, MindBodySequence
from .perm import TranspositionSequence
from .trails import LabeledMultigraph, TrailDoubleCover
from .utils import find_package_file, read_package_file

_STEP_EDGE = re.compile(r"(\d+)\s*:\s*\{\s*(\d+)\s*,\s*(\d+)\s*\}")


def _parse_steps(text):
    """One line per step of the graph algorithm, e.g. '5:{2,4} 4:{3,4}'"""
    steps = []
    for line in text.strip().splitlines():
        if _STEP_EDGE.sub("", line).strip():
            raise ParseError(f"Expected edges 'k:{{x,y}}', got {line!r}")
        steps.append({int(k): (int(x), int(y)) for k, x, y in _STEP_EDGE.findall(line)})
    return steps


def _parse_mind_body(text):
    return MindBodySequence([MindBodyAssignment.parse(line) for line in text.strip().splitlines()])


PARSERS = {
    ".seq": TranspositionSequence.parse,
    ".graph": LabeledMultigraph.parse,
    ".cover": TrailDoubleCover.parse,
    ".tree": VertexLabeledTree.parse,
    ".steps": _parse_steps,
    ".mb": _parse_mind_body,
}


def list_fixtures():
    """The fixture names, e.g. 'four_vertex_migts' or 'eight_vertex_relabeled'"""
    return sorted(os.path.splitext(name)[0] for name in os.listdir(find_package_file("samples")))


# Other names of the worked examples
ALIASES = {
    "fig1": "four_vertex",
    "fig2": "four_vertex_migts",
    "fig3": "two_triangles",
    "fig6": "four_vertex_dual",
    "fig7": "four_vertex_steps",
    "fig8": "eight_vertex",
    "fig9": "nine_vertex",
    "fig10": "nine_vertex",
    "fig11": "nine_vertex_gy_dual",
}


def fixture_file(name):
    """The file name of a fixture, given its name or one of its ALIASES"""
    name = ALIASES.get(name, name)
    for file in os.listdir(find_package_file("samples")):
        if os.path.splitext(file)[0] == name:
            return file
    raise ValueError(f"No fixture named {name!r}. Available fixtures are {list_fixtures()}")


def get_fixture_text(name):
    return read_package_file("samples", fixture_file(name))


def get_fixture(name):
    """The fixture parsed as a sequence, graph, cover, tree, list of graph
    algorithm steps, or Mind-Body Sequence, depending on its extension"""
    file = fixture_file(name)
    return PARSERS[os.path.splitext(file)[1]](read_package_file("samples", file))
