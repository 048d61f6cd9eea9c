"""DOT and SVG representations of graphs, Edge Digraphs and chord diagrams"""

import numpy as np
from IPython.display import SVG, Pretty, display

import permdual.options as opt

from .chord import CircleChordDiagram, chord_diagram
from .perm import TranspositionSequence
from .trails import EdgeDigraph, LabeledMultigraph
from .utils import read_package_file, replace_value


def to_dot(graph):
    """A labeled multigraph (or a transposition sequence) in the DOT language"""
    if isinstance(graph, TranspositionSequence):
        graph = LabeledMultigraph.from_sequence(graph)
    output = read_package_file("templates/graph.dot")
    nodes = "\n".join(f"  {v};" for v in range(1, graph.n + 1))
    edges = "\n".join(f'  {x} -- {y} [label="{k}"];' for k, (x, y) in enumerate(graph.edges, start=1))
    output = replace_value(output, "  // nodes", nodes)
    return replace_value(output, "  // edges", edges)


def edge_digraph_to_dot(digraph):
    output = read_package_file("templates/digraph.dot")
    nodes = "\n".join(f"  {e};" for e in digraph.nodes)
    arcs = "\n".join(f"  {a} -> {b};" for a, b in sorted(digraph.arcs))
    output = replace_value(output, "  // nodes", nodes)
    return replace_value(output, "  // arcs", arcs)


def _angle(k, n):
    # point n at the top, then clockwise
    return -2 * np.pi * k / n + np.pi / 2


def _point(k, n, radius):
    angle = _angle(k, n)
    return radius * np.cos(angle), -radius * np.sin(angle)


def _region_point(k, n, radius):
    """A point of region k, next to the arc from k - 1 to k"""
    angle = _angle(k - 0.5, n)
    return radius * np.cos(angle), -radius * np.sin(angle)


def chord_svg(diagram, dual=None, size=None, label_radius=None):
    """The chord diagram as SVG, with circled chord labels. The optional dual
    (a graph on the regions) is drawn with dashed lines."""
    if isinstance(diagram, TranspositionSequence):
        diagram = chord_diagram(diagram)
    if size is None:
        size = opt.svg_size
    if label_radius is None:
        label_radius = opt.svg_label_radius

    radius = 0.4 * size
    n = diagram.n
    output = read_package_file("templates/chord.svg")
    output = output.replace("SVG_SIZE", str(size))
    output = replace_value(output, "VIEW_BOX", f"{-size / 2:g} {-size / 2:g} {size:g} {size:g}")
    output = replace_value(output, "CIRCLE_RADIUS", f"{radius:g}")

    chords = []
    for k, (a, b) in enumerate(diagram.chords, start=1):
        (xa, ya), (xb, yb) = _point(a, n, radius), _point(b, n, radius)
        xm, ym = (xa + xb) / 2, (ya + yb) / 2
        chords.append(f'  <line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}" stroke="black"/>')
        chords.append(
            f'  <circle cx="{xm:.2f}" cy="{ym:.2f}" r="{label_radius}" fill="white" stroke="black"/>'
            f'<text x="{xm:.2f}" y="{ym:.2f}" text-anchor="middle" dominant-baseline="central">{k}</text>'
        )
    output = replace_value(output, "  <!-- chords -->", "\n".join(chords))

    points = []
    for v in range(1, n + 1):
        x, y = _point(v, n, radius)
        xl, yl = _point(v, n, radius + 2 * label_radius)
        points.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        points.append(f'  <text x="{xl:.2f}" y="{yl:.2f}" text-anchor="middle" dominant-baseline="central">{v}</text>')
    output = replace_value(output, "  <!-- points -->", "\n".join(points))

    overlay = []
    if dual is not None:
        if dual.n != n:
            raise ValueError(f"The dual has {dual.n} vertices, the diagram has {n} regions")
        inner = 0.8 * radius
        for x, y in dual.edges:
            (x1, y1), (x2, y2) = _region_point(x, n, inner), _region_point(y, n, inner)
            overlay.append(
                f'  <line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                'stroke="#1f77b4" stroke-dasharray="4 3"/>'
            )
        for k in range(1, n + 1):
            x, y = _region_point(k, n, inner)
            overlay.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="#1f77b4"/>')
    return replace_value(output, "  <!-- dual -->", "\n".join(overlay))


def show(obj, dual=None):
    """Display a chord diagram (or a tree sequence) as SVG, and a graph or an
    Edge Digraph in the DOT language"""
    if isinstance(obj, EdgeDigraph):
        display(Pretty(edge_digraph_to_dot(obj)))
    elif isinstance(obj, LabeledMultigraph):
        display(Pretty(to_dot(obj)))
    elif isinstance(obj, (CircleChordDiagram, TranspositionSequence)):
        display(SVG(chord_svg(obj, dual=dual)))
    else:
        raise TypeError(f"Cannot show an object of type {type(obj).__name__}")
