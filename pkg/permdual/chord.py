"""Circle Chord Diagrams of trees, their non-crossing and clockwise-decreasing
properties, the walk around a region, and the Goulden-Yong dual

Points 1..n sit clockwise on a circle. The geometry is combinatorial: the
only notion used is the clockwise distance (b - a) mod n from a to b.
"""
import logging
from dataclasses import dataclass

from .errors import CrossingChords, LabelOutOfRange, NotATree, NotInFdown
from .perm import is_tree
from .trails import LabeledMultigraph, Trail

logging.basicConfig()
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CircleChordDiagram:
    """chords[k - 1] holds the endpoints of the chord labeled k"""

    n: int
    chords: tuple = ()

    def __post_init__(self):
        chords = []
        for a, b in self.chords:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"A chord joins two distinct points, got ({a},{b})")
            for v in (a, b):
                if not 1 <= v <= self.n:
                    raise LabelOutOfRange(f"{v} is not one of the {self.n} points")
            chords.append((min(a, b), max(a, b)))
        object.__setattr__(self, "chords", tuple(chords))

    def clockwise_distance(self, a, b):
        return (b - a) % self.n

    def at(self, v):
        """The (label, far end) of the chords at v, in clockwise order of their
        far ends, starting just after v"""
        incident = [(k, b if a == v else a) for k, (a, b) in enumerate(self.chords, start=1) if v in (a, b)]
        return sorted(incident, key=lambda chord: self.clockwise_distance(v, chord[1]))

    def crosses(self, k, j):
        """Whether the chords k and j cross; chords sharing a point never do"""
        a, b = self.chords[k - 1]
        c, d = self.chords[j - 1]
        if {a, b} & {c, d}:
            return False
        return (a < c < b) != (a < d < b)

    def to_graph(self):
        return LabeledMultigraph(self.n, self.chords)


def chord_diagram(t):
    """One chord per edge of the tree t, with the same label"""
    if not is_tree(t):
        raise NotATree(f"{t} is not a tree")
    return CircleChordDiagram(t.n, [(e.x, e.y) for e in t])


@dataclass(frozen=True)
class PropertyCheck:
    """The outcome of a property check, with a witness when it fails"""

    name: str
    witness: tuple = ()

    @property
    def ok(self):
        return not self.witness

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"{self.name}: ok"
        return f"{self.name}: fails at {self.witness}"


def check_noncrossing(diagram):
    """The first pair of crossing chords, if any"""
    m = len(diagram.chords)
    for k in range(1, m + 1):
        for j in range(k + 1, m + 1):
            if diagram.crosses(k, j):
                return PropertyCheck("non-crossing", (k, j))
    return PropertyCheck("non-crossing")


def check_clockwise_decreasing(diagram):
    """The first point at which the chord labels do not decrease clockwise"""
    for v in range(1, diagram.n + 1):
        labels = [k for k, _ in diagram.at(v)]
        if any(a <= b for a, b in zip(labels, labels[1:])):
            return PropertyCheck("clockwise-decreasing", (v, tuple(labels)))
    return PropertyCheck("clockwise-decreasing")


@dataclass(frozen=True)
class RegionWalk:
    """The chords on the boundary of region k, the region containing the arc
    from k - 1 to k, walked from k"""

    region: int
    boundary: Trail

    @property
    def chords(self):
        return frozenset(self.boundary.edge_labels)


def region_walk(diagram, x):
    """Leave x on its most clockwise chord; at each point turn to the next chord
    counter-clockwise from the arrival chord, and stop when there is none"""
    if not 1 <= x <= diagram.n:
        raise LabelOutOfRange(f"{x} is not one of the {diagram.n} points")
    crossing = check_noncrossing(diagram)
    if not crossing:
        raise CrossingChords(f"The chords {crossing.witness} cross")

    chords = diagram.at(x)
    if not chords:
        return RegionWalk(x, Trail([x]))
    label, v = chords[-1]
    vertices, labels = [x, v], [label]
    while True:
        chords = diagram.at(v)
        i = [k for k, _ in chords].index(label)
        if i == 0:
            break
        label, v = chords[i - 1]
        vertices.append(v)
        labels.append(label)
        if len(labels) > len(diagram.chords):
            raise RuntimeError(f"The walk around region {x} does not close")
    return RegionWalk(x, Trail(vertices, labels))


def gy_dual(t):
    """The Goulden-Yong dual: region k becomes vertex k, and the chord labeled k
    becomes an edge labeled k between the two regions it borders"""
    diagram = chord_diagram(t)
    for check in (check_noncrossing(diagram), check_clockwise_decreasing(diagram)):
        if not check:
            raise NotInFdown(f"{t}: {check}")

    regions = {k: [] for k in range(1, len(diagram.chords) + 1)}
    for x in range(1, diagram.n + 1):
        for label in region_walk(diagram, x).chords:
            regions[label].append(x)
    for label, bordering in regions.items():
        if len(bordering) != 2:
            raise NotInFdown(f"{t}: chord {label} borders the regions {bordering}")
    return LabeledMultigraph(diagram.n, [tuple(regions[k]) for k in sorted(regions)])
