"""Mind-Body Assignments, the mind-swapping and body-swapping operations,
the Corresponding Mind-Body Sequence and the Mind-Body Dual"""
import re
from dataclasses import dataclass

from .errors import DimensionMismatch, ParseError
from .perm import Permutation, Transposition, TranspositionSequence, contraction

_ROWS = re.compile(r"^\s*\[([\d,\s]*)/([\d,\s]*)\]\s*$")


@dataclass(frozen=True)
class MindBodyAssignment:
    """Which body holds which mind, stored as the map mind -> body"""

    body_of: Permutation

    @property
    def n(self):
        return self.body_of.n

    @classmethod
    def identity(cls, n):
        return cls(Permutation.identity(n))

    @classmethod
    def from_rows(cls, minds, bodies):
        """The assignment with mind minds[i] above body bodies[i]; row order is irrelevant"""
        minds, bodies = list(minds), list(bodies)
        if len(minds) != len(bodies):
            raise DimensionMismatch(f"{len(minds)} minds for {len(bodies)} bodies")
        image = [0] * len(minds)
        for mind, body in zip(minds, bodies):
            image[mind - 1] = body
        return cls(Permutation(image))

    @classmethod
    def parse(cls, text):
        """Parse '[1,2,3,4 / 3,2,4,1]'"""
        match = _ROWS.match(text)
        if not match:
            raise ParseError(f"A mind-body assignment reads '[m1,...,mn / b1,...,bn]', got {text!r}")
        minds, bodies = ([int(v) for v in row.split(",") if v.strip()] for row in match.groups())
        return cls.from_rows(minds, bodies)

    def body_below(self, mind):
        return self.body_of(mind)

    def mind_above(self, body):
        return self.body_of.inverse()(body)

    def rows(self):
        """Minds in ascending order, and the bodies below them"""
        return tuple(range(1, self.n + 1)), self.body_of.image

    def __str__(self):
        minds, bodies = self.rows()
        return "[{} / {}]".format(",".join(map(str, minds)), ",".join(map(str, bodies)))


def _swaps(t):
    if isinstance(t, TranspositionSequence):
        return t.entries
    if isinstance(t, Transposition):
        return (t,)
    return tuple(t)


def mind_swap(assignment, t):
    """A ⓜ t: minds x and y exchange their bodies; equals (x,y) · A.
    A sequence of transpositions is applied from left to right."""
    body_of = assignment.body_of
    for swap in _swaps(t):
        body_of = swap.as_permutation(assignment.n) * body_of
    return MindBodyAssignment(body_of)


def body_swap(assignment, t):
    """A ⓑ t: bodies x and y exchange their minds; equals A · (x,y).
    A sequence of transpositions is applied from left to right."""
    body_of = assignment.body_of
    for swap in _swaps(t):
        body_of = body_of * swap.as_permutation(assignment.n)
    return MindBodyAssignment(body_of)


@dataclass(frozen=True)
class MindBodySequence:
    """⟨A_0, ..., A_m⟩ with A_0 the identity and one body swap per step"""

    assignments: tuple

    def __post_init__(self):
        assignments = tuple(self.assignments)
        if not assignments or not assignments[0].body_of.is_identity():
            raise ValueError("A Mind-Body Sequence starts with the identity assignment")
        for before, after in zip(assignments, assignments[1:]):
            step = before.body_of.inverse() * after.body_of
            moved = [x for x, y in enumerate(step.image, start=1) if x != y]
            if len(moved) != 2:
                raise ValueError(f"{before} and {after} do not differ by exactly one body swap")
        object.__setattr__(self, "assignments", assignments)

    def __len__(self):
        return len(self.assignments)

    def __iter__(self):
        return iter(self.assignments)

    def __getitem__(self, k):
        return self.assignments[k]


def mb_sequence(s):
    """The Corresponding Mind-Body Sequence A_k = 𝓘 ⓑ ⟨s_1, ..., s_k⟩"""
    assignments = [MindBodyAssignment.identity(s.n)]
    for t in s:
        assignments.append(body_swap(assignments[-1], t))
    return MindBodySequence(assignments)


def mb_dual_of(assignment, t):
    """MB_A(t): the minds above the bodies of t in A"""
    if t.y > assignment.n:
        raise DimensionMismatch(f"{t} does not act on [{assignment.n}]")
    return Transposition(assignment.mind_above(t.x), assignment.mind_above(t.y))


def mb_dual(s):
    """The Mind-Body Dual: entry k is MB_{A_(k-1)}(s_k)"""
    assignment = MindBodyAssignment.identity(s.n)
    dual = []
    for t in s:
        dual.append(mb_dual_of(assignment, t))
        assignment = body_swap(assignment, t)
    return TranspositionSequence(s.n, dual)


def body_trace(s, mind):
    """The contracted sequence of bodies holding the given mind along mb_sequence(s)"""
    return contraction(a.body_below(mind) for a in mb_sequence(s))
