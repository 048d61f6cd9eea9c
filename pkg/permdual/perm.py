"""Permutations, transpositions and transposition sequences over [n]

Labels are 1-based everywhere. Products are taken left to right: in
``p * q`` the permutation ``p`` acts first.
"""
import re
from dataclasses import dataclass
from itertools import groupby

import networkx as nx
from networkx.utils import UnionFind

from .errors import DimensionMismatch, EmptyInput, LabelOutOfRange, ParseError

_CYCLE = re.compile(r"\(([^()]*)\)")
_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*;(.*)$", flags=re.DOTALL)
_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def _check_label(label, n):
    if not 1 <= label <= n:
        raise LabelOutOfRange(f"{label} is not in [{n}]")


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n]; image[k - 1] is the image of k"""

    image: tuple

    def __post_init__(self):
        image = tuple(int(i) for i in self.image)
        if not image:
            raise ValueError("A permutation acts on [n] with n >= 1")
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"{image} is not a bijection of [{len(image)}]")
        object.__setattr__(self, "image", image)

    @property
    def n(self):
        return len(self.image)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n, cycles):
        """The permutation with the given cycles; (a, b, c) maps a->b->c->a"""
        image = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            cycle = [int(c) for c in cycle]
            for label in cycle:
                _check_label(label, n)
                if label in seen:
                    raise ValueError(f"{label} appears in two cycles")
                seen.add(label)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                image[a - 1] = b
        return cls(image)

    @classmethod
    def parse(cls, text, n):
        """Parse cycle notation, e.g. '(4,3,2,1)' or '()' for the identity"""
        stripped = _CYCLE.sub("", text)
        if stripped.strip():
            raise ParseError(f"Unexpected text {stripped.strip()!r} in cycle notation {text!r}")
        cycles = []
        for body in _CYCLE.findall(text):
            if body.strip():
                cycles.append([int(c) for c in body.split(",")])
        return cls.from_cycles(n, cycles)

    def __call__(self, label):
        _check_label(label, self.n)
        return self.image[label - 1]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"Cannot multiply permutations of [{self.n}] and [{other.n}]")
        return Permutation(other.image[i - 1] for i in self.image)

    def inverse(self):
        inverse = [0] * self.n
        for x, y in enumerate(self.image, start=1):
            inverse[y - 1] = x
        return Permutation(inverse)

    def is_identity(self):
        return all(x == y for x, y in enumerate(self.image, start=1))

    def cycles(self, include_fixed_points=False):
        """The cycles, each starting with its smallest element"""
        seen = set()
        cycles = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            label = self(start)
            while label != start:
                cycle.append(label)
                seen.add(label)
                label = self(label)
            if len(cycle) > 1 or include_fixed_points:
                cycles.append(tuple(cycle))
        return cycles

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(c) for c in cycle) + ")" for cycle in cycles)


def long_cycle(n, direction="down"):
    """(n,...,2,1) for direction='down', (1,2,...,n) for direction='up'"""
    if direction == "down":
        return Permutation.from_cycles(n, [range(n, 0, -1)])
    if direction == "up":
        return Permutation.from_cycles(n, [range(1, n + 1)])
    raise ValueError(f"direction should be either 'down' or 'up', not {direction!r}")


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition (x, y), stored with x < y"""

    x: int
    y: int

    def __post_init__(self):
        x, y = int(self.x), int(self.y)
        if x == y:
            raise ValueError(f"({x},{y}) is not a transposition")
        if min(x, y) < 1:
            raise LabelOutOfRange(f"Labels start at 1, got ({x},{y})")
        if x > y:
            x, y = y, x
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __iter__(self):
        return iter((self.x, self.y))

    def __contains__(self, label):
        return label == self.x or label == self.y

    def other(self, label):
        """The image of label under this transposition"""
        if label == self.x:
            return self.y
        if label == self.y:
            return self.x
        return label

    def as_permutation(self, n):
        if self.y > n:
            raise DimensionMismatch(f"{self} does not act on [{n}]")
        image = list(range(1, n + 1))
        image[self.x - 1], image[self.y - 1] = self.y, self.x
        return Permutation(image)

    def __str__(self):
        return f"({self.x},{self.y})"


def _as_transposition(entry):
    if isinstance(entry, Transposition):
        return entry
    x, y = entry
    return Transposition(x, y)


@dataclass(frozen=True)
class TranspositionSequence:
    """An ordered list of transpositions over S_n; entry k carries label k"""

    n: int
    entries: tuple = ()

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise ValueError(f"n should be positive, not {n}")
        entries = tuple(_as_transposition(t) for t in self.entries)
        for t in entries:
            _check_label(t.y, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return TranspositionSequence(self.n, self.entries[item])
        return self.entries[item]

    def __add__(self, other):
        if not isinstance(other, TranspositionSequence):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"Cannot concatenate sequences over S_{self.n} and S_{other.n}")
        return TranspositionSequence(self.n, self.entries + other.entries)

    def entry(self, k):
        """The entry labeled k (1-based)"""
        if not 1 <= k <= len(self.entries):
            raise LabelOutOfRange(f"No entry {k} in a sequence of length {len(self.entries)}")
        return self.entries[k - 1]

    @classmethod
    def parse(cls, text):
        """Parse 'n=4; (3,4) (1,3) (1,2) (3,4) (2,3)'"""
        match = _HEADER.match(text)
        if not match:
            raise ParseError(f"A transposition sequence should start with 'n=<k>;', got {text[:30]!r}")
        n, body = int(match.group(1)), match.group(2)
        leftover = _PAIR.sub("", body)
        if leftover.strip():
            raise ParseError(f"Unexpected text {leftover.strip()!r} in transposition sequence")
        return cls(n, [(int(x), int(y)) for x, y in _PAIR.findall(body)])

    def __str__(self):
        return " ".join([f"n={self.n};"] + [str(t) for t in self.entries])


@dataclass(frozen=True)
class Trajectory:
    """The contracted sequence of positions of a point"""

    points: tuple

    def __post_init__(self):
        points = tuple(int(p) for p in self.points)
        if not points:
            raise EmptyInput("A trajectory has at least one point")
        if any(a == b for a, b in zip(points, points[1:])):
            raise ValueError(f"{points} has equal consecutive points")
        object.__setattr__(self, "points", points)

    @property
    def start(self):
        return self.points[0]

    @property
    def end(self):
        return self.points[-1]


def product(s):
    """The product s_1 · s_2 ··· s_m, leftmost factor applied first"""
    # preimage[v] is the point sent to v by the product of the prefix read so far
    preimage = list(range(s.n + 1))
    for t in s:
        preimage[t.x], preimage[t.y] = preimage[t.y], preimage[t.x]
    image = [0] * s.n
    for v in range(1, s.n + 1):
        image[preimage[v] - 1] = v
    return Permutation(image)


def conjugate(p, t):
    """The conjugate p^t = t⁻¹ · p · t of a permutation or transposition p"""
    if isinstance(t, Transposition):
        n = p.n if isinstance(p, Permutation) else max(p.y, t.y)
        t = t.as_permutation(n)
    if isinstance(p, Transposition):
        if p.y > t.n:
            raise DimensionMismatch(f"{p} does not act on [{t.n}]")
        return Transposition(t(p.x), t(p.y))
    if p.n != t.n:
        raise DimensionMismatch(f"Cannot conjugate a permutation of [{p.n}] by one of [{t.n}]")
    return t.inverse() * p * t


def conjugate_sequence(s, t):
    """Entrywise conjugation ⟨s_1^t, ..., s_m^t⟩ by a transposition t"""
    if t.y > s.n:
        raise DimensionMismatch(f"{t} does not act on [{s.n}]")
    return TranspositionSequence(s.n, [Transposition(t.other(e.x), t.other(e.y)) for e in s])


def contraction(points):
    """Collapse maximal runs of equal consecutive entries"""
    points = list(points)
    if not points:
        raise EmptyInput("Cannot contract an empty sequence")
    return Trajectory(key for key, _ in groupby(points))


def trajectory(s, x):
    """The contraction of ⟨x_0, ..., x_m⟩ where x_k is the image of x under the length-k prefix"""
    _check_label(x, s.n)
    positions = [x]
    for t in s:
        positions.append(t.other(positions[-1]))
    return contraction(positions)


def to_networkx(s):
    """The sequence as a multigraph on [n]; the edge key is the entry label"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(1, s.n + 1))
    for k, t in enumerate(s, start=1):
        graph.add_edge(t.x, t.y, key=k)
    return graph


def is_tree(s):
    """Whether the graph of s is a spanning tree of [n]"""
    if len(s) != s.n - 1:
        return False
    forest = UnionFind(range(1, s.n + 1))
    for t in s:
        if forest[t.x] == forest[t.y]:
            return False
        forest.union(t.x, t.y)
    return True
