"""Factorizations of the long cycles into n - 1 transpositions, the map S from
F↑n to vertex-labeled trees, the bijection B = S ∘ D and its structural property"""
import logging
import re
import warnings
from dataclasses import dataclass
from itertools import product as cartesian_product

import networkx as nx
import numpy as np
import pandas as pd

from . import options
from .dual import algebraic_dual
from .errors import NotATree, ParseError, ResourceCapExceeded, WrongProduct
from .perm import Permutation, TranspositionSequence, is_tree, long_cycle, product, to_networkx
from .trails import LabeledMultigraph, migt

logging.basicConfig()
logger = logging.getLogger(__name__)

DIRECTIONS = ("down", "up")

_TREE_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*;(.*)$", flags=re.DOTALL)
_TREE_EDGE = re.compile(r"\{\s*(\d+)\s*,\s*(\d+)\s*\}")


def _check_direction(direction):
    if direction not in DIRECTIONS:
        raise ValueError(f"direction should be one of {DIRECTIONS}, not {direction!r}")


def _check_cap(n):
    cap = options.get_max_n()
    if n > cap:
        raise ResourceCapExceeded(
            f"Enumerating the factorizations for n={n} exceeds the cap of {cap}. "
            "Raise permdual.options.max_n or set PERMDUAL_MAX_N to go further."
        )


def check_factorization(s, direction="down"):
    """Raise NotATree or WrongProduct unless s belongs to F↓n (or F↑n)"""
    _check_direction(direction)
    if not is_tree(s):
        raise NotATree(f"{s} is not a tree")
    expected = long_cycle(s.n, direction)
    found = product(s)
    if found != expected:
        raise WrongProduct(f"{s} multiplies to {found}, not {expected}")


@dataclass(frozen=True)
class FactorizationSet:
    """The length n - 1 transposition sequences with product (n,...,2,1)
    (direction='down') or (1,2,...,n) (direction='up')"""

    n: int
    direction: str
    members: tuple

    def __post_init__(self):
        _check_direction(self.direction)
        members = tuple(self.members)
        for s in members:
            check_factorization(s, self.direction)
        if len(set(members)) != len(members):
            raise ValueError("A factorization set has no duplicates")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s):
        return s in self.members


@dataclass(frozen=True)
class VertexLabeledTree:
    """A tree on the vertices [n], without edge labels"""

    n: int
    edges: frozenset

    def __post_init__(self):
        n = int(self.n)
        edges = frozenset(tuple(sorted((int(x), int(y)))) for x, y in self.edges)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        if len(edges) != n - 1 or not nx.is_tree(self.to_networkx()):
            raise NotATree(f"The edges {sorted(edges)} do not form a tree on [{n}]")

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def parse(cls, text):
        """Parse 'n=8; {1,8} {2,8} ...'"""
        match = _TREE_HEADER.match(text)
        if not match:
            raise ParseError(f"A tree should start with 'n=<k>;', got {text[:30]!r}")
        n, body = int(match.group(1)), match.group(2)
        leftover = _TREE_EDGE.sub("", body)
        if leftover.strip():
            raise ParseError(f"Unexpected text {leftover.strip()!r} in tree")
        return cls(n, [(int(x), int(y)) for x, y in _TREE_EDGE.findall(body)])

    def __str__(self):
        return " ".join([f"n={self.n};"] + [f"{{{x},{y}}}" for x, y in sorted(self.edges)])


def prufer_encode(tree):
    """The Prüfer code of a tree with n >= 2 vertices, as labels in [n]"""
    if tree.n < 2:
        raise ValueError("Prüfer codes are defined for trees with at least two vertices")
    graph = nx.relabel_nodes(tree.to_networkx(), lambda v: v - 1)
    return tuple(v + 1 for v in nx.to_prufer_sequence(graph))


def prufer_decode(code, n=None):
    """The tree on [len(code) + 2] with the given Prüfer code"""
    code = [int(v) for v in code]
    if n is not None and n != len(code) + 2:
        raise ValueError(f"A Prüfer code for n={n} has {n - 2} entries, not {len(code)}")
    n = len(code) + 2
    if any(not 1 <= v <= n for v in code):
        raise ValueError(f"The entries of a Prüfer code for n={n} lie in [{n}], got {code}")
    graph = nx.from_prufer_sequence([v - 1 for v in code])
    return VertexLabeledTree(n, [(x + 1, y + 1) for x, y in graph.edges()])


@dataclass(frozen=True)
class VertexPartition:
    """An unordered pair {A, B} of complementary nonempty subsets of [n]"""

    parts: frozenset

    def __post_init__(self):
        parts = frozenset(frozenset(part) for part in self.parts)
        if len(parts) != 2 or not all(parts):
            raise ValueError(f"A vertex partition has two nonempty parts, got {parts}")
        a, b = parts
        if a & b:
            raise ValueError(f"The parts {sorted(a)} and {sorted(b)} intersect")
        object.__setattr__(self, "parts", parts)

    @property
    def index(self):
        return min(len(part) for part in self.parts)

    def __str__(self):
        parts = sorted(sorted(part) for part in self.parts)
        return "{" + ", ".join("{" + ",".join(map(str, part)) + "}" for part in parts) + "}"


def _parents(graph, root=1):
    """parent[v] is the neighbour of v on its path to the root"""
    return {v: u for u, v in nx.bfs_edges(graph, root)}


def relabel_S(t, check_product=True):
    """S: label each vertex v != 1 with 1 + the label of its edge towards 1,
    then forget the edge labels"""
    if not is_tree(t):
        raise NotATree(f"{t} is not a tree")
    if check_product:
        check_factorization(t, "up")
    else:
        warnings.warn(
            "relabel_S was called with check_product=False. The result is a tree, "
            "but S is only a bijection on the factorizations of (1,2,...,n)",
            category=UserWarning,
        )
    graph = to_networkx(t)
    new_label = {1: 1}
    for v, u in _parents(graph).items():
        (k,) = graph[u][v]
        new_label[v] = 1 + k
    return VertexLabeledTree(t.n, [(new_label[x], new_label[y]) for x, y in t])


def relabel_S_inverse(tree):
    """S⁻¹: label the edge towards 1 of vertex w with w - 1, then name the
    vertices by following the MIGTs: T_1 ends at 2, T_2 ends at 3, ..."""
    edges = [None] * (tree.n - 1)
    for w, u in _parents(tree.to_networkx()).items():
        edges[w - 2] = (u, w)
    graph = LabeledMultigraph(tree.n, edges)
    incidence = graph.incidence()
    new_label = {1: 1}
    current = 1
    for k in range(1, tree.n):
        current = migt(graph, current, incidence).end
        new_label[current] = k + 1
    return TranspositionSequence(tree.n, [(new_label[x], new_label[y]) for x, y in edges])


def bijection_B(s):
    """B = S ∘ D, from F↓n to the vertex-labeled trees on [n]"""
    check_factorization(s, "down")
    return relabel_S(algebraic_dual(s))


def bijection_B_inverse(tree):
    """B⁻¹ = D ∘ S⁻¹"""
    return algebraic_dual(relabel_S_inverse(tree))


def _dfs(n, direction):
    target = long_cycle(n, direction)
    entries = []
    # residual[v - 1]: image of v under the product still to be factored
    residual = list(target.image)
    component = list(range(n + 1))

    def extend():
        if len(entries) == n - 1:
            s = TranspositionSequence(n, entries)
            if product(s) == target:
                yield s
            return
        cycle_of = Permutation(residual).cycles(include_fixed_points=True)
        same_cycle = {v: i for i, cycle in enumerate(cycle_of) for v in cycle}
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                # a transposition lowers the distance to the identity only when it splits a cycle
                if same_cycle[a] != same_cycle[b] or component[a] == component[b]:
                    continue
                saved = component[:]
                merged, into = component[b], component[a]
                component[:] = [into if c == merged else c for c in component]
                residual[a - 1], residual[b - 1] = residual[b - 1], residual[a - 1]
                entries.append((a, b))
                yield from extend()
                entries.pop()
                residual[a - 1], residual[b - 1] = residual[b - 1], residual[a - 1]
                component[:] = saved

    if n == 1:
        yield TranspositionSequence(1, [])
        return
    yield from extend()


def _from_prufer(n, direction):
    if n == 1:
        yield TranspositionSequence(1, [])
        return
    for code in cartesian_product(range(1, n + 1), repeat=n - 2):
        t = relabel_S_inverse(prufer_decode(code))
        yield algebraic_dual(t) if direction == "down" else t


METHODS = {"dfs": _dfs, "prufer": _from_prufer}


def iter_factorizations(n, direction="down", method="dfs"):
    """Stream the members of F↓n (or F↑n) without materializing them"""
    _check_direction(direction)
    if method not in METHODS:
        raise ValueError(f"method should be one of {sorted(METHODS)}, not {method!r}")
    if n < 1:
        raise ValueError(f"n should be positive, not {n}")
    _check_cap(n)
    return METHODS[method](n, direction)


def iter_Fdown(n, method="dfs"):
    return iter_factorizations(n, "down", method)


def iter_Fup(n, method="dfs"):
    return iter_factorizations(n, "up", method)


def _enumerate(n, direction, method, cross_check):
    members = list(iter_factorizations(n, direction, method))
    if cross_check:
        other = "prufer" if method == "dfs" else "dfs"
        others = list(iter_factorizations(n, direction, other))
        if set(members) != set(others):
            raise RuntimeError(f"The {method} and {other} enumerations of n={n} differ")
    factorizations = FactorizationSet(n, direction, sorted(members, key=lambda s: s.entries))
    logger.info("Enumerated %d factorizations for n=%d (%s)", len(factorizations), n, direction)
    return factorizations


def enumerate_Fdown(n, method="dfs", cross_check=False):
    """F↓n, the factorizations of (n,...,2,1), sorted lexicographically"""
    return _enumerate(n, "down", method, cross_check)


def enumerate_Fup(n, method="dfs", cross_check=False):
    """F↑n, the factorizations of (1,2,...,n), sorted lexicographically"""
    return _enumerate(n, "up", method, cross_check)


def cayley_count(n):
    return 1 if n == 1 else n ** (n - 2)


def count_table(n_range, method="prufer"):
    """|F↓n|, |F↑n| and n^(n-2) for each n of the (inclusive) range"""
    low, high = n_range
    rows = []
    for n in range(low, high + 1):
        rows.append(
            {
                "n": n,
                "Fdown": sum(1 for _ in iter_Fdown(n, method)),
                "Fup": sum(1 for _ in iter_Fup(n, method)),
                "trees": cayley_count(n),
            }
        )
    return pd.DataFrame(rows).set_index("n")


def random_Fdown(n, rng=None):
    """A uniform random member of F↓n: a uniform Prüfer code mapped through B⁻¹"""
    if rng is None:
        rng = np.random.default_rng(options.seed)
    if n == 1:
        return TranspositionSequence(1, [])
    return bijection_B_inverse(prufer_decode(rng.integers(1, n + 1, size=n - 2)))


def _component_without(s, k):
    graph = to_networkx(s)
    t = s.entry(k)
    graph.remove_edge(t.x, t.y, key=k)
    return nx.node_connected_component(graph, t.x)


def fpart(s, k):
    """The two components of the tree s after removing the edge s_k"""
    if not is_tree(s):
        raise NotATree(f"{s} is not a tree")
    side = _component_without(s, k)
    return VertexPartition([side, set(range(1, s.n + 1)) - side])


def cpart(s, k):
    """Split the cyclic product (x, x_1, ..., x_a, y, y_1, ..., y_b) of the tree s
    at s_k = (x, y) into {x, ..., x_a} and {y, ..., y_b}"""
    if not is_tree(s):
        raise NotATree(f"{s} is not a tree")
    cycle = product(s)
    t = s.entry(k)
    side = set()
    v = t.x
    while v != t.y:
        side.add(v)
        v = cycle(v)
    return VertexPartition([side, set(range(1, s.n + 1)) - side])


def c_index(s, k):
    return cpart(s, k).index


def t_index(s, k):
    return fpart(s, k).index


def tree_t_indices(tree):
    """The T-Index of every edge of a vertex-labeled tree, sorted"""
    graph = tree.to_networkx()
    indices = []
    for x, y in sorted(tree.edges):
        graph.remove_edge(x, y)
        side = len(nx.node_connected_component(graph, x))
        indices.append(min(side, tree.n - side))
        graph.add_edge(x, y)
    return sorted(indices)


@dataclass(frozen=True)
class StructuralReport:
    sequence: TranspositionSequence
    failure: str = ""

    @property
    def ok(self):
        return not self.failure

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "ok" if self.ok else self.failure


def verify_structural(s):
    """Check fpart(s, k) = cpart(s', k) and cpart(s, k) = fpart(s', k) for every k,
    then that the C-Indices of s are the T-Indices of B(s)"""
    check_factorization(s, "down")
    d = algebraic_dual(s)
    for k in range(1, len(s) + 1):
        if fpart(s, k) != cpart(d, k):
            return StructuralReport(s, f"k={k}: fpart(s) = {fpart(s, k)} but cpart(dual) = {cpart(d, k)}")
        if cpart(s, k) != fpart(d, k):
            return StructuralReport(s, f"k={k}: cpart(s) = {cpart(s, k)} but fpart(dual) = {fpart(d, k)}")
    c_indices = sorted(c_index(s, k) for k in range(1, len(s) + 1))
    t_indices = tree_t_indices(bijection_B(s))
    if c_indices != t_indices:
        return StructuralReport(s, f"C-Indices {c_indices} differ from the T-Indices {t_indices} of B(s)")
    return StructuralReport(s)
