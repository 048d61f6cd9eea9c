import pytest
from hypothesis import given
from hypothesis import strategies as st

from permdual.errors import DimensionMismatch, ParseError
from permdual.fixtures import get_fixture
from permdual.mindbody import (
    MindBodyAssignment,
    MindBodySequence,
    body_swap,
    body_trace,
    mb_dual,
    mb_dual_of,
    mb_sequence,
    mind_swap,
)
from permdual.perm import Permutation, Transposition, TranspositionSequence, product, trajectory
from tests.strategies import permutations, sequences, transpositions


@pytest.fixture
def assignment():
    return MindBodyAssignment.parse("[1,2,3,4 / 3,2,4,1]")


def test_parse_and_print(assignment):
    assert assignment.body_below(1) == 3
    assert assignment.mind_above(1) == 4
    assert str(assignment) == "[1,2,3,4 / 3,2,4,1]"


def test_row_order_is_irrelevant():
    assert MindBodyAssignment.from_rows([4, 1, 2, 3], [1, 3, 2, 4]) == MindBodyAssignment.parse("[1,2,3,4 / 3,2,4,1]")


@pytest.mark.parametrize("text", ["1,2 / 2,1", "[1,2 / 2]", "[1,2 / 1,1]"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        MindBodyAssignment.parse(text)


def test_parse_error_type():
    with pytest.raises(ParseError):
        MindBodyAssignment.parse("1,2 / 2,1")


def test_mind_swap_exchanges_the_bodies_of_two_minds(assignment):
    swapped = mind_swap(assignment, Transposition(1, 3))
    assert swapped.body_below(1) == 4
    assert swapped.body_below(3) == 3
    assert swapped.body_of == Transposition(1, 3).as_permutation(4) * assignment.body_of


def test_body_swap_exchanges_the_minds_of_two_bodies(assignment):
    swapped = body_swap(assignment, Transposition(1, 3))
    assert swapped.mind_above(1) == assignment.mind_above(3)
    assert swapped.mind_above(3) == assignment.mind_above(1)
    assert swapped.body_of == assignment.body_of * Transposition(1, 3).as_permutation(4)


@given(sequences())
def test_body_swaps_of_the_identity_multiply_to_the_product(s):
    assert body_swap(MindBodyAssignment.identity(s.n), s).body_of == product(s)


@given(sequences())
def test_mind_swaps_of_the_identity_multiply_to_the_inverse_product(s):
    assert mind_swap(MindBodyAssignment.identity(s.n), s).body_of == product(s).inverse()


def test_mb_sequence_of_the_worked_example():
    assert mb_sequence(get_fixture("four_vertex")) == get_fixture("four_vertex_mind_body")


def test_mb_sequence_checks_single_swaps():
    identity = MindBodyAssignment.identity(4)
    with pytest.raises(ValueError, match="one body swap"):
        MindBodySequence([identity, MindBodyAssignment(Permutation((2, 1, 4, 3)))])
    with pytest.raises(ValueError, match="identity"):
        MindBodySequence([MindBodyAssignment(Permutation((2, 1, 3, 4)))])


def test_mb_dual_of_the_worked_example():
    assert mb_dual(get_fixture("four_vertex")) == get_fixture("four_vertex_dual")


def test_mb_dual_of(assignment):
    # bodies 1 and 3 hold the minds 4 and 1
    assert mb_dual_of(assignment, Transposition(1, 3)) == Transposition(1, 4)
    with pytest.raises(DimensionMismatch):
        mb_dual_of(assignment, Transposition(1, 5))


def test_mb_dual_of_a_single_transposition():
    s = TranspositionSequence(3, [(1, 3)])
    assert mb_dual(s) == s


@given(sequences())
def test_mb_dual_is_an_involution(s):
    assert mb_dual(mb_dual(s)) == s


@given(sequences())
def test_body_trace_is_the_trajectory_of_the_mind(s):
    for mind in range(1, s.n + 1):
        assert body_trace(s, mind) == trajectory(s, mind)


@given(st.data())
def test_swapping_twice_gives_back_the_assignment(data):
    assignment = MindBodyAssignment(data.draw(permutations(min_n=2)))
    t = Transposition(*data.draw(transpositions(assignment.n)))
    assert mind_swap(mind_swap(assignment, t), t) == assignment
    assert body_swap(body_swap(assignment, t), t) == assignment


@given(st.data())
def test_mind_and_body_swaps_of_the_identity_agree(data):
    n = data.draw(st.integers(2, 9))
    t = Transposition(*data.draw(transpositions(n)))
    identity = MindBodyAssignment.identity(n)
    assert mind_swap(identity, t) == body_swap(identity, t)


@given(sequences())
def test_body_swaps_are_mind_swaps_of_the_dual(s):
    identity = MindBodyAssignment.identity(s.n)
    assert body_swap(identity, s) == mind_swap(identity, mb_dual(s))


def test_body_swaps_of_other_assignments_are_not_mind_swaps_of_the_dual():
    assignment = MindBodyAssignment(Permutation((2, 1, 3)))
    s = TranspositionSequence(3, [(1, 3)])
    assert body_swap(assignment, s).body_of == Permutation((2, 3, 1))
    assert mind_swap(assignment, mb_dual(s)).body_of == Permutation((3, 1, 2))
