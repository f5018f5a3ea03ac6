"""Tests for coloring enumeration and the counting invariant."""

from powerbracket.biquandle import constant_action, validate
from powerbracket.diagram import LinkDiagram, parse
from powerbracket.homset import Coloring, counting_invariant, enumerate_colorings, is_valid

SWAP = constant_action((2, 1))

HOPF = parse("link hopf\ncrossing + 1 2 4 3\ncrossing + 4 3 1 2\n")

# Trefoil as a 3-crossing braid closure; 1-component.
TREFOIL = parse(
    "link trefoil\n"
    "crossing + 1 2 6 5\n"
    "crossing + 6 5 4 3\n"
    "crossing + 4 3 1 2\n"
)


def test_hopf_count_with_swap():
    assert counting_invariant(HOPF, SWAP) == 4


def test_colorings_satisfy_constraints():
    for c in enumerate_colorings(HOPF, SWAP):
        assert is_valid(HOPF, SWAP, c)


def test_deterministic_lexicographic_order():
    cs = enumerate_colorings(HOPF, SWAP)
    vectors = [tuple(v for _, v in c.semiarcs) for c in cs]
    assert vectors == sorted(vectors)
    assert vectors[0][0] == 1


def test_free_loop_unconstrained():
    d = parse("link unknot\nloop\n")
    X = constant_action((2, 3, 1))
    cs = enumerate_colorings(d, X)
    assert len(cs) == 3
    assert [c.loops for c in cs] == [(1,), (2,), (3,)]


def test_disjoint_union_product_law():
    d2 = LinkDiagram("u2", (), free_loops=2)
    X = constant_action((2, 3, 1))
    assert counting_invariant(d2, X) == 9


def test_diagonal_coloring_on_knot():
    # Identity biquandle fixes every element; constant colorings survive.
    X = constant_action((1, 2))
    cs = enumerate_colorings(TREFOIL, X)
    constants = [c for c in cs if len({v for _, v in c.semiarcs}) == 1]
    assert len(constants) == 2


def test_empty_link():
    d = LinkDiagram("empty", ())
    cs = enumerate_colorings(d, SWAP)
    assert cs == [Coloring((), ())]


def test_coloring_accessors():
    c = enumerate_colorings(HOPF, SWAP)[0]
    assert c[1] == c.as_dict()[1]
