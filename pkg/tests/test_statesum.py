"""Tests for state-sum evaluation, the multiset invariant, and formatting."""

from powerbracket.biquandle import validate
from powerbracket.bracket import BUNDLED_BRACKETS, from_standard, load_bundled
from powerbracket.diagram import LinkDiagram
from powerbracket.homset import Coloring, counting_invariant, enumerate_colorings
from powerbracket.linktable import list_links, load, load_move_diagram
from powerbracket.modring import RingZm
from powerbracket.statesum import InvariantResult, evaluate, invariant, to_polynomial

from oracles import kauffman_state_sum


def test_worked_example_colorings_and_multiset():
    b = load_bundled("z6_4elt")
    d = load("L4a1").diagram
    assert counting_invariant(d, b.biquandle) == 16
    r = invariant(d, b.biquandle, b)
    assert r.as_dict() == {0: 8, 3: 4, 4: 4}
    assert to_polynomial(r) == "8 + 4u^3 + 4u^4"


def test_two_loop_unlink_value():
    b = load_bundled("z5_3elt")
    d = LinkDiagram("unlink2", (), 2)
    for x in b.biquandle.elements:
        for y in b.biquandle.elements:
            c = Coloring((), (x, y))
            expected = b.delta[1 << (x - 1)] * b.delta[1 << (y - 1)] % 5
            assert evaluate(d, c, b) == expected


def test_empty_link_value():
    b = load_bundled("z4_2elt")
    d = LinkDiagram("empty", (), 0)
    r = invariant(d, b.biquandle, b)
    assert r.as_dict() == {1: 1}  # one empty coloring, empty product


def test_polynomial_formatting():
    assert to_polynomial(InvariantResult(((0, 8), (3, 4), (4, 4)), 6)) == "8 + 4u^3 + 4u^4"
    assert to_polynomial(InvariantResult(((1, 2), (3, 2)), 5)) == "2u + 2u^3"
    assert to_polynomial(InvariantResult(((2, 1),), 5)) == "u^2"
    assert to_polynomial(InvariantResult((), 5)) == "0"


def test_total_multiplicity_matches_counting_invariant():
    for bracket_name in BUNDLED_BRACKETS:
        b = load_bundled(bracket_name)
        for link in ("L2a1", "L6a4", "L7a7"):
            d = load(link).diagram
            r = invariant(d, b.biquandle, b)
            assert r.total == counting_invariant(d, b.biquandle)


MOVE_PAIRS = (
    ("unknot", "kink_pos"),
    ("unknot", "kink_neg"),
    ("unlink2", "poke"),
    ("rthree_a", "rthree_b"),
)


def test_reidemeister_move_pairs():
    for bracket_name in BUNDLED_BRACKETS:
        b = load_bundled(bracket_name)
        for before, after in MOVE_PAIRS:
            d1 = load_move_diagram(before)
            d2 = load_move_diagram(after)
            r1 = invariant(d1, b.biquandle, b)
            r2 = invariant(d2, b.biquandle, b)
            assert r1.multiset == r2.multiset, (bracket_name, before, after)


def test_kauffman_specialization_against_oracle():
    X = validate([[1]], [[1]])
    cases = ((5, 2, 1, 1), (5, 1, 1, 3), (7, 3, 2, 2), (6, 1, 1, 5))
    for m, a, bb, w in cases:
        b = from_standard(X, RingZm(m), [[a]], [[bb]], w)
        for name in list_links():
            d = load(name).diagram
            (c,) = enumerate_colorings(d, X)
            assert evaluate(d, c, b) == kauffman_state_sum(
                d, a, bb, w, b.delta[0], m
            ), (m, a, bb, w, name)
