"""Tests for biquandle validation, constructors, and orbits."""

import itertools

import pytest

from powerbracket.biquandle import (
    InvalidBiquandle,
    alexander,
    check_axioms,
    constant_action,
    orbit_decomposition,
    parse,
    serialize,
    sub_biquandle,
    validate,
)
from powerbracket.modring import NotAUnit

SWAP2 = ((2, 2), (1, 1))

# 3-element tables with one fixed element and a swapped pair.
U3 = ((2, 2, 1), (1, 1, 2), (3, 3, 3))
O3 = ((2, 2, 2), (1, 1, 1), (3, 3, 3))

# 4-element tables with two interacting swapped pairs.
U4 = ((2, 2, 2, 2), (1, 1, 1, 1), (3, 3, 4, 4), (4, 4, 3, 3))
O4 = ((2, 2, 1, 1), (1, 1, 2, 2), (4, 4, 4, 4), (3, 3, 3, 3))


def test_smallest_nontrivial_biquandle_is_valid():
    assert check_axioms(SWAP2, SWAP2) == []


def test_identity_tables_valid():
    n = 3
    t = tuple(tuple(x for _ in range(n)) for x in range(1, n + 1))
    assert check_axioms(t, t) == []


def test_axiom1_violation_reported():
    bad_U = ((1, 2), (1, 1))
    report = check_axioms(bad_U, SWAP2)
    assert any(v.axiom == "idem" and v.witness == (1,) for v in report)


def test_invertibility_violation_reported():
    # Column 1 of U is constant: not a bijection.
    U = ((1, 1), (1, 2))
    O = ((1, 1), (1, 2))
    report = check_axioms(U, O)
    assert any(v.axiom == "invertible" for v in report)


def test_validate_raises_with_report():
    with pytest.raises(InvalidBiquandle) as e:
        validate(((1, 2), (1, 1)), SWAP2)
    assert e.value.violations


def test_malformed_tables():
    with pytest.raises(ValueError):
        validate(((1, 2),), SWAP2)
    with pytest.raises(ValueError):
        validate(((0, 2), (1, 1)), SWAP2)


def test_constant_action_matches_printed_tables():
    X = constant_action((2, 1))
    assert X.U == SWAP2 and X.O == SWAP2


def test_constant_action_identity():
    X = constant_action((1, 2, 3))
    assert all(X.under(x, y) == x for x in X.elements for y in X.elements)


def test_constant_action_rejects_non_permutation():
    with pytest.raises(ValueError):
        constant_action((1, 1))


def test_constant_action_always_valid_exhaustive():
    for n in range(1, 6):
        for sigma in itertools.permutations(range(1, n + 1)):
            constant_action(sigma)  # raises if invalid


def test_alexander_valid_for_all_unit_pairs():
    for m in range(2, 8):
        import math

        for s in range(m):
            for t in range(m):
                if math.gcd(s, m) == 1 and math.gcd(t, m) == 1:
                    alexander(m, s, t)  # raises if invalid


def test_alexander_trivial_case():
    X = alexander(2, 1, 1)
    assert all(X.under(x, y) == x == X.over(x, y) for x in X.elements for y in X.elements)


def test_alexander_rejects_nonunit():
    with pytest.raises(NotAUnit):
        alexander(6, 2, 1)


def test_alexander_tables_encode_formula():
    X = alexander(5, 1, 4)
    for x in range(5):
        for y in range(5):
            assert X.under(x + 1, y + 1) == (4 * x + 2 * y) % 5 + 1
            assert X.over(x + 1, y + 1) == x % 5 + 1


def test_pair_map_invertible():
    for X in (validate(SWAP2, SWAP2), validate(U3, O3), validate(U4, O4)):
        images = {(X.over(y, x), X.under(x, y)) for x in X.elements for y in X.elements}
        assert len(images) == X.n * X.n


def test_orbit_decomposition_three_element():
    assert orbit_decomposition(validate(U3, O3)) == [[1, 2], [3]]


def test_orbit_decomposition_four_element():
    assert orbit_decomposition(validate(U4, O4)) == [[1, 2], [3, 4]]


def test_orbit_decomposition_trivial():
    X = constant_action((1, 2, 3, 4))
    assert orbit_decomposition(X) == [[1], [2], [3], [4]]


def test_orbit_blocks_closed():
    for X in (validate(U3, O3), validate(U4, O4)):
        for block in orbit_decomposition(X):
            members = set(block)
            for x in block:
                for y in X.elements:
                    assert X.under(x, y) in members
                    assert X.over(x, y) in members


def test_sub_biquandle():
    X = validate(U3, O3)
    sub, back = sub_biquandle(X, [1, 2])
    assert sub.U == SWAP2 and sub.O == SWAP2
    assert back == {1: 1, 2: 2}


def test_sub_biquandle_rejects_open_block():
    X = validate(U4, O4)
    with pytest.raises(ValueError):
        sub_biquandle(X, [1, 3])


def test_parse_serialize_roundtrip():
    X = validate(U4, O4)
    assert parse(serialize(X)) == X


def test_parse_comments_and_errors():
    text = "# a comment\nbiquandle 2\n2 2\n1 1\n2 2\n1 1\n"
    assert parse(text).U == SWAP2
    with pytest.raises(ValueError):
        parse("biquandle 2\n2 2\n1 1\n2 2\n")
    with pytest.raises(ValueError):
        parse("2\n2 2\n1 1\n2 2\n1 1\n")
