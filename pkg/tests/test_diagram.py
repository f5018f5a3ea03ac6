"""Tests for diagram parsing, writhe, and Kauffman-state component tracing."""

import itertools

import pytest

from powerbracket.diagram import (
    ORIENTED,
    TRACE,
    Crossing,
    LinkDiagram,
    link_components,
    mirror,
    parse,
    serialize,
    state_components,
    writhe,
)

# Hopf link as closure of two positive crossings: semiarcs 1..4.
HOPF = """\
link hopf
crossing + 1 2 4 3
crossing + 4 3 1 2
"""


def test_parse_hopf():
    d = parse(HOPF)
    assert d.name == "hopf"
    assert d.semiarcs == (1, 2, 3, 4)
    assert writhe(d) == 2
    assert link_components(d) == 2


def test_parse_endpoint_error():
    with pytest.raises(ValueError):
        parse("link bad\ncrossing + 1 2 3 3\n")


def test_parse_bad_sign():
    with pytest.raises(ValueError):
        parse("link bad\ncrossing * 1 2 3 4\ncrossing + 1 2 3 4\n")


def test_parse_loop_only():
    d = parse("link unknot\nloop\n")
    assert len(d.crossings) == 0 and d.free_loops == 1
    assert link_components(d) == 1
    assert writhe(d) == 0


def test_mirror_negates_writhe():
    d = parse(HOPF)
    assert writhe(mirror(d)) == -2
    assert mirror(mirror(d)) == d


def test_state_components_hopf():
    d = parse(HOPF)
    both_oriented = state_components(d, (ORIENTED, ORIENTED))
    assert len(both_oriented) == 2
    both_trace = state_components(d, (TRACE, TRACE))
    assert len(both_trace) == 2
    mixed = state_components(d, (ORIENTED, TRACE))
    assert len(mixed) == 1


def test_state_components_partition():
    d = parse(HOPF)
    for choice in itertools.product((ORIENTED, TRACE), repeat=2):
        comps = state_components(d, choice)
        all_ids = sorted(s for comp in comps for s in comp.semiarcs)
        assert all_ids == list(d.semiarcs)


def test_flipping_one_tag_changes_count_by_one():
    d = parse(HOPF)
    for choice in itertools.product((ORIENTED, TRACE), repeat=2):
        base = len(state_components(d, choice))
        for i in range(2):
            flipped = list(choice)
            flipped[i] = TRACE if flipped[i] == ORIENTED else ORIENTED
            assert abs(len(state_components(d, tuple(flipped))) - base) == 1


def test_free_loops_are_singletons():
    d = LinkDiagram("u2", (), free_loops=2)
    comps = state_components(d, ())
    assert len(comps) == 2
    assert all(comp.semiarcs == frozenset() for comp in comps)
    assert [comp.loop_index for comp in comps] == [0, 1]


def test_choice_length_checked():
    with pytest.raises(ValueError):
        state_components(parse(HOPF), (ORIENTED,))


def test_serialize_roundtrip():
    d = parse(HOPF)
    assert parse(serialize(d)) == d
    loops = LinkDiagram("x", (Crossing(-1, 1, 2, 2, 1),), free_loops=1)
    assert parse(serialize(loops)) == loops


def test_crossing_sign_validated():
    with pytest.raises(ValueError):
        Crossing(0, 1, 2, 3, 4)
