"""Tests for the bundled link diagram table."""

import os

import pytest

from powerbracket.bracket import load_bundled
from powerbracket.diagram import link_components, serialize, writhe
from powerbracket.homset import counting_invariant
from powerbracket.linktable import (
    NAMES,
    UnknownLink,
    list_links,
    load,
    load_move_diagram,
)


def test_list_is_sorted_and_complete():
    names = list_links()
    assert names == sorted(NAMES)
    assert "L7n2" in names
    assert "L2a1" in names


def test_every_entry_loads_and_validates():
    for name in list_links():
        e = load(name)
        assert e.name == name
        assert e.diagram.name == name
        assert link_components(e.diagram) == e.components
        assert e.components >= 2  # links only, no knots


def test_crossing_counts_match_names():
    for name in list_links():
        expected = int(name[1])
        assert len(load(name).diagram.crossings) == expected, name


def test_l4a1_shape():
    d = load("L4a1").diagram
    assert len(d.crossings) == 4
    assert link_components(d) == 2
    assert abs(writhe(d)) == 4


def test_l6a4_colorings():
    d = load("L6a4").diagram
    assert link_components(d) == 3
    X = load_bundled("z5_3elt").biquandle
    assert counting_invariant(d, X) == 27


def test_unknown_link():
    with pytest.raises(UnknownLink):
        load("L9a1")


def test_link_dir_override(tmp_path, monkeypatch):
    # an override directory takes precedence over the bundled data
    d = load("L2a1").diagram
    (tmp_path / "L2a1.txt").write_text(serialize(d) + "loop\n")
    monkeypatch.setenv("POWERBRACKET_LINK_DIR", str(tmp_path))
    with pytest.raises(ValueError):
        load("L2a1")  # extra loop changes the component count


def test_move_diagrams_load():
    for name in ("unknot", "kink_pos", "kink_neg", "unlink2", "poke",
                 "rthree_a", "rthree_b"):
        load_move_diagram(name)
