"""Tests for the power-bracket verifier, the constant-delta lift, and I/O."""

import pytest

from powerbracket.biquandle import validate
from powerbracket.bracket import (
    BUNDLED_BRACKETS,
    InconsistentDelta,
    PowerBracket,
    from_standard,
    load_bundled,
    parse_bracket,
    serialize_bracket,
    verify,
)
from powerbracket.modring import NotAUnit, RingZm


def test_bundled_brackets_verify_clean():
    for name in BUNDLED_BRACKETS:
        assert verify(load_bundled(name)) == [], name


def test_unknown_bundled_name():
    with pytest.raises(KeyError):
        load_bundled("z9_5elt")


def _replace(b, label, x, y, value):
    tables = {lab: [list(r) for r in getattr(b, lab)] for lab in ("A", "B", "Abar", "Bbar")}
    tables[label][x][y] = value
    return PowerBracket(b.biquandle, b.ring, tables["A"], tables["B"],
                        tables["Abar"], tables["Bbar"], b.w, b.delta)


def test_perturbed_bracket_fails():
    b = load_bundled("z4_2elt")
    m = b.ring.modulus
    # scan single-entry perturbations until the verifier rejects one
    for label in ("A", "B", "Abar", "Bbar"):
        for x in range(b.biquandle.n):
            for y in range(b.biquandle.n):
                old = getattr(b, label)[x][y]
                bad = _replace(b, label, x, y, (old + 1) % m)
                report = verify(bad)
                if report:
                    assert report[0].left != report[0].right
                    return
    pytest.fail("no single-entry perturbation was rejected")


def test_first_violation_mode():
    b = load_bundled("z4_2elt")
    bad = _replace(b, "A", 0, 0, (b.A[0][0] + 1) % 4)
    full = verify(bad)
    assert len(full) > 1
    assert verify(bad, first_violation=True) == full[:1]


def test_delta_of_empty_set_is_inert():
    b = load_bundled("z4_2elt")
    shifted = PowerBracket(b.biquandle, b.ring, b.A, b.B, b.Abar, b.Bbar, b.w,
                           (1,) + b.delta[1:])
    assert verify(shifted) == []


def _one_element():
    return validate([[1]], [[1]])


def test_from_standard_delta_formula():
    X = _one_element()
    b = from_standard(X, RingZm(5), [[2]], [[1]], 1)
    assert b.delta == (0, 0)  # -2*1 - 3*1 = -5 = 0 mod 5
    b = from_standard(X, RingZm(5), [[1]], [[1]], 1)
    assert b.delta == (3, 3)  # -1 - 1 = 3 mod 5


def test_from_standard_inverse_tables():
    X = _one_element()
    b = from_standard(X, RingZm(7), [[3]], [[2]], 2)
    assert b.Abar == ((5,),)  # 3 * 5 = 15 = 1 mod 7
    assert b.Bbar == ((4,),)


def test_from_standard_inconsistent_delta():
    swap = validate([[2, 2], [1, 1]], [[2, 2], [1, 1]])
    with pytest.raises(InconsistentDelta):
        from_standard(swap, RingZm(5), [[1, 1], [1, 1]], [[1, 2], [1, 1]], 1)


def test_from_standard_requires_units():
    X = _one_element()
    with pytest.raises(NotAUnit):
        from_standard(X, RingZm(6), [[2]], [[1]], 1)


def test_roundtrip_all_bundled():
    for name in BUNDLED_BRACKETS:
        b = load_bundled(name)
        assert parse_bracket(serialize_bracket(b)) == b


def test_parse_rejects_non_unit_w():
    text = serialize_bracket(load_bundled("z4_2elt")).replace("ring 4", "ring 6")
    text = text.replace("w 3", "w 2")
    with pytest.raises(NotAUnit):
        parse_bracket(text)


def test_parse_rejects_short_delta():
    text = serialize_bracket(load_bundled("z4_2elt"))
    text = text.replace("delta 3 3 3 3", "delta 3 3 3")
    with pytest.raises(ValueError):
        parse_bracket(text)


def test_verifier_is_deterministic():
    b = load_bundled("z4_2elt")
    bad = _replace(b, "B", 1, 0, (b.B[1][0] + 2) % 4)
    assert verify(bad) == verify(bad)
