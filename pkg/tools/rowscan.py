"""Compute invariant rows for candidate diagrams under the three brackets."""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from powerbracket.bracket import parse_bracket
from powerbracket.statesum import invariant, to_polynomial
from powerbracket.diagram import link_components

import tanglelib as tl

_DATA = os.path.join(os.path.dirname(__file__), "..", "src", "powerbracket",
                     "data", "brackets")


def _load(name):
    with open(os.path.join(_DATA, name + ".bkt")) as fh:
        return parse_bracket(fh.read())


BRACKETS = [_load(n) for n in ("z5_2elt", "z5_3elt", "z6_4elt")]


def rows(d):
    return tuple(to_polynomial(invariant(d, b.biquandle, b)) for b in BRACKETS)


def report(label, joins, crossings):
    import geomlib
    seen = {}
    det = None
    for geo, loops in tl.orientations(joins, crossings):
        if det is None:
            det = geomlib.determinant(geo)
        d = geomlib.to_diagram(label, geo, loops)
        r = rows(d)
        if r not in seen:
            seen[r] = d
    for r, d in seen.items():
        print(f"{label}: n={len(d.crossings)} comps={link_components(d)} "
              f"det={det} rows={r}")
    print()


def main():
    cases = [
        ("hopf [2]", lambda i: tl.rational(i, [2])),
        ("T24 [4]", lambda i: tl.rational(i, [4])),
        ("wh [2,1,2]", lambda i: tl.rational(i, [2, 1, 2])),
        ("r6 [6]", lambda i: tl.rational(i, [6])),
        ("r33 [3,3]", lambda i: tl.rational(i, [3, 3])),
        ("r222 [2,2,2]", lambda i: tl.rational(i, [2, 2, 2])),
        ("P(2,2,2)", lambda i: tl.pretzel(i, [2, 2, 2])),
        ("r412 [4,1,2]", lambda i: tl.rational(i, [4, 1, 2])),
        ("r232 [2,3,2]", lambda i: tl.rational(i, [2, 3, 2])),
        ("r2113 [2,1,1,3]", lambda i: tl.rational(i, [2, 1, 1, 3])),
        ("P(2,2,3)", lambda i: tl.pretzel(i, [2, 2, 3])),
        ("P(2,2,2,1)", lambda i: tl.pretzel(i, [2, 2, 2, 1])),
        ("P(2,2,-3)", lambda i: tl.pretzel(i, [2, 2, -3])),
        ("P(-2,-2,3)", lambda i: tl.pretzel(i, [-2, -2, 3])),
    ]
    for label, build in cases:
        ids = tl._Ids()
        t = build(ids)
        for closure in ("N", "D"):
            joins, crossings = t.numerator() if closure == "N" else t.denominator()
            # joins mutate nothing; safe to reuse t
            try:
                report(f"{label} {closure}", joins, crossings)
            except Exception as e:
                print(f"{label} {closure}: ERROR {e}")


if __name__ == "__main__":
    main()
