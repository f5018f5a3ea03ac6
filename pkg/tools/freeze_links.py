"""Generate the bundled link diagram files and Reidemeister move pairs.

Each link gets the orientation class of its construction whose invariant rows
match the reference tables; ties broken by smallest serialization.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import geomlib
import tanglelib as tl
from rowscan import rows
from powerbracket.diagram import LinkDiagram, link_components, serialize, writhe

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "powerbracket",
                   "data", "links")
MOVES = os.path.join(os.path.dirname(__file__), "..", "src", "powerbracket",
                     "data", "moves")


def vrational(ids, terms):
    t = tl.Tangle.infinity(ids)
    kind = "v"
    for a in terms:
        t.vtwist(a) if kind == "v" else t.htwist(a)
        kind = "h" if kind == "v" else "v"
    return t


def montesinos(ids, cols):
    t = None
    for ct in cols:
        p = vrational(ids, ct)
        t = p if t is None else t.hjoin(p)
    return t


def tangle_candidates(name, build, closure):
    ids = tl._Ids()
    t = build(ids)
    joins, crossings = t.numerator() if closure == "N" else t.denominator()
    out = []
    for geo, loops in tl.orientations(joins, crossings):
        out.append((geomlib.to_diagram(name, geo, loops), geo))
    return out


def braid_candidates(name, k, word):
    geo, loops = geomlib.braid_geo(k, word)
    return [(geomlib.to_diagram(name, geo, loops), geo)]


# name -> (candidate builder, target rows, extra filter)
TARGETS = {
    "L2a1": (lambda: tangle_candidates("L2a1", lambda i: tl.rational(i, [2]), "N"),
             ("2u + 2u^3", "1 + 2u + 2u^2", "2u^2 + 4u^3 + 2u^4"), None),
    "L4a1": (lambda: tangle_candidates("L4a1", lambda i: tl.rational(i, [4]), "N"),
             ("2u + 2u^4", "5 + 2u + 2u^4", "8 + 4u^3 + 4u^4"),
             lambda d: writhe(d) == 4),
    "L5a1": (lambda: tangle_candidates("L5a1", lambda i: tl.rational(i, [2, 1, 2]), "N"),
             ("4u", "5 + 4u", "8 + 4u^3 + 4u^4"), None),
    "L6a1": (lambda: tangle_candidates("L6a1", lambda i: tl.rational(i, [2, 2, 2]), "N"),
             ("2u + 2u^4", "5 + 2u + 2u^4", "8 + 4u^3 + 4u^4"), None),
    "L6a2": (lambda: tangle_candidates("L6a2", lambda i: tl.rational(i, [3, 3]), "D"),
             ("2u + 2u^2", "1 + 2u + 2u^3", "2u^2 + 4u^3 + 2u^4"), None),
    "L6a3": (lambda: tangle_candidates("L6a3", lambda i: tl.rational(i, [6]), "N"),
             ("2u + 2u^2", "1 + 2u + 2u^3", "2u^2 + 4u^3 + 2u^4"), None),
    "L6a4": (lambda: braid_candidates("L6a4", 3, (1, -2, 1, -2, 1, -2)),
             ("8u^4", "19 + 8u^4", "48 + 8u^3 + 8u^4"), None),
    "L6a5": (lambda: tangle_candidates("L6a5", lambda i: tl.pretzel(i, [2, 2, 2]), "N"),
             ("6u + 2u^4", "7 + 6u + 2u^4", "8u^3 + 8u^4"), None),
    "L6n1": (lambda: braid_candidates("L6n1", 3, (1, 2, 1, 2, 1, 2)),
             ("6u + 2u^4", "7 + 6u + 2u^4", "8u^3 + 8u^4"), None),
    "L7a1": (lambda: tangle_candidates("L7a1", lambda i: tl.rational(i, [2, 3, 2]), "N"),
             ("4u", "5 + 4u", "8 + 4u^3 + 4u^4"), None),
    "L7a2": (lambda: tangle_candidates(
                 "L7a2", lambda i: montesinos(i, [[2], [2], [1, 1, 1]]), "N"),
             ("2u + 2u^4", "5 + 2u + 2u^4", "8 + 4u^3 + 4u^4"), None),
    "L7a3": (lambda: tangle_candidates("L7a3", lambda i: tl.pretzel(i, [2, 2, 3]), "N"),
             ("4u", "5 + 4u", "8 + 4u^3 + 4u^4"), None),
    "L7a4": (lambda: braid_candidates("L7a4", 3, (1, 1, -2, 1, -2, 1, -2)),
             ("4u", "5 + 4u", "8 + 4u^3 + 4u^4"), None),
    "L7a5": (lambda: tangle_candidates("L7a5", lambda i: tl.rational(i, [4, 1, 2]), "N"),
             ("2u + 2u^3", "1 + 2u + 2u^2", "2u^2 + 4u^3 + 2u^4"), None),
    "L7a6": (lambda: tangle_candidates("L7a6", lambda i: tl.rational(i, [2, 1, 1, 3]), "D"),
             ("2u + 2u^3", "1 + 2u + 2u^2", "2u^2 + 4u^3 + 2u^4"), None),
    "L7a7": (lambda: tangle_candidates("L7a7", lambda i: tl.pretzel(i, [2, 2, 2, 1]), "N"),
             ("6u + 2u^4", "7 + 6u + 2u^4", "8u^3 + 8u^4"), None),
    "L7n1": (lambda: braid_candidates("L7n1", 3, (1, 1, 1, 1, 2, 2, 2)),
             ("2u + 2u^4", "5 + 2u + 2u^4", "8 + 4u^3 + 4u^4"), None),
    "L7n2": (lambda: tangle_candidates("L7n2", lambda i: tl.pretzel(i, [2, 2, -3]), "N"),
             ("4u", "5 + 4u", "8 + 4u^3 + 4u^4"), None),
}


def main():
    os.makedirs(OUT, exist_ok=True)
    os.makedirs(MOVES, exist_ok=True)
    for name, (cand, target, extra) in sorted(TARGETS.items()):
        picks = []
        det = None
        for d, geo in cand():
            if det is None:
                det = geomlib.determinant(geo)
            if rows(d) != tuple(target):
                continue
            if extra and not extra(d):
                continue
            picks.append(serialize(d))
        if not picks:
            print(f"{name}: NO MATCH")
            continue
        text = sorted(picks)[0]
        with open(os.path.join(OUT, name + ".txt"), "w") as fh:
            fh.write(text)
        d = None
        print(f"{name}: det={det} frozen ({len(picks)} matching orientations)")

    # Reidemeister pairs
    def write(fname, text):
        with open(os.path.join(MOVES, fname), "w") as fh:
            fh.write(text)

    write("unknot.txt", "link unknot\nloop\n")
    write("kink_pos.txt", serialize(geomlib.to_diagram("kink_pos", [(1, 1, 2, 2, 1)])))
    write("kink_neg.txt", serialize(geomlib.to_diagram("kink_neg", [(-1, 1, 2, 2, 1)])))
    write("unlink2.txt", "link unlink2\nloop\nloop\n")
    # reverse-II poke of the 2-component unlink
    poke = [(1, 1, 2, 3, 4), (-1, 3, 4, 1, 2)]
    write("poke.txt", serialize(geomlib.to_diagram("poke", poke)))
    write("rthree_a.txt", serialize(geomlib.braid_closure("rthree_a", 3, (1, 2, 1))))
    write("rthree_b.txt", serialize(geomlib.braid_closure("rthree_b", 3, (2, 1, 2))))
    print("moves written")


if __name__ == "__main__":
    main()
