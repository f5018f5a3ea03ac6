"""Dev-time rational-tangle and pretzel diagram builder.

Crossings are built unoriented: a counterclockwise port cycle (q0, q1, q2, q3)
where {q0, q2} is the understrand.  After closure, strands are traced, each
component is given an orientation, and signs fall out of the port geometry:
with ports in ccw order, a crossing is positive iff the over strand enters at
the ccw predecessor of the understrand's entry port.
"""

import os
import sys
from itertools import product

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from geomlib import to_diagram  # noqa: E402


class _Ids:
    def __init__(self):
        self.n = 0

    def new(self):
        self.n += 1
        return self.n


class Tangle:
    """Four-ended tangle: endpoint port ids nw, ne, sw, se plus crossings."""

    def __init__(self, ids, nw, ne, sw, se, crossings=()):
        self.ids = ids
        self.nw, self.ne, self.sw, self.se = nw, ne, sw, se
        self.crossings = list(crossings)  # (q0,q1,q2,q3) ccw, under = {q0,q2}
        self.joins = []  # port-port identifications

    @classmethod
    def zero(cls, ids):
        # two horizontal strands: nw-ne and sw-se
        nw, ne, sw, se = (ids.new() for _ in range(4))
        t = cls(ids, nw, ne, sw, se)
        t.joins += [(nw, ne), (sw, se)]
        return t

    @classmethod
    def infinity(cls, ids):
        # two vertical strands: nw-sw and ne-se
        nw, ne, sw, se = (ids.new() for _ in range(4))
        t = cls(ids, nw, ne, sw, se)
        t.joins += [(nw, sw), (ne, se)]
        return t

    def htwist(self, n):
        """n twists on the right side (ne, se ends); sign of n picks the type."""
        for _ in range(abs(n)):
            lt, lb = self.ne, self.se
            rt, rb = self.ids.new(), self.ids.new()
            # strands: lt-rb and lb-rt; ccw cycle (lb, rb, rt, lt)
            if n > 0:
                self.crossings.append((lb, rb, rt, lt))  # lb-rt under
            else:
                self.crossings.append((rb, rt, lt, lb))  # lt-rb under
            self.ne, self.se = rt, rb
        return self

    def vtwist(self, n):
        """n twists at the bottom (sw, se ends)."""
        for _ in range(abs(n)):
            tl, tr = self.sw, self.se
            bl, br = self.ids.new(), self.ids.new()
            # strands: tl-br and tr-bl; ccw cycle (bl, br, tr, tl)
            if n > 0:
                self.crossings.append((bl, br, tr, tl))  # bl-tr under
            else:
                self.crossings.append((br, tr, tl, bl))  # tl-br under
            self.sw, self.se = bl, br
        return self

    def hjoin(self, other):
        """Place ``other`` to the right: tangle sum."""
        self.joins += other.joins + [(self.ne, other.nw), (self.se, other.sw)]
        self.crossings += other.crossings
        self.ne, self.se = other.ne, other.se
        return self

    def numerator(self):
        return self.joins + [(self.nw, self.ne), (self.sw, self.se)], self.crossings

    def denominator(self):
        return self.joins + [(self.nw, self.sw), (self.ne, self.se)], self.crossings


def rational(ids, terms):
    """Standard alternating tangle for a continued-fraction term list.

    Terms are consumed left to right, alternating horizontal and vertical
    twist regions starting horizontal.  Continuants are palindromic, so the
    numerator closure realizes the 2-bridge link of the continued fraction
    [ak, ..., a1] = [a1, ..., ak] up to the usual q-inversion equivalence.
    """
    t = Tangle.zero(ids)
    kind = "h"
    for a in terms:
        t.htwist(a) if kind == "h" else t.vtwist(a)
        kind = "v" if kind == "h" else "h"
    return t


def pretzel(ids, terms):
    """Pretzel tangle: vertical twist regions joined side by side."""
    t = None
    for a in terms:
        p = Tangle.infinity(ids).vtwist(a)
        t = p if t is None else t.hjoin(p)
    return t


def orientations(joins, crossings):
    """All oriented geometric diagrams compatible with the unoriented data."""
    # semiarcs: union-find over ports through joins
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    ports = set()
    for q in crossings:
        ports.update(q)
    for a, b in joins:
        union(a, b)
        ports.update((a, b))

    # crossing-port slots carrying each semiarc (arc root)
    slots_of = {}
    for ci, q in enumerate(crossings):
        for si, p in enumerate(q):
            slots_of.setdefault(find(p), []).append((ci, si))
    # joined loops without crossings become free loops
    roots = {find(p) for p in ports}
    free_loops = sum(1 for r in roots if r not in slots_of)
    for r, s in slots_of.items():
        if len(s) != 2:
            raise ValueError(f"semiarc {r} has {len(s)} crossing incidences")

    # walk closed curves over slots: semiarc edges between the two slots of an
    # arc, strand edges (slot si <-> si+2 mod 4) within a crossing.
    strand_partner = {}
    arc_partner = {}
    for r, (s1, s2) in slots_of.items():
        arc_partner[s1] = s2
        arc_partner[s2] = s1
    for ci, q in enumerate(crossings):
        for si in range(4):
            strand_partner[(ci, si)] = (ci, (si + 2) % 4)

    curves = []  # list of slot paths, alternating arc/strand steps
    seen = set()
    for start in sorted(arc_partner):
        if start in seen:
            continue
        path = []
        cur, kind = start, "arc"
        while True:
            path.append(cur)
            seen.add(cur)
            cur = arc_partner[cur] if kind == "arc" else strand_partner[cur]
            kind = "str" if kind == "arc" else "arc"
            if cur == start:
                break
        curves.append(path)

    results = []
    for flips in product((0, 1), repeat=len(curves)):
        # slots alternate out,in along each walk (an arc runs out-port to
        # in-port); a flip reverses the component.
        inset = set()
        for f, path in zip(flips, curves):
            for i, slot in enumerate(path):
                if (i + f) % 2 == 1:
                    inset.add(slot)
        geo = []
        for ci, q in enumerate(crossings):
            upos = 0 if (ci, 0) in inset else 2
            opos = 1 if (ci, 1) in inset else 3
            ui, uo = q[upos], q[(upos + 2) % 4]
            oi, oo = q[opos], q[(opos + 2) % 4]
            sign = 1 if (upos - opos) % 4 == 1 else -1
            geo.append((sign, find(ui), find(oi), find(uo), find(oo)))
        # relabel arcs compactly
        lab = {}
        out = []
        for s, a, b, c, d in geo:
            row = [s]
            for v in (a, b, c, d):
                lab.setdefault(v, len(lab) + 1)
                row.append(lab[v])
            out.append(tuple(row))
        results.append((out, free_loops))
    return results


def diagrams(name, joins, crossings):
    seen = set()
    out = []
    for geo, loops in orientations(joins, crossings):
        key = tuple(sorted(geo))
        if key in seen:
            continue
        seen.add(key)
        out.append(to_diagram(name, geo, loops))
    return out
