"""Dev-time geometric diagram builder.

Works with geometric crossings (sign, under_in, over_in, under_out, over_out)
so that mirrors and component reversals are mechanical, then maps geometry to
the role-tagged native format:

  positive: x = under-in,  y = over-out, xy = under-out, yx = over-in
  negative: x = under-out, y = over-in,  xy = under-in,  yx = over-out

(the negative reading is the positive one rotated half a turn).
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from powerbracket.diagram import Crossing, LinkDiagram  # noqa: E402


def braid_geo(k, word):
    """Closure of a braid word: geometric crossings plus free-loop count."""
    next_id = k + 1
    pos = list(range(1, k + 1))
    raw = []
    for g in word:
        i = abs(g)
        left, right = pos[i - 1], pos[i]
        out_left, out_right = next_id, next_id + 1
        next_id += 2
        if g > 0:
            # left strand passes over
            raw.append([1, right, left, out_left, out_right])
        else:
            raw.append([-1, left, right, out_right, out_left])
        pos[i - 1], pos[i] = out_left, out_right

    parent = list(range(next_id))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j in range(k):
        ra, rb = find(pos[j]), find(j + 1)
        if ra != rb:
            parent[rb] = ra
    used = sorted({find(v) for r in raw for v in r[1:]})
    lab = {r: i + 1 for i, r in enumerate(used)}
    geo = [(s, lab[find(a)], lab[find(b)], lab[find(c)], lab[find(d)])
           for s, a, b, c, d in raw]
    loops = sum(1 for j in range(k) if find(j + 1) not in used)
    return geo, loops


def components(geo):
    """Partition of semiarc ids into link components (strand following)."""
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

    for _, ui, oi, uo, oo in geo:
        union(ui, uo)
        union(oi, oo)
    groups = {}
    for s in parent:
        groups.setdefault(find(s), set()).add(s)
    return sorted(groups.values(), key=min)


def mirror_geo(geo):
    """Mirror image: over and under strands swap, signs flip."""
    return [(-s, oi, ui, oo, uo) for s, ui, oi, uo, oo in geo]


def reverse_geo(geo, arcs):
    """Reverse orientation of the components whose semiarcs are in ``arcs``."""
    out = []
    for s, ui, oi, uo, oo in geo:
        under_rev = ui in arcs
        over_rev = oi in arcs
        if under_rev:
            ui, uo = uo, ui
        if over_rev:
            oi, oo = oo, oi
        if under_rev != over_rev:
            s = -s
        out.append((s, ui, oi, uo, oo))
    return out


def determinant(geo):
    """Link determinant via the Fox coloring matrix (2*over = u_in + u_out)."""
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

    for _, ui, oi, uo, oo in geo:
        union(oi, oo)  # overstrand is unbroken
    arcs = sorted({find(v) for r in geo for v in r[1:]})
    idx = {a: i for i, a in enumerate(arcs)}
    n = len(arcs)
    rows = []
    for _, ui, oi, uo, oo in geo:
        row = [0] * n
        row[idx[find(oi)]] += 2
        row[idx[find(ui)]] -= 1
        row[idx[find(uo)]] -= 1
        rows.append(row)
    # delete one row and one column, then integer determinant (Bareiss)
    m = [r[1:] for r in rows[1:]]
    k = len(m)
    if k == 0:
        return 1
    prev = 1
    sign = 1
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for r in range(c + 1, k):
            for j in range(c + 1, k):
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) // prev
            m[r][c] = 0
        prev = m[c][c]
    return abs(sign * m[k - 1][k - 1])


def to_diagram(name, geo, loops=0):
    cs = []
    for s, ui, oi, uo, oo in geo:
        if s > 0:
            cs.append(Crossing(1, ui, oo, uo, oi))
        else:
            cs.append(Crossing(-1, uo, oi, ui, oo))
    return LinkDiagram(name, tuple(cs), loops)


def braid_closure(name, k, word):
    geo, loops = braid_geo(k, word)
    return to_diagram(name, geo, loops)
