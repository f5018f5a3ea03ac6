"""Power brackets on a finite biquandle: data, axiom verifier, file format.

A power bracket assigns skein coefficients A, B, Abar, Bbar to ordered pairs
of biquandle elements, a unit w of Z_m, and a value delta(C) to every subset
C of the biquandle.  Subsets are encoded as bitmasks (bit i-1 set iff element
i is in the subset); coefficient entries are canonical residues.

The verifier checks the defining equations exhaustively.  The quantified
subsets stand for color sets of Kauffman state components, which are never
empty, so all subset quantifiers range over nonempty subsets; delta of the
empty set is stored but inert.
"""

from __future__ import annotations

from dataclasses import dataclass

from .biquandle import Biquandle, parse as parse_biquandle, serialize as serialize_biquandle
from .modring import NotAUnit, RingZm

AXIOM_TAGS = ("i", "ii.i", "ii.ii", "iii.i", "iii.ii", "iii.iii", "iii.iv", "iii.v")


class InconsistentDelta(ValueError):
    """The standard-bracket delta formula gave different values per entry."""


@dataclass(frozen=True)
class BracketViolation:
    """One failed bracket equation: axiom tag, witness, and both side values."""

    axiom: str
    witness: tuple  # elements then subset masks, in the axiom's order
    left: int
    right: int

    def __str__(self) -> str:
        return f"axiom {self.axiom} fails at {self.witness}: {self.left} != {self.right}"


def _check_table(n: int, m: int, table, label: str) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) % m for v in row) for row in table)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"{label} table must be {n}x{n}")
    return rows


@dataclass(frozen=True)
class PowerBracket:
    biquandle: Biquandle
    ring: RingZm
    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    Abar: tuple[tuple[int, ...], ...]
    Bbar: tuple[tuple[int, ...], ...]
    w: int
    delta: tuple[int, ...]

    def __post_init__(self) -> None:
        n, m = self.biquandle.n, self.ring.modulus
        for label in ("A", "B", "Abar", "Bbar"):
            object.__setattr__(self, label, _check_table(n, m, getattr(self, label), label))
        object.__setattr__(self, "w", int(self.w) % m)
        if not self.ring.is_unit(self.w):
            raise NotAUnit(f"w = {self.w} is not a unit mod {m}")
        d = tuple(int(v) % m for v in self.delta)
        if len(d) != 1 << n:
            raise ValueError(f"delta must have {1 << n} entries, got {len(d)}")
        object.__setattr__(self, "delta", d)

    def coefficient(self, sign: int, trace: bool, x: int, y: int) -> int:
        """Skein coefficient at a crossing colored (x, y)."""
        if sign > 0:
            table = self.B if trace else self.A
        else:
            table = self.Bbar if trace else self.Abar
        return table[x - 1][y - 1]


def _nonempty_masks(n: int) -> range:
    return range(1, 1 << n)


def verify(
    b: PowerBracket,
    first_violation: bool = False,
    axioms=None,
    derivation_variants: bool = False,
) -> list[BracketViolation]:
    """All failed bracket equations (empty list iff b is a power bracket).

    ``axioms`` optionally restricts the check to a subset of AXIOM_TAGS;
    ``first_violation`` stops at the first failure.  ``derivation_variants``
    additionally checks the alternate membership conditions that appear in
    the move-by-move derivation (union vs intersection); these variants are
    reported with a ``*`` suffix on the tag and are not part of the
    defining conditions.
    """
    tags = AXIOM_TAGS if axioms is None else tuple(axioms)
    out: list[BracketViolation] = []
    n = b.biquandle.n

    def done() -> bool:
        return first_violation and bool(out)

    if "i" in tags:
        for x in b.biquandle.elements:
            out.extend(axiom_i_violations(b, x))
            if done():
                return out[:1]
    if "ii.i" in tags or "ii.ii" in tags:
        for x in b.biquandle.elements:
            for y in b.biquandle.elements:
                out.extend(
                    axiom_ii_violations(
                        b,
                        x,
                        y,
                        which=tuple(t for t in ("ii.i", "ii.ii") if t in tags),
                        derivation_variants=derivation_variants,
                    )
                )
                if done():
                    return out[:1]
    iii_tags = tuple(t for t in tags if t.startswith("iii"))
    if iii_tags:
        for x in b.biquandle.elements:
            for y in b.biquandle.elements:
                for z in b.biquandle.elements:
                    out.extend(axiom_iii_violations(b, x, y, z, which=iii_tags))
                    if done():
                        return out[:1]
    return out


def axiom_i_violations(b: PowerBracket, x: int) -> list[BracketViolation]:
    """Kink equations for one element x, over all admissible subsets."""
    n, m = b.biquandle.n, b.ring.modulus
    d = b.delta
    w, winv = b.w, b.ring.inv(b.w)
    sx = b.biquandle.under(x, x)
    xb, sb = 1 << (x - 1), 1 << (sx - 1)
    i = x - 1
    A, B, Ab, Bb = b.A[i][i], b.B[i][i], b.Abar[i][i], b.Bbar[i][i]
    out = []
    for C in _nonempty_masks(n):
        # subset contains x: splitting off a circle colored x?-x
        if C & xb:
            lhs = w * d[C] % m
            rhs = (A * d[C] * d[sb] + B * d[C | sb]) % m
            if lhs != rhs:
                out.append(BracketViolation("i", (x, C), lhs, rhs))
            lhs = winv * d[C] % m
            rhs = (Ab * d[C] * d[sb] + Bb * d[C | sb]) % m
            if lhs != rhs:
                out.append(BracketViolation("i", (x, C), lhs, rhs))
        # subset contains x?-x: splitting off a circle colored x
        if C & sb:
            lhs = w * d[C] % m
            rhs = (A * d[C] * d[xb] + B * d[C | xb]) % m
            if lhs != rhs:
                out.append(BracketViolation("i", (x, C), lhs, rhs))
            lhs = winv * d[C] % m
            rhs = (Ab * d[C] * d[xb] + Bb * d[C | xb]) % m
            if lhs != rhs:
                out.append(BracketViolation("i", (x, C), lhs, rhs))
    return out


def axiom_ii_violations(
    b: PowerBracket,
    x: int,
    y: int,
    which=("ii.i", "ii.ii"),
    derivation_variants: bool = False,
) -> list[BracketViolation]:
    """Reverse type II equations for one ordered pair (x, y)."""
    n, m = b.biquandle.n, b.ring.modulus
    d = b.delta
    xuy = b.biquandle.under(x, y)
    yox = b.biquandle.over(y, x)
    xb, yb = 1 << (x - 1), 1 << (y - 1)
    ub, vb = 1 << (xuy - 1), 1 << (yox - 1)
    uv = ub | vb  # {x?-y, y?~x}
    xy = xb | yb  # {x, y}
    A, B = b.A[x - 1][y - 1], b.B[x - 1][y - 1]
    Ab, Bb = b.Abar[x - 1][y - 1], b.Bbar[x - 1][y - 1]
    AA, BA, AB, BB = A * Ab, B * Ab, A * Bb, B * Bb
    out = []
    masks = _nonempty_masks(n)
    for C1 in masks:
        for C2 in masks:
            both = C1 | C2
            if "ii.i" in which:
                # single-component closure: x, y on both arcs
                cond = (C1 & xy) == xy and (C2 & xy) == xy
                if derivation_variants:
                    cond = cond or ((both & xy) == xy)
                if cond:
                    lhs = d[both]
                    rhs = (
                        AA * d[C1] * d[C2] * d[uv]
                        + BA * d[C1 | uv] * d[C2]
                        + AB * d[C1] * d[C2 | uv]
                        + BB * d[both | uv]
                    ) % m
                    if lhs != rhs:
                        tag = "ii.i" if (C1 & xy) == xy and (C2 & xy) == xy else "ii.i*"
                        out.append(BracketViolation(tag, (x, y, C1, C2), lhs, rhs))
                # two-component closure: x on one arc, y on the other
                if C1 & xb and C2 & yb:
                    lhs = d[C1] * d[C2] % m
                    rhs = (
                        AA * d[both] * d[uv]
                        + BA * d[both | uv]
                        + AB * d[both | uv]
                        + BB * d[C1 | vb] * d[C2 | ub]
                    ) % m
                    if lhs != rhs:
                        out.append(BracketViolation("ii.i", (x, y, C1, C2), lhs, rhs))
            if "ii.ii" in which:
                # single-component closure: outputs both present in the union
                cond = (both & uv) == uv
                if cond or (derivation_variants and (C1 & uv) == uv and (C2 & uv) == uv):
                    lhs = d[both]
                    rhs = (
                        AA * d[C1] * d[C2] * d[xy]
                        + AB * d[C1 | xy] * d[C2]
                        + BA * d[C1] * d[C2 | xy]
                        + BB * d[both | xy]
                    ) % m
                    if lhs != rhs:
                        out.append(
                            BracketViolation(
                                "ii.ii" if cond else "ii.ii*", (x, y, C1, C2), lhs, rhs
                            )
                        )
                # two-component closure: y?~x on one arc, x?-y on the other
                if C1 & vb and C2 & ub:
                    lhs = d[C1] * d[C2] % m
                    rhs = (
                        AA * d[both] * d[xy]
                        + AB * d[both | xy]
                        + BA * d[both | xy]
                        + BB * d[C1 | xb] * d[C2 | yb]
                    ) % m
                    if lhs != rhs:
                        out.append(BracketViolation("ii.ii", (x, y, C1, C2), lhs, rhs))
    return out


def axiom_iii_violations(
    b: PowerBracket, x: int, y: int, z: int, which=None
) -> list[BracketViolation]:
    """Triangle-move equations for one ordered triple (x, y, z).

    Each of the five clauses compares the eight smoothing terms of the two
    sides of the move for one way of closing the three strands.
    """
    if which is None:
        which = ("iii.i", "iii.ii", "iii.iii", "iii.iv", "iii.v")
    X = b.biquandle
    n, m = X.n, b.ring.modulus
    d = b.delta

    xuy, xuz = X.under(x, y), X.under(x, z)
    yuz, zuy = X.under(y, z), X.under(z, y)
    yox, zox = X.over(y, x), X.over(z, x)
    zoy = X.over(z, y)
    t1 = X.over(zox, yox)  # (z?~x)?~(y?~x)
    t2 = X.under(xuz, yuz)  # (x?-z)?-(y?-z)
    t3 = X.over(yuz, xuz)  # (y?-z)?~(x?-z)

    def bit(e: int) -> int:
        return 1 << (e - 1)

    Y, P = bit(y), bit(xuy) | bit(zoy)  # left-side new colors {y} and {x?-y, z?~y}
    YP = Y | P
    qz, qx, T = bit(zox), bit(xuz), bit(t3)
    Q = qz | qx  # right-side new colors {z?~x, x?-z}
    QT = Q | T

    a1, b1 = b.A[x - 1][y - 1], b.B[x - 1][y - 1]
    a2, b2 = b.A[y - 1][z - 1], b.B[y - 1][z - 1]
    a3, b3 = b.A[xuy - 1][zoy - 1], b.B[xuy - 1][zoy - 1]
    c1, e1 = b.A[x - 1][z - 1], b.B[x - 1][z - 1]
    c2, e2 = b.A[yox - 1][zox - 1], b.B[yox - 1][zox - 1]
    c3, e3 = b.A[xuz - 1][yuz - 1], b.B[xuz - 1][yuz - 1]

    # Membership conditions per clause: required bits in (C1, C2, C3).
    conds = {
        "iii.i": (bit(x) | bit(z), bit(yox) | bit(yuz), bit(t1) | bit(t2)),
        "iii.ii": (bit(x) | bit(yox), bit(t1) | bit(t2), bit(z) | bit(yuz)),
        "iii.iii": (bit(x) | bit(z), bit(yox) | bit(t1), bit(yuz) | bit(t2)),
        "iii.iv": (bit(x) | bit(t2), bit(yox) | bit(t1), bit(z) | bit(yuz)),
        "iii.v": (bit(x) | bit(yox), bit(z) | bit(t1), bit(yuz) | bit(t2)),
    }

    def sides(tag, C1, C2, C3):
        u12, u13, u23 = C1 | C2, C1 | C3, C2 | C3
        u123 = u12 | C3
        if tag == "iii.i":
            lhs = (
                a1 * a2 * a3 * d[C1 | Y] * d[C2 | P] * d[C3]
                + a1 * a2 * b3 * d[C1 | Y] * d[u23 | P]
                + a1 * b2 * a3 * d[u12 | YP] * d[C3]
                + a1 * b2 * b3 * d[u123 | YP]
                + b1 * a2 * a3 * d[u12 | YP] * d[C3]
                + b1 * a2 * b3 * d[u123 | YP]
                + b1 * b2 * a3 * d[u12] * d[C3] * d[YP]
                + b1 * b2 * b3 * d[u12] * d[C3 | YP]
            )
            rhs = (
                c1 * c2 * c3 * d[C1] * d[C2 | Q] * d[C3 | T]
                + c1 * c2 * e3 * d[C1] * d[u23 | QT]
                + c1 * e2 * c3 * d[C1] * d[u23 | QT]
                + c1 * e2 * e3 * d[C1] * d[u23] * d[QT]
                + e1 * c2 * c3 * d[u12 | Q] * d[C3 | T]
                + e1 * c2 * e3 * d[u123 | QT]
                + e1 * e2 * c3 * d[u123 | QT]
                + e1 * e2 * e3 * d[C1 | QT] * d[u23]
            )
        elif tag == "iii.ii":
            lhs = (
                a1 * a2 * a3 * d[u13 | YP] * d[C2]
                + a1 * a2 * b3 * d[u123 | YP]
                + a1 * b2 * a3 * d[C1 | YP] * d[C2] * d[C3]
                + a1 * b2 * b3 * d[u12 | YP] * d[C3]
                + b1 * a2 * a3 * d[C1] * d[C2] * d[C3 | YP]
                + b1 * a2 * b3 * d[C1] * d[u23 | YP]
                + b1 * b2 * a3 * d[C1] * d[C2] * d[C3] * d[YP]
                + b1 * b2 * b3 * d[C1] * d[C2 | YP] * d[C3]
            )
            rhs = (
                c1 * c2 * c3 * d[u13 | Q] * d[C2 | T]
                + c1 * c2 * e3 * d[u123 | QT]
                + c1 * e2 * c3 * d[u123 | QT]
                + c1 * e2 * e3 * d[u123] * d[QT]
                + e1 * c2 * c3 * d[C1 | qz] * d[C2 | T] * d[C3 | qx]
                + e1 * c2 * e3 * d[C1 | qz] * d[u23 | qx | T]
                + e1 * e2 * c3 * d[u12 | qz | T] * d[C3 | qx]
                + e1 * e2 * e3 * d[u123 | QT]
            )
        elif tag == "iii.iii":
            lhs = (
                a1 * a2 * a3 * d[C1 | Y] * d[u23 | P]
                + a1 * a2 * b3 * d[C1 | Y] * d[C2 | bit(xuy)] * d[C3 | bit(zoy)]
                + a1 * b2 * a3 * d[u123 | YP]
                + a1 * b2 * b3 * d[u13 | Y | bit(zoy)] * d[C2 | bit(xuy)]
                + b1 * a2 * a3 * d[u123 | YP]
                + b1 * a2 * b3 * d[u12 | Y | bit(xuy)] * d[C3 | bit(zoy)]
                + b1 * b2 * a3 * d[u123] * d[YP]
                + b1 * b2 * b3 * d[u123 | YP]
            )
            rhs = (
                c1 * c2 * c3 * d[C1] * d[u23 | QT]
                + c1 * c2 * e3 * d[C1] * d[C2 | QT] * d[C3]
                + c1 * e2 * c3 * d[C1] * d[C2] * d[C3 | QT]
                + c1 * e2 * e3 * d[C1] * d[C2] * d[C3] * d[QT]
                + e1 * c2 * c3 * d[u123 | QT]
                + e1 * c2 * e3 * d[u12 | QT] * d[C3]
                + e1 * e2 * c3 * d[u13 | QT] * d[C2]
                + e1 * e2 * e3 * d[C1 | QT] * d[C2] * d[C3]
            )
        elif tag == "iii.iv":
            lhs = (
                a1 * a2 * a3 * d[u123 | YP]
                + a1 * a2 * b3 * d[u13 | Y | bit(zoy)] * d[C2 | bit(xuy)]
                + a1 * b2 * a3 * d[u12 | YP] * d[C3]
                + a1 * b2 * b3 * d[C1 | Y | bit(zoy)] * d[C2 | bit(xuy)] * d[C3]
                + b1 * a2 * a3 * d[u12] * d[C3 | YP]
                + b1 * a2 * b3 * d[u123 | YP]
                + b1 * b2 * a3 * d[u12] * d[C3] * d[YP]
                + b1 * b2 * b3 * d[u12 | YP] * d[C3]
            )
            rhs = (
                c1 * c2 * c3 * d[u123 | QT]
                + c1 * c2 * e3 * d[u13] * d[C2 | QT]
                + c1 * e2 * c3 * d[u13 | QT] * d[C2]
                + c1 * e2 * e3 * d[u13] * d[C2] * d[QT]
                + e1 * c2 * c3 * d[u12 | qz | T] * d[C3 | qx]
                + e1 * c2 * e3 * d[u123 | QT]
                + e1 * e2 * c3 * d[C1 | qz | T] * d[C2] * d[C3 | qx]
                + e1 * e2 * e3 * d[u13 | QT] * d[C2]
            )
        else:  # iii.v
            lhs = (
                a1 * a2 * a3 * d[u123 | YP]
                + a1 * a2 * b3 * d[u12 | Y | bit(xuy)] * d[C3 | bit(zoy)]
                + a1 * b2 * a3 * d[C1 | YP] * d[u23]
                + a1 * b2 * b3 * d[u123 | YP]
                + b1 * a2 * a3 * d[C1] * d[u23 | YP]
                + b1 * a2 * b3 * d[C1] * d[C2 | Y | bit(xuy)] * d[C3 | bit(zoy)]
                + b1 * b2 * a3 * d[C1] * d[u23] * d[YP]
                + b1 * b2 * b3 * d[C1] * d[u23 | YP]
            )
            rhs = (
                c1 * c2 * c3 * d[u123 | QT]
                + c1 * c2 * e3 * d[u12 | QT] * d[C3]
                + c1 * e2 * c3 * d[u12] * d[C3 | QT]
                + c1 * e2 * e3 * d[u12] * d[C3] * d[QT]
                + e1 * c2 * c3 * d[C1 | qz] * d[u23 | qx | T]
                + e1 * c2 * e3 * d[C1 | qz] * d[C2 | qx | T] * d[C3]
                + e1 * e2 * c3 * d[u123 | QT]
                + e1 * e2 * e3 * d[u12 | QT] * d[C3]
            )
        return lhs % m, rhs % m

    out = []
    for tag in which:
        r1, r2, r3 = conds[tag]
        m1 = [C for C in _nonempty_masks(n) if (C & r1) == r1]
        m2 = [C for C in _nonempty_masks(n) if (C & r2) == r2]
        m3 = [C for C in _nonempty_masks(n) if (C & r3) == r3]
        for C1 in m1:
            for C2 in m2:
                for C3 in m3:
                    lhs, rhs = sides(tag, C1, C2, C3)
                    if lhs != rhs:
                        out.append(
                            BracketViolation(tag, (x, y, z, C1, C2, C3), lhs, rhs)
                        )
    return out


def from_standard(X: Biquandle, ring: RingZm, A, B, w: int) -> PowerBracket:
    """Lift a standard bracket (unit coefficient tables) to a power bracket.

    Abar and Bbar are the entrywise inverses of A and B, and delta is the
    constant -A_{x,y}B_{x,y}^{-1} - A_{x,y}^{-1}B_{x,y}, which must agree
    over all entries.
    """
    n, m = X.n, ring.modulus
    A = _check_table(n, m, A, "A")
    B = _check_table(n, m, B, "B")
    values = set()
    for x in range(n):
        for y in range(n):
            a, bb = A[x][y], B[x][y]
            values.add((-(a * ring.inv(bb)) - ring.inv(a) * bb) % m)
    if len(values) > 1:
        raise InconsistentDelta(f"delta formula values differ across entries: {sorted(values)}")
    const = values.pop()
    Abar = tuple(tuple(ring.inv(v) for v in row) for row in A)
    Bbar = tuple(tuple(ring.inv(v) for v in row) for row in B)
    delta = tuple(const for _ in range(1 << n))
    return PowerBracket(X, ring, A, B, Abar, Bbar, w, delta)


def parse_bracket(text: str) -> PowerBracket:
    """Parse the bracket file format.

    Biquandle block first, then ``ring <m>``, the four coefficient tables
    introduced by ``A``, ``B``, ``Abar``, ``Bbar``, then ``w <int>`` and
    ``delta`` with 2^n mask-indexed entries.  ``#`` comments.
    """
    tokens: list[str] = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())

    def expect(keyword: str, pos: int) -> int:
        if pos >= len(tokens) or tokens[pos] != keyword:
            found = tokens[pos] if pos < len(tokens) else "<eof>"
            raise ValueError(f"expected {keyword!r}, found {found!r}")
        return pos + 1

    pos = expect("biquandle", 0)
    n = int(tokens[pos])
    pos += 1
    bq_tokens = tokens[pos : pos + 2 * n * n]
    if len(bq_tokens) != 2 * n * n:
        raise ValueError("truncated biquandle tables")
    X = parse_biquandle("biquandle " + str(n) + "\n" + " ".join(bq_tokens))
    pos += 2 * n * n

    pos = expect("ring", pos)
    ring = RingZm(int(tokens[pos]))
    pos += 1

    tables = {}
    for label in ("A", "B", "Abar", "Bbar"):
        pos = expect(label, pos)
        flat = tokens[pos : pos + n * n]
        if len(flat) != n * n:
            raise ValueError(f"truncated {label} table")
        tables[label] = tuple(
            tuple(int(v) for v in flat[i * n : (i + 1) * n]) for i in range(n)
        )
        pos += n * n

    pos = expect("w", pos)
    w = int(tokens[pos])
    pos += 1

    pos = expect("delta", pos)
    flat = tokens[pos:]
    if len(flat) != 1 << n:
        raise ValueError(f"delta must have {1 << n} entries, got {len(flat)}")
    delta = tuple(int(v) for v in flat)
    return PowerBracket(
        X, ring, tables["A"], tables["B"], tables["Abar"], tables["Bbar"], w, delta
    )


BUNDLED_BRACKETS = ("z4_2elt", "z5_2elt", "z5_3elt", "z6_4elt")


def load_bundled(name: str) -> PowerBracket:
    """One of the example brackets shipped under data/brackets."""
    from importlib import resources

    if name not in BUNDLED_BRACKETS:
        raise KeyError(f"unknown bundled bracket {name!r}")
    ref = resources.files("powerbracket") / "data" / "brackets" / (name + ".bkt")
    return parse_bracket(ref.read_text(encoding="utf-8"))


def serialize_bracket(b: PowerBracket) -> str:
    n = b.biquandle.n
    lines = [serialize_biquandle(b.biquandle).rstrip("\n")]
    lines.append(f"ring {b.ring.modulus}")
    for label in ("A", "B", "Abar", "Bbar"):
        lines.append(label)
        lines.extend(" ".join(str(v) for v in row) for row in getattr(b, label))
    lines.append(f"w {b.w}")
    lines.append("delta " + " ".join(str(v) for v in b.delta))
    return "\n".join(lines) + "\n"
