"""Oriented link diagrams as signed, role-annotated crossing lists.

Each crossing stores four semiarc ids in fixed roles: the coloring rule at
a crossing is c(xy) = c(x) ?- c(y) and c(yx) = c(y) ?~ c(x) regardless of
sign.  The sign only contributes to the writhe and selects which coefficient
tables apply in state sums.  A diagram may also carry crossingless circle
components ("free loops").
"""

from __future__ import annotations

from dataclasses import dataclass

ORIENTED = "oriented"
TRACE = "trace"


@dataclass(frozen=True)
class Crossing:
    """A signed crossing with role-tagged semiarc ports."""

    sign: int  # +1 or -1
    x: int
    y: int
    xy: int  # carries c(x) ?- c(y)
    yx: int  # carries c(y) ?~ c(x)

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def ports(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.xy, self.yx)


@dataclass(frozen=True)
class StateComponent:
    """One closed curve of a Kauffman state.

    Either a set of semiarc ids joined by the smoothings, or a free loop
    (empty semiarc set, loop_index set).
    """

    semiarcs: frozenset[int]
    loop_index: int | None = None


@dataclass(frozen=True)
class LinkDiagram:
    name: str
    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self) -> None:
        counts: dict[int, int] = {}
        for c in self.crossings:
            for p in c.ports:
                if p < 1:
                    raise ValueError(f"semiarc ids must be positive, got {p}")
                counts[p] = counts.get(p, 0) + 1
        bad = sorted(p for p, k in counts.items() if k != 2)
        if bad:
            raise ValueError(
                f"each semiarc id must appear exactly twice as a port; bad ids: {bad}"
            )
        if self.free_loops < 0:
            raise ValueError("free loop count must be nonnegative")

    @property
    def semiarcs(self) -> tuple[int, ...]:
        return tuple(sorted({p for c in self.crossings for p in c.ports}))

    @property
    def positive_count(self) -> int:
        return sum(1 for c in self.crossings if c.sign > 0)

    @property
    def negative_count(self) -> int:
        return sum(1 for c in self.crossings if c.sign < 0)


def writhe(d: LinkDiagram) -> int:
    return d.positive_count - d.negative_count


def mirror(d: LinkDiagram) -> LinkDiagram:
    """The same diagram with every crossing sign flipped."""
    return LinkDiagram(
        d.name,
        tuple(Crossing(-c.sign, c.x, c.y, c.xy, c.yx) for c in d.crossings),
        d.free_loops,
    )


class _UnionFind:
    def __init__(self, items):
        self.parent = {v: v for v in items}

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def link_components(d: LinkDiagram) -> int:
    """Number of link components: strand-following cycles plus free loops."""
    uf = _UnionFind(d.semiarcs)
    for c in d.crossings:
        uf.union(c.x, c.xy)  # understrand passes through
        uf.union(c.y, c.yx)  # overstrand passes through
    roots = {uf.find(s) for s in d.semiarcs}
    return len(roots) + d.free_loops


def state_components(d: LinkDiagram, choice) -> list[StateComponent]:
    """Closed curves of the Kauffman state selected by one smoothing choice.

    ``choice`` holds one tag per crossing: ORIENTED joins {x, y} and
    {xy, yx}; TRACE joins {x, yx} and {y, xy}.  Free loops are singleton
    components.  Returned sorted by smallest semiarc id, loops last.
    """
    choice = tuple(choice)
    if len(choice) != len(d.crossings):
        raise ValueError(
            f"smoothing choice length {len(choice)} != crossing count {len(d.crossings)}"
        )
    uf = _UnionFind(d.semiarcs)
    for c, tag in zip(d.crossings, choice):
        if tag == ORIENTED:
            uf.union(c.x, c.y)
            uf.union(c.xy, c.yx)
        elif tag == TRACE:
            uf.union(c.x, c.yx)
            uf.union(c.y, c.xy)
        else:
            raise ValueError(f"unknown smoothing tag {tag!r}")
    groups: dict[int, set[int]] = {}
    for s in d.semiarcs:
        groups.setdefault(uf.find(s), set()).add(s)
    out = [StateComponent(frozenset(g)) for g in groups.values()]
    out.sort(key=lambda comp: min(comp.semiarcs))
    out.extend(StateComponent(frozenset(), i) for i in range(d.free_loops))
    return out


def parse(text: str, name: str | None = None) -> LinkDiagram:
    """Parse the native link format.

    ``link <name>`` header, then one ``crossing <+|-> <x> <y> <xy> <yx>``
    line per crossing and one ``loop`` line per free loop; ``#`` comments.
    """
    parsed_name = name or ""
    crossings: list[Crossing] = []
    loops = 0
    saw_header = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "link":
            if len(fields) != 2:
                raise ValueError(f"bad link header: {raw!r}")
            parsed_name = fields[1]
            saw_header = True
        elif fields[0] == "crossing":
            if len(fields) != 6:
                raise ValueError(f"bad crossing line: {raw!r}")
            if fields[1] == "+":
                sign = 1
            elif fields[1] == "-":
                sign = -1
            else:
                raise ValueError(f"bad sign token {fields[1]!r}")
            crossings.append(Crossing(sign, *(int(v) for v in fields[2:])))
        elif fields[0] == "loop":
            if len(fields) != 1:
                raise ValueError(f"bad loop line: {raw!r}")
            loops += 1
        else:
            raise ValueError(f"unrecognized line: {raw!r}")
    if not saw_header and name is None:
        raise ValueError("missing 'link <name>' header")
    return LinkDiagram(parsed_name, tuple(crossings), loops)


def serialize(d: LinkDiagram) -> str:
    lines = [f"link {d.name}"]
    for c in d.crossings:
        sign = "+" if c.sign > 0 else "-"
        lines.append(f"crossing {sign} {c.x} {c.y} {c.xy} {c.yx}")
    lines.extend("loop" for _ in range(d.free_loops))
    return "\n".join(lines) + "\n"
