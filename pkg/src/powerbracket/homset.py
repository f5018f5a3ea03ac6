"""Enumerate biquandle colorings of a diagram and the counting invariant.

A coloring assigns a biquandle element to every semiarc (and to every free
loop) such that at each crossing the xy port carries c(x) ?- c(y) and the
yx port carries c(y) ?~ c(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .biquandle import Biquandle
from .diagram import LinkDiagram


@dataclass(frozen=True)
class Coloring:
    """A valid coloring: (semiarc id, element) pairs plus free-loop colors."""

    semiarcs: tuple[tuple[int, int], ...]
    loops: tuple[int, ...] = ()

    def __getitem__(self, semiarc: int) -> int:
        return dict(self.semiarcs)[semiarc]

    def as_dict(self) -> dict[int, int]:
        return dict(self.semiarcs)


def is_valid(d: LinkDiagram, X: Biquandle, c: Coloring) -> bool:
    colors = c.as_dict()
    if sorted(colors) != list(d.semiarcs) or len(c.loops) != d.free_loops:
        return False
    if not all(v in X.elements for v in colors.values()):
        return False
    if not all(v in X.elements for v in c.loops):
        return False
    for cr in d.crossings:
        if colors[cr.xy] != X.under(colors[cr.x], colors[cr.y]):
            return False
        if colors[cr.yx] != X.over(colors[cr.y], colors[cr.x]):
            return False
    return True


def enumerate_colorings(d: LinkDiagram, X: Biquandle) -> list[Coloring]:
    """All colorings of d by X, sorted by the color vector over sorted ids.

    Backtracking over semiarcs in id order; whenever a crossing has both
    x and y colored, the xy and yx colors are forced and propagated.
    """
    ids = list(d.semiarcs)
    by_port: dict[int, list] = {s: [] for s in ids}
    for cr in d.crossings:
        for p in cr.ports:
            by_port[p].append(cr)

    solutions: list[tuple[int, ...]] = []
    colors: dict[int, int] = {}

    def propagate(assigned: list[int]) -> bool:
        # Fixpoint pass: force xy/yx wherever x and y are known.
        queue = list(assigned[-1:])
        while queue:
            s = queue.pop()
            for cr in by_port[s]:
                if cr.x in colors and cr.y in colors:
                    forced = (
                        (cr.xy, X.under(colors[cr.x], colors[cr.y])),
                        (cr.yx, X.over(colors[cr.y], colors[cr.x])),
                    )
                    for port, value in forced:
                        if port in colors:
                            if colors[port] != value:
                                return False
                        else:
                            colors[port] = value
                            assigned.append(port)
                            queue.append(port)
        return True

    def solve() -> None:
        free = next((s for s in ids if s not in colors), None)
        if free is None:
            solutions.append(tuple(colors[s] for s in ids))
            return
        for v in X.elements:
            colors[free] = v
            assigned = [free]
            if propagate(assigned):
                solve()
            for s in assigned:
                del colors[s]

    if ids:
        solve()
    else:
        solutions.append(())

    solutions.sort()
    out = []
    for sol in solutions:
        pairs = tuple(zip(ids, sol))
        for loops in product(X.elements, repeat=d.free_loops):
            out.append(Coloring(pairs, loops))
    return out


def counting_invariant(d: LinkDiagram, X: Biquandle) -> int:
    return len(enumerate_colorings(d, X))
