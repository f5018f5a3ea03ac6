"""State-sum evaluation of power brackets and the multiset invariant.

For one coloring, the value is the writhe-corrected sum over all smoothing
choices of the product of per-crossing skein coefficients times delta of
the color set of each state component.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .biquandle import Biquandle
from .bracket import PowerBracket
from .diagram import ORIENTED, TRACE, LinkDiagram, state_components
from .homset import Coloring, enumerate_colorings


@dataclass(frozen=True)
class InvariantResult:
    """Multiset of state-sum values (residue -> multiplicity) over the homset."""

    multiset: tuple[tuple[int, int], ...]  # sorted (value, multiplicity) pairs
    modulus: int

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiset)

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.multiset)


@lru_cache(maxsize=256)
def _state_table(d: LinkDiagram) -> list[tuple[list[tuple[int, ...]], int]]:
    """Per smoothing mask (bit set = trace): semiarc groups of each component.

    Free loops are independent of the smoothing and handled separately.
    """
    c = len(d.crossings)
    table = []
    for mask in range(1 << c):
        choice = tuple(TRACE if mask >> i & 1 else ORIENTED for i in range(c))
        comps = state_components(d, choice)
        groups = [tuple(comp.semiarcs) for comp in comps if comp.semiarcs]
        table.append((groups, mask))
    return table


def evaluate(d: LinkDiagram, c: Coloring, b: PowerBracket) -> int:
    """The power bracket value of one coloring, as a canonical residue."""
    m = b.ring.modulus
    colors = c.as_dict()
    delta = b.delta
    crossings = d.crossings
    total = 0
    for groups, mask in _state_table(d):
        coeff = 1
        for i, cr in enumerate(crossings):
            coeff = (
                coeff
                * b.coefficient(cr.sign, bool(mask >> i & 1), colors[cr.x], colors[cr.y])
            ) % m
            if coeff == 0:
                break
        if coeff == 0:
            continue
        for group in groups:
            cset = 0
            for s in group:
                cset |= 1 << (colors[s] - 1)
            coeff = coeff * delta[cset] % m
            if coeff == 0:
                break
        total += coeff
    for loop_color in c.loops:
        total = total * delta[1 << (loop_color - 1)]
    correction = b.ring.pow(b.w, d.negative_count - d.positive_count)
    return total * correction % m


def invariant(d: LinkDiagram, X: Biquandle, b: PowerBracket) -> InvariantResult:
    """Multiset of evaluate over all colorings of d by b's biquandle."""
    if X != b.biquandle:
        raise ValueError("biquandle does not match the bracket's biquandle")
    counts: dict[int, int] = {}
    for c in enumerate_colorings(d, X):
        v = evaluate(d, c, b)
        counts[v] = counts.get(v, 0) + 1
    return InvariantResult(tuple(sorted(counts.items())), b.ring.modulus)


def to_polynomial(r: InvariantResult) -> str:
    """Canonical polynomial string: one term per multiset value.

    Terms ascend by exponent; exponent 0 prints as the bare multiplicity,
    exponent 1 as ``u``; multiplicity 1 omits the coefficient.
    """
    terms = []
    for exponent, mult in r.multiset:
        if mult == 0:
            continue
        if exponent == 0:
            terms.append(str(mult))
            continue
        coeff = "" if mult == 1 else str(mult)
        power = "u" if exponent == 1 else f"u^{exponent}"
        terms.append(coeff + power)
    return " + ".join(terms) if terms else "0"
