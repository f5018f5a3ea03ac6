"""Biquandle power brackets: colorings, state-sum link invariants, search."""

from .biquandle import Biquandle, alexander, constant_action, orbit_decomposition
from .bracket import (
    BUNDLED_BRACKETS,
    BracketViolation,
    PowerBracket,
    from_standard,
    load_bundled,
    parse_bracket,
    serialize_bracket,
    verify,
)
from .diagram import Crossing, LinkDiagram, link_components, state_components, writhe
from .homset import Coloring, counting_invariant, enumerate_colorings
from .linktable import LinkEntry, UnknownLink, list_links, load
from .modring import NotAUnit, RingElem, RingZm, units
from .search import SearchConfig, search, search_space_estimate
from .statesum import InvariantResult, evaluate, invariant, to_polynomial

__all__ = [
    "BUNDLED_BRACKETS",
    "Biquandle",
    "BracketViolation",
    "Coloring",
    "Crossing",
    "InvariantResult",
    "LinkDiagram",
    "LinkEntry",
    "NotAUnit",
    "PowerBracket",
    "RingElem",
    "RingZm",
    "SearchConfig",
    "UnknownLink",
    "alexander",
    "constant_action",
    "counting_invariant",
    "enumerate_colorings",
    "evaluate",
    "from_standard",
    "invariant",
    "link_components",
    "list_links",
    "load",
    "load_bundled",
    "orbit_decomposition",
    "parse_bracket",
    "search",
    "search_space_estimate",
    "serialize_bracket",
    "state_components",
    "to_polynomial",
    "units",
    "verify",
    "writhe",
]
