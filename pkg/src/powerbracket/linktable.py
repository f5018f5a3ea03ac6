"""Bundled diagrams for the 16 prime links with up to 7 crossings.

Diagrams are frozen data files in the native format under ``data/links``.
The environment variable ``POWERBRACKET_LINK_DIR`` overrides the bundled
directory; auxiliary Reidemeister move pair diagrams live in ``data/moves``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from .diagram import LinkDiagram, link_components, parse

NAMES = (
    "L2a1", "L4a1", "L5a1",
    "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1",
    "L7a1", "L7a2", "L7a3", "L7a4", "L7a5", "L7a6", "L7a7",
    "L7n1", "L7n2",
)

# expected number of link components per bundled diagram
_COMPONENTS = {
    "L2a1": 2, "L4a1": 2, "L5a1": 2,
    "L6a1": 2, "L6a2": 2, "L6a3": 2, "L6a4": 3, "L6a5": 3, "L6n1": 3,
    "L7a1": 2, "L7a2": 2, "L7a3": 2, "L7a4": 2, "L7a5": 2, "L7a6": 2,
    "L7a7": 3, "L7n1": 2, "L7n2": 2,
}


class UnknownLink(KeyError):
    """Requested name is not one of the bundled links."""


@dataclass(frozen=True)
class LinkEntry:
    name: str
    diagram: LinkDiagram
    components: int


def _read(name: str) -> str:
    override = os.environ.get("POWERBRACKET_LINK_DIR")
    if override:
        path = os.path.join(override, name + ".txt")
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    ref = resources.files("powerbracket") / "data" / "links" / (name + ".txt")
    return ref.read_text(encoding="utf-8")


def load(name: str) -> LinkEntry:
    """The bundled diagram for one link name."""
    if name not in _COMPONENTS:
        raise UnknownLink(name)
    d = parse(_read(name))
    comps = _COMPONENTS[name]
    found = link_components(d)
    if d.name != name or found != comps:
        raise ValueError(
            f"bundled data for {name} is corrupt: name {d.name!r}, "
            f"{found} components (expected {comps})"
        )
    return LinkEntry(name, d, comps)


def list_links() -> list[str]:
    """All bundled link names, sorted."""
    return sorted(NAMES)


def load_move_diagram(name: str) -> LinkDiagram:
    """One of the auxiliary Reidemeister pair diagrams from data/moves."""
    ref = resources.files("powerbracket") / "data" / "moves" / (name + ".txt")
    return parse(ref.read_text(encoding="utf-8"))
