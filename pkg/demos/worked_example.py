"""Walk through the invariant computation for L4a1 under the Z_6 bracket.

Enumerates the colorings, evaluates the state sum for each one, and prints
the multiset and its polynomial form.
"""

from powerbracket import (
    enumerate_colorings,
    invariant,
    load,
    load_bundled,
    to_polynomial,
)
from powerbracket.statesum import evaluate


def main():
    b = load_bundled("z6_4elt")
    entry = load("L4a1")
    d = entry.diagram
    print(f"{entry.name}: {len(d.crossings)} crossings, "
          f"{entry.components} components, biquandle size {b.biquandle.n}")

    colorings = enumerate_colorings(d, b.biquandle)
    print(f"{len(colorings)} colorings")
    for c in colorings:
        vec = " ".join(f"{s}:{v}" for s, v in c.semiarcs)
        print(f"  {vec}  ->  {evaluate(d, c, b)}")

    r = invariant(d, b.biquandle, b)
    print("multiset:", dict(r.multiset))
    print("polynomial:", to_polynomial(r))


if __name__ == "__main__":
    main()
