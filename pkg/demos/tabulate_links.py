"""Tabulate every bundled link under each of the three tabulated brackets.

Rows are grouped by polynomial, so links the bracket cannot distinguish
share a line.
"""

from powerbracket import invariant, list_links, load, load_bundled, to_polynomial


def main():
    for name in ("z5_2elt", "z5_3elt", "z6_4elt"):
        b = load_bundled(name)
        groups = {}
        for link in list_links():
            poly = to_polynomial(invariant(load(link).diagram, b.biquandle, b))
            groups.setdefault(poly, []).append(link)
        print(f"== {name} ==")
        width = max(len(p) for p in groups)
        for poly, links in sorted(groups.items()):
            print(f"{poly:>{width}} | {', '.join(links)}")
        print()


if __name__ == "__main__":
    main()
