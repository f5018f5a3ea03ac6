"""Finite biquandles as operation tables.

Elements are 1-based (1..n) so that operation tables read exactly like the
printed tables they are usually copied from.  A biquandle carries two n x n
tables: ``U`` for the under-operation x ?- y (row x, column y) and ``O`` for
the over-operation x ?~ y.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modring import NotAUnit, RingElem, RingZm

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Violation:
    """One failed biquandle axiom with a witness tuple of elements."""

    axiom: str  # "idem", "invertible", or "exchange"
    witness: tuple[int, ...]

    def __str__(self) -> str:
        return f"axiom {self.axiom} fails at {self.witness}"


class InvalidBiquandle(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        head = "; ".join(str(v) for v in violations[:4])
        more = "" if len(violations) <= 4 else f" (+{len(violations) - 4} more)"
        super().__init__(f"not a biquandle: {head}{more}")


def _check_shape(n: int, table) -> Table:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"table must be {n}x{n}")
    for r in rows:
        for v in r:
            if not 1 <= v <= n:
                raise ValueError(f"table entry {v} out of range 1..{n}")
    return rows


def check_axioms(U, O) -> list[Violation]:
    """All axiom violations of a pair of raw n x n tables (empty iff valid)."""
    n = len(U)
    U = _check_shape(n, U)
    O = _check_shape(n, O)
    out: list[Violation] = []
    rng = range(1, n + 1)

    for x in rng:
        if U[x - 1][x - 1] != O[x - 1][x - 1]:
            out.append(Violation("idem", (x,)))

    # Column maps x -> x?-y and x -> x?~y must be bijections, as must
    # S(x, y) = (y?~x, x?-y) on pairs.
    for y in rng:
        if len({U[x - 1][y - 1] for x in rng}) != n:
            out.append(Violation("invertible", (y,)))
        if len({O[x - 1][y - 1] for x in rng}) != n:
            out.append(Violation("invertible", (y,)))
    s_images = {(O[y - 1][x - 1], U[x - 1][y - 1]) for x in rng for y in rng}
    if len(s_images) != n * n:
        out.append(Violation("invertible", ()))

    for x in rng:
        for y in rng:
            for z in rng:
                xuy, xuz = U[x - 1][y - 1], U[x - 1][z - 1]
                xoy, xoz = O[x - 1][y - 1], O[x - 1][z - 1]
                zuy, zoy = U[z - 1][y - 1], O[z - 1][y - 1]
                yuz, yoz = U[y - 1][z - 1], O[y - 1][z - 1]
                ok = (
                    U[xuy - 1][zuy - 1] == U[xuz - 1][yoz - 1]
                    and O[xuy - 1][zuy - 1] == U[xoz - 1][yoz - 1]
                    and O[xoy - 1][zoy - 1] == O[xoz - 1][yuz - 1]
                )
                if not ok:
                    out.append(Violation("exchange", (x, y, z)))
    return out


@dataclass(frozen=True)
class Biquandle:
    """A validated finite biquandle on {1..n}."""

    U: Table
    O: Table

    @property
    def n(self) -> int:
        return len(self.U)

    def under(self, x: int, y: int) -> int:
        """x ?- y."""
        return self.U[x - 1][y - 1]

    def over(self, x: int, y: int) -> int:
        """x ?~ y."""
        return self.O[x - 1][y - 1]

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)


def validate(U, O) -> Biquandle:
    """Build a Biquandle from raw tables, raising InvalidBiquandle on failure."""
    violations = check_axioms(U, O)
    if violations:
        raise InvalidBiquandle(violations)
    return Biquandle(_check_shape(len(U), U), _check_shape(len(U), O))


def constant_action(sigma) -> Biquandle:
    """The biquandle with x?-y = x?~y = sigma(x) for a permutation sigma of 1..n."""
    sigma = tuple(int(v) for v in sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {sigma}")
    table = tuple(tuple(sigma[x - 1] for _ in range(n)) for x in range(1, n + 1))
    return validate(table, table)


def alexander(m: int, s: int | RingElem, t: int | RingElem) -> Biquandle:
    """The Alexander biquandle on Z_m: x?-y = tx + (s-t)y, x?~y = sx.

    Elements 1..m encode residues 0..m-1; s and t must be units of Z_m.
    """
    ring = RingZm(m)
    s, t = int(s) % m, int(t) % m
    for v in (s, t):
        if not ring.is_unit(v):
            raise NotAUnit(f"{v} is not a unit mod {m}")
    U = tuple(
        tuple((t * x + (s - t) * y) % m + 1 for y in range(m)) for x in range(m)
    )
    O = tuple(tuple((s * x) % m + 1 for _y in range(m)) for x in range(m))
    return validate(U, O)


def orbit_decomposition(X: Biquandle) -> list[list[int]]:
    """The finest partition of {1..n} closed under both operations.

    Blocks are the classes of the equivalence closure of x ~ x?-y and
    x ~ x?~y over all y; returned sorted, each block ascending.
    """
    parent = list(range(X.n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for x in X.elements:
        for y in X.elements:
            union(x, X.under(x, y))
            union(x, X.over(x, y))
    blocks: dict[int, list[int]] = {}
    for x in X.elements:
        blocks.setdefault(find(x), []).append(x)
    return sorted(blocks.values())


def sub_biquandle(X: Biquandle, block) -> tuple[Biquandle, dict[int, int]]:
    """The induced biquandle on a block closed under both operations.

    Returns the relabeled biquandle on 1..len(block) plus the map from new
    labels back to elements of X.
    """
    block = sorted(block)
    index = {x: i + 1 for i, x in enumerate(block)}
    for x in block:
        for y in block:
            if X.under(x, y) not in index or X.over(x, y) not in index:
                raise ValueError(f"block {block} is not closed under the operations")
    U = tuple(tuple(index[X.under(x, y)] for y in block) for x in block)
    O = tuple(tuple(index[X.over(x, y)] for y in block) for x in block)
    return validate(U, O), {i + 1: x for i, x in enumerate(block)}


def parse(text: str) -> Biquandle:
    """Parse the biquandle text format.

    Line 1: ``biquandle <n>``; then n whitespace-separated rows of the
    under-table followed by n rows of the over-table.  ``#`` starts a comment.
    """
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if len(tokens) < 2 or tokens[0] != "biquandle":
        raise ValueError("expected header 'biquandle <n>'")
    n = int(tokens[1])
    body = tokens[2:]
    if len(body) != 2 * n * n:
        raise ValueError(f"expected {2 * n * n} table entries, got {len(body)}")
    vals = [int(v) for v in body]
    U = tuple(tuple(vals[i * n : (i + 1) * n]) for i in range(n))
    O = tuple(tuple(vals[(n + i) * n : (n + i + 1) * n]) for i in range(n))
    return validate(U, O)


def serialize(X: Biquandle) -> str:
    lines = [f"biquandle {X.n}"]
    for table in (X.U, X.O):
        lines.extend(" ".join(str(v) for v in row) for row in table)
    return "\n".join(lines) + "\n"
