"""Search for power brackets over a biquandle and modulus Z_m.

Exhaustive mode enumerates candidates with staged pruning: per-element
diagonal quadruples (A, B, Abar, Bbar at (x, x)) are filtered by the kink
axiom, per-pair quadruples by the reverse type II axiom, and surviving
combinations by the triangle axiom, for every choice of unit w and delta
table.  Randomized mode solves each orbit block's restricted system the
same way, then fills cross-orbit coefficients and delta values uniformly
at random for up to max_candidates attempts.

Every emitted bracket is re-verified from scratch before emission.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .biquandle import Biquandle, orbit_decomposition
from .bracket import PowerBracket, verify
from .modring import RingZm


@dataclass(frozen=True)
class SearchConfig:
    biquandle: Biquandle
    modulus: int
    mode: str = "exhaustive"  # or "randomized"
    seed: int | None = None
    max_candidates: int | None = None
    filter_axiom_i: bool = True
    filter_axiom_ii: bool = True
    initial: PowerBracket | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "randomized"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "randomized":
            if self.seed is None or self.max_candidates is None:
                raise ValueError("randomized mode requires seed and max_candidates")
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")


def search_space_estimate(n: int, m: int) -> dict[str, int]:
    """Candidate-count formulas: as printed in the source analysis and naive.

    The printed formula 4 n^(2m+1) (2^n - 1)^m does not agree with the naive
    parameter count m^(4 n^2) * |units(Z_m)| * m^(2^n); both are reported.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    printed = 4 * n ** (2 * m + 1) * (2**n - 1) ** m
    naive = m ** (4 * n * n) * len(RingZm(m).unit_values()) * m ** (2**n)
    return {"printed_formula": printed, "naive_count": naive}


def _subset_masks(elements) -> list[int]:
    """Nonempty bitmasks over the given elements (1-based bit positions)."""
    bits = [1 << (e - 1) for e in elements]
    out = []
    for pick in range(1, 1 << len(bits)):
        mask = 0
        for i, b in enumerate(bits):
            if pick >> i & 1:
                mask |= b
        out.append(mask)
    return sorted(set(out))


def _axiom_i_ok(X, m, w, winv, delta, x, quad, masks) -> bool:
    A, B, Ab, Bb = quad
    sx = X.under(x, x)
    xb, sb = 1 << (x - 1), 1 << (sx - 1)
    for C in masks:
        for need, other in ((xb, sb), (sb, xb)):
            if not C & need:
                continue
            if w * delta[C] % m != (A * delta[C] * delta[other] + B * delta[C | other]) % m:
                return False
            if winv * delta[C] % m != (Ab * delta[C] * delta[other] + Bb * delta[C | other]) % m:
                return False
    return True


def _axiom_ii_ok(X, m, delta, x, y, quad, masks) -> bool:
    A, B, Ab, Bb = quad
    d = delta
    xb, yb = 1 << (x - 1), 1 << (y - 1)
    ub, vb = 1 << (X.under(x, y) - 1), 1 << (X.over(y, x) - 1)
    uv, xy = ub | vb, xb | yb
    AA, BA, AB, BB = A * Ab, B * Ab, A * Bb, B * Bb
    for C1 in masks:
        for C2 in masks:
            both = C1 | C2
            if (C1 & xy) == xy and (C2 & xy) == xy:
                if d[both] != (AA * d[C1] * d[C2] * d[uv] + BA * d[C1 | uv] * d[C2]
                               + AB * d[C1] * d[C2 | uv] + BB * d[both | uv]) % m:
                    return False
            if C1 & xb and C2 & yb:
                if d[C1] * d[C2] % m != (AA * d[both] * d[uv] + BA * d[both | uv]
                                         + AB * d[both | uv]
                                         + BB * d[C1 | vb] * d[C2 | ub]) % m:
                    return False
            if (both & uv) == uv:
                if d[both] != (AA * d[C1] * d[C2] * d[xy] + AB * d[C1 | xy] * d[C2]
                               + BA * d[C1] * d[C2 | xy] + BB * d[both | xy]) % m:
                    return False
            if C1 & vb and C2 & ub:
                if d[C1] * d[C2] % m != (AA * d[both] * d[xy] + AB * d[both | xy]
                                         + BA * d[both | xy]
                                         + BB * d[C1 | xb] * d[C2 | yb]) % m:
                    return False
    return True


def _pair_sets(cfg: SearchConfig, block, delta, w, winv):
    """Per ordered pair in the block: quadruples passing the staged filters.

    Returns None as soon as some pair admits no quadruple.  This is the
    restricted system of the block: axiom quantifiers range over subsets
    of the block only; the triangle axiom and the full verification are
    left to the caller.
    """
    X, m = cfg.biquandle, cfg.modulus
    masks = _subset_masks(block)
    values = range(m)
    pair_sets = {}
    for x in block:
        for y in block:
            quads = []
            for quad in product(values, repeat=4):
                if x == y and cfg.filter_axiom_i:
                    if not _axiom_i_ok(X, m, w, winv, delta, x, quad, masks):
                        continue
                if cfg.filter_axiom_ii:
                    if not _axiom_ii_ok(X, m, delta, x, y, quad, masks):
                        continue
                quads.append(quad)
            if not quads:
                return None
            pair_sets[(x, y)] = quads
    return pair_sets


def _staged_block_solutions(cfg: SearchConfig, block, delta, w, winv):
    """All coefficient assignments on block x block passing staged filters."""
    pair_sets = _pair_sets(cfg, block, delta, w, winv)
    if pair_sets is None:
        return
    keys = sorted(pair_sets)
    for combo in product(*(pair_sets[k] for k in keys)):
        yield dict(zip(keys, combo))


def _build(cfg: SearchConfig, coeffs, w, delta) -> PowerBracket:
    n = cfg.biquandle.n
    ring = RingZm(cfg.modulus)

    def table(i):
        return tuple(
            tuple(coeffs[(x, y)][i] for y in range(1, n + 1)) for x in range(1, n + 1)
        )

    return PowerBracket(cfg.biquandle, ring, table(0), table(1), table(2), table(3),
                        w, delta)


def _delta_tables(cfg: SearchConfig):
    """All delta tables with delta(empty) = 0, nonempty masks free."""
    n, m = cfg.biquandle.n, cfg.modulus
    size = 1 << n
    for rest in product(range(m), repeat=size - 1):
        yield (0,) + rest


def _exhaustive(cfg: SearchConfig):
    X, m = cfg.biquandle, cfg.modulus
    ring = RingZm(m)
    block = list(X.elements)
    emitted = 0
    for w in ring.unit_values():
        winv = ring.inv(w)
        for delta in _delta_tables(cfg):
            for coeffs in _staged_block_solutions(cfg, block, delta, w, winv):
                b = _build(cfg, coeffs, w, delta)
                if verify(b, first_violation=True):
                    continue
                yield b
                emitted += 1
                if cfg.max_candidates is not None and emitted >= cfg.max_candidates:
                    return


def _randomized(cfg: SearchConfig):
    X, m = cfg.biquandle, cfg.modulus
    ring = RingZm(m)
    rng = random.Random(cfg.seed)
    attempts = 0

    if cfg.initial is not None:
        attempts += 1
        if not verify(cfg.initial, first_violation=True):
            yield cfg.initial

    blocks = orbit_decomposition(X)
    n = X.n
    all_masks = _subset_masks(X.elements)
    block_mask = {}
    for blk in blocks:
        bm = 0
        for e in blk:
            bm |= 1 << (e - 1)
        for e in blk:
            block_mask[e] = bm
    within = [mask for mask in all_masks
              if any(mask | bm == bm for bm in {block_mask[e] for e in X.elements})]
    cross_masks = [mask for mask in all_masks if mask not in within]
    cross_pairs = [
        (x, y)
        for x in X.elements
        for y in X.elements
        if block_mask[x] != block_mask[y]
    ]

    seen = set()
    cache = {}
    while attempts < cfg.max_candidates:
        attempts += 1
        w = rng.choice(ring.unit_values())
        winv = ring.inv(w)
        # delta chosen at random, then each block's restricted system solved
        # exhaustively and one solution sampled per block
        delta = [0] * (1 << n)
        for mask in within:
            delta[mask] = rng.randrange(m)
        for mask in cross_masks:
            delta[mask] = rng.randrange(m)
        delta = tuple(delta)
        coeffs = {}
        ok = True
        for blk in blocks:
            bm = block_mask[blk[0]]
            key = (bm, w, tuple(v for mask, v in enumerate(delta) if mask | bm == bm))
            if key not in cache:
                cache[key] = _pair_sets(cfg, blk, delta, w, winv)
            sets = cache[key]
            if sets is None:
                ok = False
                break
            for pair in sorted(sets):
                coeffs[pair] = rng.choice(sets[pair])
        if not ok:
            continue
        for x, y in cross_pairs:
            coeffs[(x, y)] = tuple(rng.randrange(m) for _ in range(4))
        b = _build(cfg, coeffs, w, delta)
        if verify(b, first_violation=True):
            continue
        key = (b.A, b.B, b.Abar, b.Bbar, b.w, b.delta)
        if key in seen:
            continue
        seen.add(key)
        yield b


def search(cfg: SearchConfig):
    """Stream of verified power brackets per the configured strategy."""
    if cfg.mode == "exhaustive":
        yield from _exhaustive(cfg)
    else:
        yield from _randomized(cfg)
