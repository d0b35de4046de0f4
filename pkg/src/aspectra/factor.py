"""Exact {P3, P4, P5}-factor decisions, a brute-force oracle and the isolated-vertex audit."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph

MAX_DP_ORDER = 20
MAX_ORACLE_ORDER = 12
MAX_KANO_ORDER = 24
MAX_PGE3_ORDER = 12
BLOCK_SIZES = (3, 4, 5)


class CapacityError(ValueError):
    """Input is larger than an exhaustive routine is built for."""


@dataclass(frozen=True)
class FactorCertificate:
    blocks: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph, sizes: Sequence[int] = BLOCK_SIZES) -> bool:
        seen: list[int] = []
        for block in self.blocks:
            if len(block) not in sizes:
                return False
            if any(not g.adjacent(u, v) for u, v in zip(block, block[1:])):
                return False
            seen.extend(block)
        return sorted(seen) == list(range(g.order))

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in block) for block in self.blocks)

    @classmethod
    def from_text(cls, text: str) -> "FactorCertificate":
        blocks = []
        for line in text.splitlines():
            line = line.strip()
            if line:
                blocks.append(tuple(int(tok) for tok in line.split()))
        return cls(tuple(blocks))


@dataclass(frozen=True)
class FactorOutcome:
    has_factor: bool
    certificate: FactorCertificate | None
    method: str

    def __post_init__(self):
        if self.has_factor and self.certificate is None:
            raise ValueError("a positive outcome needs a certificate")


def hamilton_path_in_block(g: Graph, block: Sequence[int]) -> tuple[int, ...] | None:
    """First vertex order (lexicographically) that is a path of ``g``, if any."""
    block = sorted(block)
    if not 3 <= len(block) <= 5:
        raise ValueError(f"block size must be 3, 4 or 5, got {len(block)}")
    return _spanning_path(g, block)


def _spanning_path(g: Graph, block: Sequence[int]) -> tuple[int, ...] | None:
    for order in itertools.permutations(block):
        if order[0] > order[-1]:
            continue  # reversal of an order already tried
        if all(g.adjacent(u, v) for u, v in zip(order, order[1:])):
            return order
    return None


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _connected_blocks(g: Graph, root: int, max_size: int) -> list[frozenset[int]]:
    """Connected vertex sets of size 3..max_size whose minimum vertex is ``root``."""
    allowed = ~((1 << (root + 1)) - 1)
    found: set[frozenset[int]] = set()
    adj = g.masks

    def grow(current: frozenset[int], frontier: int):
        if len(current) >= 3:
            found.add(current)
        if len(current) == max_size:
            return
        m = frontier
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            nxt = current | {v}
            if nxt in seen:
                continue
            seen.add(nxt)
            grow(nxt, (frontier | adj[v]) & allowed & ~_mask_of(nxt))

    seen: set[frozenset[int]] = set()
    grow(frozenset([root]), adj[root] & allowed)
    return sorted(found, key=lambda b: (sorted(b)))


def _path_blocks(g: Graph) -> list[list[tuple[int, tuple[int, ...]]]]:
    """For each vertex v: (mask, path) for every block with min vertex v that has a spanning path."""
    out = []
    for v in range(g.order):
        entries = []
        for block in _connected_blocks(g, v, 5):
            p = _spanning_path(g, sorted(block))
            if p is not None:
                entries.append((_mask_of(block), p))
        entries.sort(key=lambda e: sorted(e[1]))
        out.append(entries)
    return out


def has_p345_factor(g: Graph) -> FactorOutcome:
    """Exact decision by memoised subset search over vertex bitmasks.

    The block covering the lowest uncovered vertex is chosen first, so each
    partition is reached along exactly one branch.
    """
    n = g.order
    if n < 1:
        raise ValueError("factor search needs at least one vertex")
    if n > MAX_DP_ORDER:
        raise CapacityError(f"order {n} exceeds the bitmask search limit {MAX_DP_ORDER}")
    if n < 3:
        return FactorOutcome(False, None, "bitmask-dp")
    blocks = _path_blocks(g)
    full = (1 << n) - 1
    memo: dict[int, tuple[int, tuple[int, ...]] | None] = {}
    dead = set()

    def solve(rem: int) -> bool:
        if rem == 0:
            return True
        if rem in dead:
            return False
        low = (rem & -rem).bit_length() - 1
        for mask, p in blocks[low]:
            if mask & rem == mask and solve(rem & ~mask):
                memo[rem] = (mask, p)
                return True
        dead.add(rem)
        return False

    if not solve(full):
        return FactorOutcome(False, None, "bitmask-dp")
    chosen = []
    rem = full
    while rem:
        mask, p = memo[rem]
        chosen.append(p)
        rem &= ~mask
    return FactorOutcome(True, FactorCertificate(tuple(chosen)), "bitmask-dp")


def brute_force_factor_oracle(g: Graph) -> FactorOutcome:
    """Enumerates every set partition into parts of size 3 to 5 and checks each part."""
    n = g.order
    if n > MAX_ORACLE_ORDER:
        raise CapacityError(f"order {n} exceeds the brute-force limit {MAX_ORACLE_ORDER}")
    cache: dict[tuple[int, ...], tuple[int, ...] | None] = {}

    def check(part: tuple[int, ...]):
        if part not in cache:
            cache[part] = hamilton_path_in_block(g, part)
        return cache[part]

    def partitions(rest: tuple[int, ...]):
        if not rest:
            yield []
            return
        first, others = rest[0], rest[1:]
        for k in BLOCK_SIZES:
            if k - 1 > len(others):
                break
            for combo in itertools.combinations(others, k - 1):
                part = (first,) + combo
                remaining = tuple(v for v in others if v not in combo)
                for tail in partitions(remaining):
                    yield [part] + tail

    for parts in partitions(tuple(range(n))):
        paths = []
        for part in parts:
            p = check(part)
            if p is None:
                break
            paths.append(p)
        else:
            if parts:
                return FactorOutcome(True, FactorCertificate(tuple(paths)), "brute-oracle")
    return FactorOutcome(False, None, "brute-oracle")


@dataclass(frozen=True)
class KanoReport:
    holds: bool
    worst_set: tuple[int, ...]
    worst_margin: Fraction
    subsets_examined: int
    # same audit restricted to non-empty S
    holds_nonempty: bool = True
    worst_set_nonempty: tuple[int, ...] = ()
    worst_margin_nonempty: Fraction = field(default=Fraction(0))

    @property
    def conventions_agree(self) -> bool:
        return self.holds == self.holds_nonempty


def isolated_after_removal(g: Graph, s_mask: int) -> int:
    """i(G - S) for S given as a bitmask."""
    count = 0
    for v, m in enumerate(g.masks):
        if not (s_mask >> v) & 1 and m & ~s_mask == 0:
            count += 1
    return count


def kano_condition(g: Graph) -> KanoReport:
    """Maximum of i(G - S) - (2/3)|S| over every proper subset S of V(G), empty set included."""
    n = g.order
    if n < 1:
        raise ValueError("the isolated-vertex audit needs at least one vertex")
    if n > MAX_KANO_ORDER:
        raise CapacityError(f"order {n} exceeds the subset sweep limit {MAX_KANO_ORDER}")
    total = 1 << n
    masks = np.arange(total - 1, dtype=np.uint32)  # excludes S = V(G)
    iso = np.zeros(total - 1, dtype=np.int16)
    for v, nb in enumerate(g.masks):
        out_s = (masks >> np.uint32(v)) & np.uint32(1) == 0
        iso += out_s & ((masks & np.uint32(nb)) == np.uint32(nb))
    size = np.zeros(total - 1, dtype=np.int16)
    for v in range(n):
        size += ((masks >> np.uint32(v)) & np.uint32(1)).astype(np.int16)
    # 3 * margin keeps everything integral
    score = 3 * iso.astype(np.int32) - 2 * size.astype(np.int32)

    def pick(sc: np.ndarray, offset: int) -> tuple[tuple[int, ...], Fraction]:
        best = int(np.argmax(sc))  # first maximiser in mask order
        mask = best + offset
        return tuple(v for v in range(n) if (mask >> v) & 1), Fraction(int(sc[best]), 3)

    worst_set, margin = pick(score, 0)
    if total - 1 > 1:
        ne_set, ne_margin = pick(score[1:], 1)
    else:
        ne_set, ne_margin = (), Fraction(-10**9)
    return KanoReport(
        holds=margin <= 0,
        worst_set=worst_set,
        worst_margin=margin,
        subsets_examined=total - 1,
        holds_nonempty=ne_margin <= 0,
        worst_set_nonempty=ne_set,
        worst_margin_nonempty=ne_margin,
    )


def _hamiltonian_masks(g: Graph) -> list[bool]:
    """ham[mask] is True iff g[mask] has a spanning path (single vertices count)."""
    n = g.order
    adj = g.masks
    total = 1 << n
    ends = [0] * total  # bitmask of possible path endpoints
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, total):
        e = ends[mask]
        if not e:
            continue
        m = e
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            ext = adj[v] & ~mask
            while ext:
                lw = ext & -ext
                u = lw.bit_length() - 1
                ext ^= lw
                ends[mask | lw] |= lw
    return [bool(e) for e in ends]


def has_pge3_factor(g: Graph) -> bool:
    """Partition into paths on at least three vertices, any length allowed."""
    n = g.order
    if n > MAX_PGE3_ORDER:
        raise CapacityError(f"order {n} exceeds the P>=3 search limit {MAX_PGE3_ORDER}")
    if n < 3:
        return False
    ham = _hamiltonian_masks(g)
    total = 1 << n
    good = [False] * total
    good[0] = True
    for mask in range(1, total):
        low = mask & -mask
        rest = mask ^ low
        sub = rest
        while True:
            block = sub | low
            if block.bit_count() >= 3 and ham[block] and good[mask ^ block]:
                good[mask] = True
                break
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return good[total - 1]


def p_ge3_equivalence(g: Graph) -> bool:
    """True iff P>=3-factor existence matches {P3,P4,P5}-factor existence."""
    if g.order > MAX_PGE3_ORDER:
        raise CapacityError(f"order {g.order} exceeds the P>=3 search limit {MAX_PGE3_ORDER}")
    return has_pge3_factor(g) == has_p345_factor(g).has_factor
