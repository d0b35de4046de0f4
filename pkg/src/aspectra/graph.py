"""Finite simple graphs and the union/join algebra used to build extremal families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``.

    Adjacency is kept as one integer bitmask per vertex, so edge lookup and
    neighbourhood tests are single bit operations.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"order must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = tuple(masks)
        n = len(masks)
        for v, m in enumerate(masks):
            if m >> n or (m >> v) & 1:
                raise ValueError(f"invalid neighbour mask for vertex {v}")
            for u in range(n):
                if (m >> u) & 1 and not (masks[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g._n = n
        g._adj = masks
        return g

    @property
    def order(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbour bitmask of every vertex."""
        return self._adj

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        m = self._adj[v]
        return [u for u in range(self._n) if (m >> u) & 1]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self._n):
            m = self._adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    yield (u, v)
                m >>= 1
                v += 1

    def size(self) -> int:
        """Number of edges."""
        return sum(self.degrees()) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(order={self._n}, size={self.size()})"


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of K_s v (K_{n - floor(5s/3) - 1} u (floor(2s/3) + 1) K_1)."""

    n: int
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"s must be positive, got {self.s}")
        if self.n < (5 * self.s) // 3 + 1:
            raise ValueError(
                f"family undefined: n={self.n} < floor(5s/3)+1={(5 * self.s) // 3 + 1}"
            )

    @property
    def clique2_size(self) -> int:
        return self.n - (5 * self.s) // 3 - 1

    @property
    def independents(self) -> int:
        return (2 * self.s) // 3 + 1

    @property
    def cells(self) -> list[list[int]]:
        """Vertex cells (K_s | middle clique | independents) in construction order.

        The middle cell is empty when ``n = floor(5s/3) + 1``.
        """
        s, c = self.s, self.clique2_size
        return [
            list(range(s)),
            list(range(s, s + c)),
            list(range(s + c, self.n)),
        ]


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_masks(full & ~(1 << v) for v in range(n))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with vertex 0 as the centre."""
    if n < 1:
        raise ValueError(f"star needs at least one vertex, got {n}")
    return Graph(n, ((0, v) for v in range(1, n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on indices ``0..|g|-1`` followed by ``h``; no cross edges."""
    k = g.order
    return Graph.from_masks(list(g.masks) + [m << k for m in h.masks])


def copies(t: int, g: Graph) -> Graph:
    if t < 1:
        raise ValueError(f"number of copies must be positive, got {t}")
    out = g
    for _ in range(t - 1):
        out = disjoint_union(out, g)
    return out


def join(g: Graph, h: Graph) -> Graph:
    k, m = g.order, h.order
    right = ((1 << m) - 1) << k
    left = (1 << k) - 1
    masks = [a | right for a in g.masks] + [(b << k) | left for b in h.masks]
    return Graph.from_masks(masks)


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``V(g) - s`` with compacted indices.

    Returns the subgraph and the map from old to new vertex indices.
    """
    removed = set(s)
    for v in removed:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range for order {g.order}")
    keep = [v for v in range(g.order) if v not in removed]
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges() if u in relabel and v in relabel]
    return Graph(len(keep), edges), relabel


def isolated_count(g: Graph) -> int:
    return sum(1 for m in g.masks if m == 0)


def is_connected(g: Graph) -> bool:
    n = g.order
    if n == 0:
        return True
    seen = 1
    frontier = 1
    adj = g.masks
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def extremal_g1(spec: FamilySpec) -> Graph:
    """K_s v (K_{n-floor(5s/3)-1} u (floor(2s/3)+1) K_1) on exactly ``spec.n`` vertices."""
    inner = disjoint_union(complete(spec.clique2_size), empty(spec.independents))
    return join(complete(spec.s), inner)


def exception_graph(n: int) -> Graph:
    """K_1 v (K_{n-2} u K_1): vertex 0 dominates, vertex n-1 is pendant."""
    if n < 3:
        raise ValueError(f"exception graph needs n >= 3, got {n}")
    return join(complete(1), disjoint_union(complete(n - 2), complete(1)))
