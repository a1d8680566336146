"""Finite simple graphs stored as per-vertex adjacency bitsets.

Vertices are the integers ``0..n-1``. ``adj[v]`` is an int whose bit ``u``
is set iff ``u`` and ``v`` are adjacent. Graph values are immutable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import InputError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        if not isinstance(self.adj, tuple):
            object.__setattr__(self, "adj", tuple(self.adj))
        if len(self.adj) != self.n:
            raise InputError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> Graph:
        # Skips validation; callers guarantee symmetry and no loops.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise InputError(f"vertex {v} out of range for graph of order {G.n}")


def neighbourhood(G: Graph, v: int) -> frozenset[int]:
    _check_vertex(G, v)
    return frozenset(iter_bits(G.adj[v]))


def induced_subgraph(G: Graph, U: Iterable[int]) -> Graph:
    """Subgraph induced by ``U``, relabelled order-preservingly onto ``0..|U|-1``."""
    verts = sorted(set(U))
    for v in verts:
        _check_vertex(G, v)
    return _induced(G, verts)


def _induced(G: Graph, verts: Sequence[int]) -> Graph:
    # verts must be sorted, distinct and in range
    pos = {v: i for i, v in enumerate(verts)}
    sel = mask_of(verts)
    rows = []
    for v in verts:
        r = 0
        for u in iter_bits(G.adj[v] & sel):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._trusted(len(verts), rows)


def neighbourhood_graph(G: Graph, v: int) -> Graph:
    """G(N(v)): the subgraph induced by the neighbours of ``v``."""
    _check_vertex(G, v)
    return _induced(G, list(iter_bits(G.adj[v])))


def dominating_vertices(G: Graph) -> frozenset[int]:
    return frozenset(v for v in range(G.n) if G.adj[v].bit_count() == G.n - 1)


def special_edges(G: Graph) -> list[tuple[int, int]]:
    """Edges lying in no triangle."""
    return [(u, v) for u, v in G.edges() if not G.adj[u] & G.adj[v]]


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    out = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def is_regular(G: Graph) -> bool:
    return len(set(G.degrees())) <= 1


# named families


def complete(n: int) -> Graph:
    if n < 0:
        raise InputError("K_n needs n >= 0")
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    if n < 0:
        raise InputError("O_n needs n >= 0")
    return Graph._trusted(n, [0] * n)


def cycle(n: int) -> Graph:
    """C_n with edges i ~ i+1 (mod n)."""
    if n < 3:
        raise InputError("C_n needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """P_n with edges i ~ i+1."""
    if n < 1:
        raise InputError("P_n needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts occupy consecutive id ranges in the given order."""
    if any(s < 1 for s in sizes):
        raise InputError(f"part sizes must be positive, got {list(sizes)}")
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        rows.extend([full & ~part] * s)
        start += s
    return Graph._trusted(n, rows)


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: part X = 0..m-1, part Y = m..m+n-1."""
    return complete_multipartite([m, n])


_FAMILIES = {
    "complete": (complete, 1),
    "empty": (empty, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete_bipartite": (complete_bipartite, 2),
}


def make_family(kind: str, *params) -> Graph:
    """Build a named graph: ``make_family("cycle", 5)``,
    ``make_family("complete_multipartite", [2, 2, 2])`` etc."""
    if kind == "complete_multipartite":
        if len(params) == 1 and isinstance(params[0], (list, tuple)):
            params = tuple(params[0])
        if not params:
            raise InputError("complete_multipartite needs at least one part")
        return complete_multipartite([int(p) for p in params])
    try:
        fn, arity = _FAMILIES[kind]
    except KeyError:
        raise InputError(f"unknown family {kind!r}") from None
    if len(params) != arity:
        raise InputError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))
