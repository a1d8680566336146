"""Graph operations: unions, joins, products, complement, powers, line graphs, expansion.

Product-like operations number the pair vertex ``(u1, u2)`` as ``u1 * n2 + u2``.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import InputError
from .graph import Graph, complete, iter_bits


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """G1 on ids 0..n1-1, G2 shifted to n1..n1+n2-1."""
    shift = G1.n
    return Graph._trusted(G1.n + G2.n, list(G1.adj) + [row << shift for row in G2.adj])


def multiple(k: int, H: Graph) -> Graph:
    """kH: k disjoint copies of H, copy i on ids i*|H|..(i+1)*|H|-1."""
    if k < 1:
        raise InputError(f"multiple needs k >= 1, got {k}")
    rows = []
    for i in range(k):
        shift = i * H.n
        rows.extend(row << shift for row in H.adj)
    return Graph._trusted(k * H.n, rows)


def join(G1: Graph, G2: Graph) -> Graph:
    """G1 + G2: disjoint union plus every edge between the two sides."""
    n1, n2 = G1.n, G2.n
    side1 = (1 << n1) - 1
    side2 = ((1 << n2) - 1) << n1
    rows = [row | side2 for row in G1.adj] + [(row << n1) | side1 for row in G2.adj]
    return Graph._trusted(n1 + n2, rows)


def composition(G1: Graph, G2: Graph) -> Graph:
    """Lexicographic product G1[G2]."""
    n2 = G2.n
    block = (1 << n2) - 1
    rows = []
    for u1 in range(G1.n):
        outer = 0
        for v1 in iter_bits(G1.adj[u1]):
            outer |= block << (v1 * n2)
        shift = u1 * n2
        rows.extend(outer | (row << shift) for row in G2.adj)
    return Graph._trusted(G1.n * n2, rows)


def cartesian_product(G1: Graph, G2: Graph) -> Graph:
    """G1 x G2: (u1,u2)~(v1,v2) iff one coordinate is equal and the other adjacent."""
    n2 = G2.n
    rows = []
    for u1 in range(G1.n):
        shift = u1 * n2
        for u2 in range(n2):
            r = G2.adj[u2] << shift
            for v1 in iter_bits(G1.adj[u1]):
                r |= 1 << (v1 * n2 + u2)
            rows.append(r)
    return Graph._trusted(G1.n * n2, rows)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph._trusted(G.n, [full & ~row & ~(1 << v) for v, row in enumerate(G.adj)])


def power(G: Graph, k: int) -> Graph:
    """G^k: u~v iff 1 <= dist(u, v) <= k."""
    if k < 1:
        raise InputError(f"power needs k >= 1, got {k}")
    rows = []
    for v in range(G.n):
        reach = frontier = 1 << v
        for _ in range(k):
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~reach
            if not frontier:
                break
            reach |= frontier
        rows.append(reach & ~(1 << v))
    return Graph._trusted(G.n, rows)


def line_graph(G: Graph) -> Graph:
    """L(G); vertex i is the i-th edge of ``G.edges()``."""
    edges = G.edges()
    if not edges:
        raise InputError("line graph of an edgeless graph is undefined")
    at: list[int] = [0] * G.n
    for i, (u, v) in enumerate(edges):
        at[u] |= 1 << i
        at[v] |= 1 << i
    rows = [(at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return Graph._trusted(len(edges), rows)


def subdivide(G: Graph) -> Graph:
    """Insert one new vertex on every edge; edge i gets id G.n + i."""
    edges = G.edges()
    return Graph.from_edges(
        G.n + len(edges),
        [pair for i, (u, v) in enumerate(edges) for pair in ((u, G.n + i), (v, G.n + i))],
    )


def expansion(G: Graph, parts: Sequence[Graph]) -> Graph:
    """G <- [H_1..H_n]: replace vertex i of G by ``parts[i]``.

    Parts occupy consecutive id blocks in vertex order. Two vertices in
    different blocks are adjacent iff the corresponding vertices of G are.
    """
    if len(parts) != G.n:
        raise InputError(f"expansion needs {G.n} parts, got {len(parts)}")
    offsets = []
    total = 0
    for H in parts:
        offsets.append(total)
        total += H.n
    blocks = [((1 << H.n) - 1) << off for H, off in zip(parts, offsets)]
    rows = []
    for i, (H, off) in enumerate(zip(parts, offsets)):
        outer = 0
        for j in iter_bits(G.adj[i]):
            outer |= blocks[j]
        rows.extend(outer | (row << off) for row in H.adj)
    return Graph._trusted(total, rows)


def blow_up(G: Graph, size: int) -> Graph:
    """G[K_size], the composition with a clique."""
    return composition(G, complete(size))
