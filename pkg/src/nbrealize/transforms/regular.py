"""Regular bipartite graphs, regularization by isolated-vertex padding, and its inverse."""

from __future__ import annotations

from collections.abc import Iterable

from ..errors import InputError
from ..graph import Graph, complete_bipartite, empty, special_edges
from ..iso import GraphClass
from ..ops import cartesian_product, disjoint_union
from ..profile import local_profile, realizes


def bipartite_regular(r: int, n: int) -> Graph:
    """r-regular bipartite graph on X = 0..n-1, Y = n..2n-1 with x_i ~ y_{(i+j) mod n}, j < r."""
    if not 1 <= r <= n:
        raise InputError(f"need 1 <= r <= n, got r={r}, n={n}")
    return Graph.from_edges(2 * n, [(i, n + (i + j) % n) for i in range(n) for j in range(r)])


def regularize(G: Graph, m: int) -> Graph:
    """Turn G into an (m + p)-regular graph whose neighbourhoods are G's padded with isolated vertices.

    With p, q the maximum and minimum degree, take G x K_{a,a} for a = p - q + m.
    In the K_{a,a} fibre of vertex u, delete a (deg u - q)-regular circulant
    spanning subgraph. A vertex over u then sees G(N(u)) plus
    m + p - deg u isolated vertices.
    """
    if G.n < 1:
        raise InputError("regularize needs a nonempty graph")
    if m < 1:
        raise InputError(f"m must be positive, got {m}")
    degs = G.degrees()
    p, q = max(degs), min(degs)
    a = p - q + m
    star = cartesian_product(G, complete_bipartite(a, a))
    rows = list(star.adj)
    width = 2 * a
    for u in range(G.n):
        base = u * width
        for j in range(degs[u] - q):
            for i in range(a):
                x = base + i
                y = base + a + (i + j) % a
                rows[x] &= ~(1 << y)
                rows[y] &= ~(1 << x)
    return Graph._trusted(star.n, rows)


def padded_class(H: GraphClass | Iterable[Graph], total: int) -> GraphClass:
    """{H_i u O_{total - |H_i|}}: each member padded with isolated vertices to ``total``."""
    members = list(H)
    short = [h.n for h in members if h.n > total]
    if short:
        raise InputError(f"cannot pad a graph of order {short[0]} to {total}")
    return GraphClass(disjoint_union(h, empty(total - h.n)) for h in members)


def regularization_target(G: Graph, m: int) -> GraphClass:
    """The class that ``regularize(G, m)`` realizes."""
    return padded_class(local_profile(G), m + max(G.degrees()))


def strip_special_edges(G: Graph) -> Graph:
    """Delete every edge that lies in no triangle."""
    rows = list(G.adj)
    for u, v in special_edges(G):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph._trusted(G.n, rows)


def unpad_realization(G0: Graph, H: GraphClass | Iterable[Graph]) -> Graph:
    """Recover a realization of H from a realization G0 of a padded version of H.

    Only the case where no member of H has isolated vertices is supported:
    stripping special edges then removes exactly the padding. Members with
    isolated vertices raise InputError.
    """
    H = H if isinstance(H, GraphClass) else GraphClass(H)
    for h in H:
        if any(row == 0 for row in h.adj):
            raise InputError("members with isolated vertices are not supported")
    G = strip_special_edges(G0)
    if not realizes(G, H):
        raise InputError("input is not a realization of a padded version of the class")
    return G
