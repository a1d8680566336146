"""Clique-gluing growth toward a locally (n_1 H_1 u ... u n_k H_k) graph, and vertex splitting back.

Growth starts from a finite connected realization of {H_1, ..., H_k}. Each
step takes the oldest unfinished vertex w, whose neighbourhood is some H_j,
and glues sum(n_i) - 1 fresh copies of the base graph onto it, each sharing
only w and placing w in the role of a base vertex whose neighbourhood is the
required H_i. Afterwards w sees exactly n_i copies of each H_i and never
changes again; every new vertex sees some H_j. The infinite limit is only
approached, one step at a time.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..errors import InputError
from ..graph import Graph, components, induced_subgraph, is_connected, iter_bits, neighbourhood_graph
from ..iso import GraphClass, canonical_form
from ..ops import disjoint_union, multiple
from ..profile import neighbourhood_codes, realizes


@dataclass(frozen=True)
class GrowthState:
    graph: Graph
    finalized: frozenset[int]
    frontier: tuple[int, ...]
    base: Graph
    H: GraphClass
    witnesses: tuple[int, ...]
    multiplicities: tuple[int, ...]
    steps: int = 0

    @property
    def target(self) -> Graph:
        """n_1 H_1 u ... u n_k H_k."""
        out = Graph(0, ())
        for h, k in zip(self.H, self.multiplicities):
            out = disjoint_union(out, multiple(k, h))
        return out


def grow_init(base: Graph, H: GraphClass | Iterable[Graph], multiplicities: Sequence[int]) -> GrowthState:
    H = H if isinstance(H, GraphClass) else GraphClass(H)
    mult = tuple(int(k) for k in multiplicities)
    if not H:
        raise InputError("class is empty")
    if len(mult) != len(H):
        raise InputError(f"got {len(mult)} multiplicities for a class of {len(H)} graphs")
    if any(k < 1 for k in mult):
        raise InputError("multiplicities must be positive")
    for i, h in enumerate(H):
        if h.n == 0 or not is_connected(h):
            raise InputError(f"class member {i} is not a nonempty connected graph")
    if base.n == 0 or not is_connected(base):
        raise InputError("base graph must be nonempty and connected")
    if not realizes(base, H):
        raise InputError("base graph does not realize the class")
    codes = neighbourhood_codes(base)
    witnesses = []
    for code in H.codes:
        try:
            witnesses.append(codes.index(code))
        except ValueError:
            raise RuntimeError("realization lacks a witness vertex") from None
    return GrowthState(
        graph=base,
        finalized=frozenset(),
        frontier=tuple(range(base.n)),
        base=base,
        H=H,
        witnesses=tuple(witnesses),
        multiplicities=mult,
    )


def grow_step(state: GrowthState) -> GrowthState:
    if not state.frontier:
        raise InputError("growth frontier is empty")
    G = state.graph
    w = state.frontier[0]
    j0 = state.H.index_of(neighbourhood_graph(G, w))
    if j0 < 0:
        raise RuntimeError(f"vertex {w} has a neighbourhood outside the class")
    # the copy of H_j0 already around w counts toward n_j0
    roles = []
    for j, k in enumerate(state.multiplicities):
        roles.extend([j] * (k - (j == j0)))
    base = state.base
    rows = list(G.adj)
    next_id = G.n
    new_vertices = []
    for j in roles:
        anchor = state.witnesses[j]
        image = {}
        for b in range(base.n):
            if b == anchor:
                image[b] = w
            else:
                image[b] = next_id
                new_vertices.append(next_id)
                rows.append(0)
                next_id += 1
        for x, y in base.edges():
            a, c = image[x], image[y]
            rows[a] |= 1 << c
            rows[c] |= 1 << a
    return GrowthState(
        graph=Graph._trusted(next_id, rows),
        finalized=state.finalized | {w},
        frontier=state.frontier[1:] + tuple(new_vertices),
        base=base,
        H=state.H,
        witnesses=state.witnesses,
        multiplicities=state.multiplicities,
        steps=state.steps + 1,
    )


def grow(state: GrowthState, steps: int) -> list[GrowthState]:
    """Run ``steps`` growth steps; returns the state after each one."""
    out = []
    for _ in range(steps):
        state = grow_step(state)
        out.append(state)
    return out


def split_vertices(G0: Graph, H: GraphClass | Iterable[Graph]) -> Graph:
    """Replace every vertex by one vertex per component of its neighbourhood.

    New vertex (u, C) is adjacent to (v, D) iff v lies in C and u lies in D.
    Then (u, C) sees a copy of G0(C), so a graph whose neighbourhoods are
    disjoint unions of members of H becomes locally H. New ids enumerate
    the pairs by u, then by least vertex of C.
    """
    H = H if isinstance(H, GraphClass) else GraphClass(H)
    codes = set(H.codes)
    comp_of: list[dict[int, int]] = []
    ids: dict[tuple[int, int], int] = {}
    for u in range(G0.n):
        nbrs = list(iter_bits(G0.adj[u]))
        local = neighbourhood_graph(G0, u)
        where = {}
        for ci, comp in enumerate(components(local)):
            sub = induced_subgraph(local, comp)
            if canonical_form(sub) not in codes:
                raise InputError(f"a component of the neighbourhood of vertex {u} is not in the class")
            ids[(u, ci)] = len(ids)
            for x in comp:
                where[nbrs[x]] = ci
        comp_of.append(where)
    rows = [0] * len(ids)
    for u in range(G0.n):
        for v, ci in comp_of[u].items():
            a = ids[(u, ci)]
            b = ids[(v, comp_of[v][u])]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Graph._trusted(len(ids), rows)
