"""Canonical forms, isomorphism testing and isomorphism-class deduplication.

The canonical form is found by individualization-refinement: an equitable
colour refinement of an ordered partition, then a search tree that
individualizes one vertex of the first non-singleton cell at a time. Every
leaf is a vertex ordering; the canonical code is the graph6 string of the
leaf whose upper-triangle bit string is lexicographically least. Subtrees
are skipped when a known automorphism fixing the current prefix maps their
root vertex onto an already explored sibling. Automorphisms come from two
sources: swaps of twin vertices (known up front) and pairs of leaves with
equal codes.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .formats import _encode_n, pack_bits
from .graph import Graph, iter_bits, mask_of


def _refine(adj: Sequence[int], cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    """Refine an ordered partition until it is equitable.

    ``queue`` holds splitter masks. Fragments of a split cell are ordered by
    their neighbour count into the splitter, which keeps the procedure
    independent of vertex names.
    """
    qi = 0
    n_cells = len(cells)
    n = sum(len(c) for c in cells)
    while qi < len(queue) and n_cells < n:
        splitter = queue[qi]
        qi += 1
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[v] & splitter).bit_count() for v in cell]
            c0 = counts[0]
            if all(c == c0 for c in counts):
                out.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                buckets.setdefault(c, []).append(v)
            for c in sorted(buckets):
                frag = buckets[c]
                out.append(frag)
                queue.append(mask_of(frag))
            n_cells += len(buckets) - 1
        cells = out
    return cells


def _twin_swaps(adj: Sequence[int], colours: Sequence[int]) -> list[tuple[tuple[int, int], ...]]:
    """Transpositions of true or false twins of equal colour; each is an automorphism."""
    gens = []
    for closed in (True, False):
        groups: dict[tuple[int, int], list[int]] = {}
        for v, row in enumerate(adj):
            key = (row | (1 << v) if closed else row, colours[v])
            groups.setdefault(key, []).append(v)
        for members in groups.values():
            for a, b in zip(members, members[1:]):
                gens.append(((a, b), (b, a)))
    return gens


class _Search:
    def __init__(self, adj: Sequence[int], n: int, colours: Sequence[int]):
        self.adj = adj
        self.n = n
        self.best_code: int | None = None
        self.best_lab: list[int] | None = None
        self.first_code: int | None = None
        self.first_lab: list[int] | None = None
        # each automorphism is stored as its moved points: ((x, g(x)), ...)
        self.autos = _twin_swaps(adj, colours)
        self.leaves = 0

    def leaf_code(self, lab: list[int]) -> int:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        adj = self.adj
        code = 0
        for j in range(1, self.n):
            col = 0
            for u in iter_bits(adj[lab[j]]):
                p = pos[u]
                if p < j:
                    col |= 1 << (j - 1 - p)
            code = code << j | col
        return code

    def _record_auto(self, lab_a: list[int], lab_b: list[int]) -> None:
        moved = tuple((a, b) for a, b in zip(lab_a, lab_b) if a != b)
        if moved:
            self.autos.append(moved)

    def leaf(self, cells: list[list[int]]) -> None:
        self.leaves += 1
        lab = [c[0] for c in cells]
        code = self.leaf_code(lab)
        if self.first_code is None:
            self.first_code, self.first_lab = code, lab
            self.best_code, self.best_lab = code, lab
            return
        if code == self.first_code:
            self._record_auto(self.first_lab, lab)
        elif code == self.best_code:
            self._record_auto(self.best_lab, lab)
        elif code < self.best_code:
            self.best_code, self.best_lab = code, lab

    def _orbit_roots(self, fixed_mask: int) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for moved in self.autos:
            if any(fixed_mask >> a & 1 for a, _ in moved):
                continue
            for a, b in moved:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        return [find(x) for x in range(self.n)]

    def run(self, cells: list[list[int]], fixed_mask: int) -> None:
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            self.leaf(cells)
            return
        cell = cells[target]
        explored: list[int] = []
        roots: list[int] | None = None
        seen_autos = -1
        for v in sorted(cell):
            if explored:
                if seen_autos != len(self.autos):
                    roots = self._orbit_roots(fixed_mask)
                    seen_autos = len(self.autos)
                if any(roots[v] == roots[w] for w in explored):
                    continue
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            child = _refine(self.adj, child, [1 << v])
            self.run(child, fixed_mask | (1 << v))
            explored.append(v)


def _initial_cells(n: int, colours: Sequence[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(colours[v], []).append(v)
    return [groups[c] for c in sorted(groups)]


def canonical_labelling(G: Graph, colours: Sequence[int] | None = None) -> tuple[int, list[int]]:
    """Return ``(code_bits, lab)`` where ``lab[i]`` is the vertex placed at position i.

    With ``colours``, only colour-preserving relabellings are considered and
    vertices of smaller colour come first. Codes of two coloured graphs are
    comparable only when their colour class sizes agree.
    """
    n = G.n
    if n == 0:
        return 0, []
    if colours is None:
        colours = [0] * n
    cells = _initial_cells(n, colours)
    cells = _refine(G.adj, cells, [mask_of(c) for c in cells])
    s = _Search(G.adj, n, colours)
    s.run(cells, 0)
    return s.best_code, s.best_lab


def canonical_form(G: Graph) -> bytes:
    """Isomorphism-class code: graph6 bytes of the canonically relabelled graph.

    Codes are totally ordered by byte comparison; graphs of smaller order
    (up to 62 vertices) sort first.
    """
    code, _ = canonical_labelling(G)
    return _encode_n(G.n) + pack_bits(G.n, code)


def canonical_graph(G: Graph) -> Graph:
    _, lab = canonical_labelling(G)
    return relabel(G, lab)


def relabel(G: Graph, lab: Sequence[int]) -> Graph:
    """Graph whose vertex i is the old vertex ``lab[i]``."""
    pos = [0] * G.n
    for i, v in enumerate(lab):
        pos[v] = i
    rows = [0] * G.n
    for i, v in enumerate(lab):
        r = 0
        for u in iter_bits(G.adj[v]):
            r |= 1 << pos[u]
        rows[i] = r
    return Graph._trusted(G.n, rows)


def _cheap_invariant(G: Graph) -> tuple:
    return G.n, G.num_edges, tuple(sorted(G.degrees()))


def is_isomorphic(G1: Graph, G2: Graph) -> bool:
    if _cheap_invariant(G1) != _cheap_invariant(G2):
        return False
    return canonical_form(G1) == canonical_form(G2)


class GraphClass:
    """A finite set of pairwise non-isomorphic graphs.

    Members are keyed by canonical code; the first graph seen in a class is
    kept as its representative. Iteration follows code order.
    """

    __slots__ = ("_items",)

    def __init__(self, graphs: Iterable[Graph] = ()):
        found: dict[bytes, Graph] = {}
        for g in graphs:
            found.setdefault(canonical_form(g), g)
        self._items: tuple[tuple[bytes, Graph], ...] = tuple(sorted(found.items(), key=lambda kv: kv[0]))

    @classmethod
    def _from_items(cls, items: dict[bytes, Graph]) -> GraphClass:
        obj = object.__new__(cls)
        obj._items = tuple(sorted(items.items(), key=lambda kv: kv[0]))
        return obj

    @property
    def codes(self) -> tuple[bytes, ...]:
        return tuple(code for code, _ in self._items)

    @property
    def members(self) -> list[Graph]:
        return [g for _, g in self._items]

    def items(self) -> Iterator[tuple[bytes, Graph]]:
        return iter(self._items)

    def __iter__(self) -> Iterator[Graph]:
        return (g for _, g in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __contains__(self, G: Graph) -> bool:
        return canonical_form(G) in self.codes

    def __getitem__(self, i: int) -> Graph:
        return self._items[i][1]

    def index_of(self, G: Graph) -> int:
        """Position of G's class in iteration order, or -1."""
        code = canonical_form(G)
        for i, (c, _) in enumerate(self._items):
            if c == code:
                return i
        return -1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphClass):
            return NotImplemented
        return self.codes == other.codes

    def __hash__(self) -> int:
        return hash(self.codes)

    def __repr__(self) -> str:
        return "GraphClass([" + ", ".join(c.decode() for c in self.codes) + "])"


def dedup(graphs: Iterable[Graph]) -> GraphClass:
    return GraphClass(graphs)
