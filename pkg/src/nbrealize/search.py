"""Bounded realization search and constructors for known realizable families.

The search enumerates graphs of a fixed target order N one vertex at a time
by canonical augmentation: a child (parent plus one vertex) is kept only if
the added vertex is equivalent, under the child's automorphisms, to the
child's canonical deletion vertex, and only once per isomorphism class among
the children of one parent. Every isomorphism class is then generated once.
A partial graph on k vertices is pruned unless each vertex could still grow
into one with a neighbourhood from the class: its degree must be within
N - k of some member order, and its neighbourhood must embed as an induced
subgraph of such a member.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .graph import Graph, complete_multipartite, cycle, is_connected, iter_bits, neighbourhood_graph, path
from .iso import GraphClass, canonical_form, canonical_graph, canonical_labelling
from .ops import line_graph, power, subdivide


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: Graph | None
    max_order_checked: int
    nodes_expanded: int
    graphs_tested: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def _embeds(small: Graph, big: Graph) -> bool:
    """Is ``small`` isomorphic to an induced subgraph of ``big``?"""
    k, n = small.n, big.n
    if k > n:
        return False
    if k == 0:
        return True
    sdeg = small.degrees()
    bdeg = big.degrees()
    order = sorted(range(k), key=lambda v: -sdeg[v])
    image = [-1] * k
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        v = order[i]
        for x in range(n):
            if used >> x & 1 or bdeg[x] < sdeg[v]:
                continue
            ok = True
            for t in range(i):
                u = order[t]
                if small.has_edge(u, v) != big.has_edge(image[u], x):
                    ok = False
                    break
            if ok:
                image[v] = x
                used |= 1 << x
                if place(i + 1):
                    return True
                used &= ~(1 << x)
        image[v] = -1
        return False

    return place(0)


class _Searcher:
    def __init__(self, H: GraphClass, order: int):
        self.H = H
        self.N = order
        self.members = H.members
        self.orders = sorted({h.n for h in self.members})
        self.codes = set(H.codes)
        self._embed_cache: dict[bytes, tuple[int, ...]] = {}
        self.nodes = 0
        self.tested = 0
        self.best: bytes | None = None
        self.best_graph: Graph | None = None

    def _host_orders(self, sub: Graph) -> tuple[int, ...]:
        """Orders of the members into which ``sub`` embeds as an induced subgraph."""
        code = canonical_form(sub)
        hit = self._embed_cache.get(code)
        if hit is None:
            hit = tuple(sorted({h.n for h in self.members if _embeds(sub, h)}))
            self._embed_cache[code] = hit
        return hit

    def _degree_ok(self, d: int, slack: int) -> bool:
        return any(d <= h <= d + slack for h in self.orders)

    @staticmethod
    def _fits(d: int, slack: int, hosts: tuple[int, ...]) -> bool:
        return any(d <= h <= d + slack for h in hosts)

    def run(self) -> None:
        start = Graph(1, (0,))
        if self.N == 1:
            self._final(start)
            return
        if self._fits(0, self.N - 1, self._host_orders(Graph(0, ()))):
            self._extend(start)

    def _final(self, G: Graph) -> None:
        allowed = set(self.orders)
        if any(d not in allowed for d in G.degrees()):
            return
        found = {}
        for v in range(G.n):
            c = canonical_form(neighbourhood_graph(G, v))
            if c not in self.codes:
                return
            found[c] = True
        if len(found) != len(self.codes):
            return
        code = canonical_form(G)
        if self.best is None or code < self.best:
            self.best, self.best_graph = code, G

    @staticmethod
    def _invariant(G: Graph, v: int) -> tuple[int, int]:
        return G.adj[v].bit_count(), sum(G.adj[u].bit_count() for u in iter_bits(G.adj[v]))

    def _accept(self, child: Graph) -> int | None:
        """Canonical code of ``child`` if its last vertex is a canonical deletion vertex, else None."""
        new = child.n - 1
        invs = [self._invariant(child, v) for v in range(child.n)]
        top = max(invs)
        if invs[new] != top:
            return None
        code, lab = canonical_labelling(child)
        d = next(v for v in reversed(lab) if invs[v] == top)
        if d != new:
            mark_d = [0] * child.n
            mark_d[d] = 1
            mark_new = [0] * child.n
            mark_new[new] = 1
            if canonical_labelling(child, mark_d)[0] != canonical_labelling(child, mark_new)[0]:
                return None
        return code

    def _extend(self, P: Graph) -> None:
        self.nodes += 1
        k = P.n
        slack = self.N - k - 1
        last = k + 1 == self.N
        degs = P.degrees()
        full_slack = slack if not last else 0
        hosts = [self._host_orders(neighbourhood_graph(P, v)) for v in range(k)]
        seen: set[int] = set()
        for size in range(k + 1):
            if not self._degree_ok(size, full_slack):
                continue
            for S in combinations(range(k), size):
                Smask = 0
                for v in S:
                    Smask |= 1 << v
                # vertices outside S keep their degree, so their slack shrinks by one
                if any(
                    not self._fits(degs[v], full_slack, hosts[v])
                    for v in range(k)
                    if not Smask >> v & 1
                ) or any(not self._degree_ok(degs[v] + 1, full_slack) for v in S):
                    continue
                self.tested += 1
                rows = [row | (1 << k) if Smask >> v & 1 else row for v, row in enumerate(P.adj)]
                rows.append(Smask)
                child = Graph._trusted(k + 1, rows)
                if last:
                    self._final(child)
                    continue
                if not all(
                    self._fits(child.adj[v].bit_count(), slack, self._host_orders(neighbourhood_graph(child, v)))
                    for v in (*S, k)
                ):
                    continue
                code = self._accept(child)
                if code is None or code in seen:
                    continue
                seen.add(code)
                self._extend(child)


def search_realization(H: GraphClass | Iterable[Graph], max_order: int) -> SearchOutcome:
    """Look for a finite realization of H with at most ``max_order`` vertices.

    Orders are tried from (least member order + 1) upward; the witness is the
    realization of least order whose canonical code is smallest, so the
    result is reproducible. ``exhausted`` means no realization of order
    ``<= max_order`` exists.
    """
    H = H if isinstance(H, GraphClass) else GraphClass(H)
    if not H:
        raise InputError("class is empty")
    lo = min(h.n for h in H) + 1
    if max_order < lo:
        raise InputError(f"max_order must be at least {lo} for this class")
    nodes = tested = 0
    for order in range(lo, max_order + 1):
        s = _Searcher(H, order)
        s.run()
        nodes += s.nodes
        tested += s.tested
        if s.best_graph is not None:
            return SearchOutcome("found", canonical_graph(s.best_graph), order, nodes, tested)
    return SearchOutcome("exhausted", None, max_order, nodes, tested)


@dataclass(frozen=True)
class SoltesVerdict:
    applicable: bool
    divisible: bool
    realizable: bool | None


def soltes_applies(t: int, r: int) -> bool:
    """Exact test of 3r < 3t + sqrt(8(t-1)) + 4 in integers."""
    lhs = 3 * r - 3 * t - 4
    if lhs < 0:
        return True
    return lhs * lhs < 8 * (t - 1)


def soltes_verdict(t: int, r: int) -> SoltesVerdict:
    """Realizability of a t-regular graph of order r when the density condition holds.

    Under the condition such a graph is realizable iff r - t divides r.
    """
    if not 1 <= t < r:
        raise InputError(f"need 1 <= t < r, got t={t}, r={r}")
    applicable = soltes_applies(t, r)
    divisible = r % (r - t) == 0
    return SoltesVerdict(applicable, divisible, divisible if applicable else None)


def construct_multipartite(t: int, r: int) -> Graph:
    """Complete multipartite graph with 1 + r/(r-t) parts of size r-t."""
    if not 1 <= t < r:
        raise InputError(f"need 1 <= t < r, got t={t}, r={r}")
    part = r - t
    if r % part:
        raise InputError(f"r - t = {part} does not divide r = {r}")
    return complete_multipartite([part] * (1 + r // part))


def locally_cop3_from_cubic(C: Graph) -> Graph:
    """Line graph of the once-subdivided cubic graph C; every neighbourhood is K_2 u K_1."""
    if C.n == 0 or any(d != 3 for d in C.degrees()):
        raise InputError("input graph is not cubic")
    if not is_connected(C):
        raise InputError("input graph is not connected")
    return line_graph(subdivide(C))


def verify_family_power(kind: str, k: int) -> Graph:
    """C_{2k+2}^k or P_{2k+2}^k, for downstream realizability testing."""
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    if kind == "cycle":
        return power(cycle(2 * k + 2), k)
    if kind == "path":
        return power(path(2 * k + 2), k)
    raise InputError(f"kind must be 'cycle' or 'path', got {kind!r}")

