"""True-twin classes, quotients, and the K_s + F[K_{s+1}] decomposition.

Two vertices are true twins when their closed neighbourhoods coincide. The
twin classes are cliques with uniform adjacency to one another, so a graph
is the expansion of its twin quotient by cliques of the class sizes.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from ..errors import InputError, StructureAbsent
from ..graph import Graph, complete, dominating_vertices, induced_subgraph, iter_bits
from ..iso import GraphClass, canonical_form
from ..ops import composition, expansion, join


@dataclass(frozen=True)
class SigmaPartition:
    classes: tuple[frozenset[int], ...]

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def __len__(self) -> int:
        return len(self.classes)


def sigma_classes(G: Graph) -> SigmaPartition:
    """Closed-neighbourhood equality classes, ordered by least member."""
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(G.adj[v] | (1 << v), []).append(v)
    classes = sorted((frozenset(vs) for vs in groups.values()), key=min)
    return SigmaPartition(tuple(classes))


def quotient(G: Graph) -> tuple[Graph, list[int]]:
    """Twin quotient: one vertex per class (in class order) and the class sizes."""
    part = sigma_classes(G)
    reps = [min(c) for c in part.classes]
    index = {}
    for i, c in enumerate(part.classes):
        for v in c:
            index[v] = i
    rows = []
    for i, r in enumerate(reps):
        row = 0
        for u in iter_bits(G.adj[r]):
            j = index[u]
            if j != i:
                row |= 1 << j
        rows.append(row)
    return Graph._trusted(len(reps), rows), part.sizes


@dataclass(frozen=True)
class Decomposition:
    """Result of splitting a class into s dominating vertices and a base class F.

    ``pairing`` maps each input member's canonical code to the canonical code
    of its F member.
    """

    s: int
    F: GraphClass
    pairing: dict[bytes, bytes]


def _as_class(H) -> GraphClass:
    return H if isinstance(H, GraphClass) else GraphClass(H)


def reduce_member(H: Graph, s: int) -> Graph:
    """Return F with H = K_s + F[K_{s+1}], given that H has exactly s dominating vertices.

    The residual H - D(H) must be F[K_{s+1}]. Its twin classes are blown-up
    twin classes of F, so each has size divisible by s+1; dividing the sizes
    and expanding the quotient by cliques recovers F.
    """
    dom = dominating_vertices(H)
    if len(dom) != s:
        raise InputError(f"expected {s} dominating vertices, found {len(dom)}")
    residual = induced_subgraph(H, [v for v in range(H.n) if v not in dom])
    q, sizes = quotient(residual)
    bad = [z for z in sizes if z % (s + 1)]
    if bad:
        raise StructureAbsent(
            f"twin class of size {bad[0]} after removing the {s} dominating vertices "
            f"is not a multiple of {s + 1}"
        )
    return expansion(q, [complete(z // (s + 1)) for z in sizes])


def reduce_class(H: GraphClass | Iterable[Graph]) -> Decomposition:
    H = _as_class(H)
    if not H:
        raise InputError("cannot reduce an empty class")
    members = H.members
    order = members[0].n
    s = len(dominating_vertices(members[0]))
    for i, h in enumerate(members):
        if h.n != order:
            raise InputError(f"member {i} has order {h.n}, member 0 has order {order}")
        d = len(dominating_vertices(h))
        if d != s:
            raise InputError(f"member {i} has {d} dominating vertices, member 0 has {s}")
    if s < 1:
        raise InputError("members have no dominating vertices")
    pairing = {}
    found = {}
    for code, h in H.items():
        f = reduce_member(h, s)
        fcode = canonical_form(f)
        pairing[code] = fcode
        found.setdefault(fcode, f)
    return Decomposition(s, GraphClass._from_items(found), pairing)


def expand_member(F: Graph, s: int) -> Graph:
    """K_s + F[K_{s+1}]; the K_s vertices get ids 0..s-1."""
    return join(complete(s), composition(F, complete(s + 1)))


def expand_class(F: GraphClass | Iterable[Graph], s: int) -> GraphClass:
    F = _as_class(F)
    if s < 1:
        raise InputError(f"s must be positive, got {s}")
    members = F.members
    if members:
        order = members[0].n
        for i, f in enumerate(members):
            if f.n != order:
                raise InputError(f"member {i} has order {f.n}, member 0 has order {order}")
            if dominating_vertices(f):
                raise InputError(f"member {i} has a dominating vertex")
    return GraphClass(expand_member(f, s) for f in members)


def reduce_realization(G: Graph) -> tuple[Graph, int]:
    """Return (G0, s) with G = G0[K_{s+1}], read off the twin classes of G."""
    q, sizes = quotient(G)
    if not sizes:
        raise StructureAbsent("empty graph has no twin classes")
    if len(set(sizes)) != 1:
        raise StructureAbsent(f"twin classes have unequal sizes {sorted(set(sizes))}")
    if sizes[0] < 2:
        raise StructureAbsent("twin classes are singletons")
    return q, sizes[0] - 1
