"""Local profiles, realization checks and profile predictions for products."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import InputError
from .graph import Graph, dominating_vertices, neighbourhood_graph
from .iso import GraphClass, canonical_form
from .ops import composition, disjoint_union, join


def _as_class(H) -> GraphClass:
    return H if isinstance(H, GraphClass) else GraphClass(H)


def local_profile(G: Graph) -> GraphClass:
    """N(G): the isomorphism classes of all vertex neighbourhood subgraphs."""
    if G.n < 1:
        raise InputError("local profile of the empty graph is undefined")
    found: dict[bytes, Graph] = {}
    by_mask: dict[int, bytes] = {}
    for v in range(G.n):
        mask = G.adj[v]
        if mask in by_mask:
            continue
        sub = neighbourhood_graph(G, v)
        code = canonical_form(sub)
        by_mask[mask] = code
        found.setdefault(code, sub)
    return GraphClass._from_items(found)


def neighbourhood_codes(G: Graph) -> list[bytes]:
    """Canonical code of G(N(v)) for every vertex v, in vertex order."""
    by_mask: dict[int, bytes] = {}
    out = []
    for v in range(G.n):
        mask = G.adj[v]
        code = by_mask.get(mask)
        if code is None:
            code = by_mask[mask] = canonical_form(neighbourhood_graph(G, v))
        out.append(code)
    return out


def realizes(G: Graph, H: GraphClass | Iterable[Graph]) -> bool:
    """True iff N(G) equals H exactly (as sets of isomorphism classes)."""
    H = _as_class(H)
    if not H:
        raise InputError("realizes() needs a nonempty class")
    if G.n < 1:
        return False
    allowed = {h.n for h in H}
    if any(d not in allowed for d in G.degrees()):
        return False
    return local_profile(G) == H


def predict_profile_composition(NG1: GraphClass, G2: Graph, NG2: GraphClass) -> GraphClass:
    """Profile of G1[G2] from N(G1), G2 and N(G2): all joins F_j + H_i[G2]."""
    NG1, NG2 = _as_class(NG1), _as_class(NG2)
    if not NG1 or not NG2:
        raise InputError("profile prediction needs nonempty classes")
    return GraphClass(join(F, composition(H, G2)) for H in NG1 for F in NG2)


def predict_profile_product(NG1: GraphClass, NG2: GraphClass) -> GraphClass:
    """Profile of G1 x G2 from N(G1) and N(G2): all disjoint unions H_i u F_j."""
    NG1, NG2 = _as_class(NG1), _as_class(NG2)
    if not NG1 or not NG2:
        raise InputError("profile prediction needs nonempty classes")
    return GraphClass(disjoint_union(H, F) for H in NG1 for F in NG2)


DEGREE_TOO_SMALL = "degree_too_small"
CONGRUENCE_VIOLATED = "congruence_violated"


@dataclass(frozen=True)
class Witness:
    graph_index: int
    vertex: int
    reason: str
    degree: int


@dataclass(frozen=True)
class NecessityVerdict:
    outcome: str
    witnesses: tuple[Witness, ...] = field(default=())

    @property
    def passes(self) -> bool:
        return self.outcome == "passes"


def check_necessary(H: GraphClass | Iterable[Graph], s: int) -> NecessityVerdict:
    """Degree conditions every finite realization forces on a class whose
    members share one order and have exactly ``s`` dominating vertices.

    Each non-dominating vertex must have degree at least 2s and congruent to
    2s modulo s+1. The verdict applies to finite realizations only.
    Precondition violations raise InputError naming the offending member.
    """
    H = _as_class(H)
    if s < 1:
        raise InputError(f"s must be positive, got {s}")
    if not H:
        raise InputError("class is empty")
    members = H.members
    order = members[0].n
    for i, h in enumerate(members):
        if h.n != order:
            raise InputError(f"member {i} has order {h.n}, member 0 has order {order}")
        d = len(dominating_vertices(h))
        if d != s:
            raise InputError(f"member {i} has {d} dominating vertices, expected {s}")
    witnesses = []
    for i, h in enumerate(members):
        dom = dominating_vertices(h)
        for u in range(h.n):
            if u in dom:
                continue
            deg = h.degree(u)
            if deg < 2 * s:
                witnesses.append(Witness(i, u, DEGREE_TOO_SMALL, deg))
            if deg % (s + 1) != (2 * s) % (s + 1):
                witnesses.append(Witness(i, u, CONGRUENCE_VIOLATED, deg))
    return NecessityVerdict("fails" if witnesses else "passes", tuple(witnesses))
