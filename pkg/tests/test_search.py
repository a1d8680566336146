import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import naive_search, tiny_canon
from nbrealize import (
    Graph,
    GraphClass,
    InputError,
    canonical_form,
    canonical_graph,
    check_necessary,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    disjoint_union,
    dominating_vertices,
    empty,
    is_isomorphic,
    local_profile,
    multiple,
    path,
    realizes,
)
from nbrealize.search import (
    _Searcher,
    construct_multipartite,
    locally_cop3_from_cubic,
    search_realization,
    soltes_applies,
    soltes_verdict,
    verify_family_power,
)


class _CountingSearcher(_Searcher):
    """Searcher with all pruning disabled, recording every interior node."""

    def __init__(self, order):
        super().__init__(GraphClass([complete(1)]), order)
        self.seen = []

    def _degree_ok(self, d, slack):
        return True

    @staticmethod
    def _fits(d, slack, hosts):
        return True

    def _final(self, G):
        pass

    def _extend(self, P):
        self.seen.append(canonical_form(P))
        super()._extend(P)


def test_augmentation_generates_each_class_once():
    s = _CountingSearcher(7)
    s.run()
    by_order = {}
    for code in s.seen:
        by_order.setdefault(code[0] - 63, []).append(code)
    counts = {n: len(v) for n, v in by_order.items()}
    assert counts == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    assert all(len(set(v)) == len(v) for v in by_order.values())


def test_search_examples():
    r = search_realization([complete(2)], 3)
    assert r.found and r.witness == complete(3) and r.max_order_checked == 3
    r = search_realization([cycle(4)], 6)
    assert r.found and is_isomorphic(r.witness, complete_multipartite([2, 2, 2]))
    r = search_realization([path(3)], 8)
    assert r.status == "exhausted" and r.witness is None and r.max_order_checked == 8
    assert r.nodes_expanded > 0


def test_search_errors():
    with pytest.raises(InputError):
        search_realization([], 5)
    with pytest.raises(InputError):
        search_realization([cycle(4)], 4)


def test_witness_is_canonical_and_deterministic():
    a = search_realization([disjoint_union(complete(2), complete(1))], 6)
    b = search_realization([disjoint_union(complete(2), complete(1))], 6)
    assert a == b and a.found
    assert a.witness == canonical_graph(a.witness)
    assert a.witness.n == 6  # the triangular prism
    assert realizes(a.witness, [disjoint_union(complete(2), complete(1))])


@pytest.mark.parametrize(
    "H,bound",
    [
        ([complete(1)], 5),
        ([empty(2)], 5),
        ([path(3)], 6),
        ([disjoint_union(complete(2), complete(1))], 6),
        ([multiple(2, complete(2))], 6),
        ([complete(2), multiple(2, complete(2))], 6),
        ([empty(3)], 6),
        ([path(4)], 6),
        ([cycle(4), empty(4)], 6),
    ],
)
def test_agrees_with_naive_oracle(H, bound):
    r = search_realization(H, bound)
    order, found = naive_search(H, bound)
    assert r.found == bool(found)
    if r.found:
        assert r.max_order_checked == order
        assert tiny_canon(r.witness.n, r.witness.edges()) in found


@settings(max_examples=25)
@given(graphs(min_n=1, max_n=4))
def test_soundness(G):
    H = local_profile(G)
    bound = min(max(h.n for h in H) + 3, 7)
    if bound < min(h.n for h in H) + 1:
        return
    r = search_realization(H, bound)
    if r.found:
        assert realizes(r.witness, H)
        s = {len(dominating_vertices(h)) for h in H}
        if len(s) == 1 and min(s) >= 1 and len({h.n for h in H}) == 1:
            assert check_necessary(H, min(s)).passes


@settings(max_examples=20)
@given(graphs(min_n=2, max_n=5))
def test_failed_necessary_condition_means_exhausted(H):
    s = len(dominating_vertices(H))
    if s == 0 or s == H.n:
        return
    if check_necessary([H], s).passes:
        return
    assert search_realization([H], H.n + 3).status == "exhausted"


def test_soltes_examples():
    v = soltes_verdict(2, 4)
    assert v.applicable and v.divisible and v.realizable is True
    v = soltes_verdict(2, 5)
    assert not v.applicable and v.realizable is None
    v = soltes_verdict(4, 6)
    assert v.applicable and v.divisible and v.realizable is True
    for t, r in [(0, 3), (3, 3), (4, 2)]:
        with pytest.raises(InputError):
            soltes_verdict(t, r)


@given(st.integers(1, 200), st.integers(1, 200))
def test_soltes_exact_against_float_off_boundary(t, r):
    if t >= r:
        return
    lhs, rhs = 3 * r, 3 * t + (8 * (t - 1)) ** 0.5 + 4
    if abs(lhs - rhs) > 1e-6:
        assert soltes_applies(t, r) == (lhs < rhs)


def test_soltes_boundary_is_strict():
    # t = 3: sqrt(16) = 4, so 3r < 9 + 4 + 4 = 17 means r <= 5
    assert soltes_applies(3, 5)
    assert not soltes_applies(3, 6)
    # t = 1: 3r < 7 means r <= 2
    assert soltes_applies(1, 2) and not soltes_applies(1, 3)


def test_construct_multipartite():
    assert construct_multipartite(2, 4) == complete_multipartite([2, 2, 2])
    g = construct_multipartite(4, 6)
    assert g == complete_multipartite([2, 2, 2, 2])
    assert local_profile(g) == GraphClass([complete_multipartite([2, 2, 2])])
    for n in range(2, 7):
        g = construct_multipartite(n - 1, n)
        assert g == complete(n + 1)
    with pytest.raises(InputError):
        construct_multipartite(2, 5)


@given(st.integers(1, 10), st.integers(1, 10))
def test_multipartite_profile_is_t_regular_of_order_r(t, extra):
    r = t + extra
    if r % (r - t):
        return
    (member,) = local_profile(construct_multipartite(t, r))
    assert member.n == r and set(member.degrees()) == {t}


def test_cop3():
    co_p3 = GraphClass([disjoint_union(complete(2), complete(1))])
    g = locally_cop3_from_cubic(complete(4))
    assert g.n == 12 and set(g.degrees()) == {3} and local_profile(g) == co_p3
    g = locally_cop3_from_cubic(complete_bipartite(3, 3))
    assert g.n == 18 and local_profile(g) == co_p3
    with pytest.raises(InputError):
        locally_cop3_from_cubic(cycle(4))
    with pytest.raises(InputError):
        locally_cop3_from_cubic(multiple(2, complete(4)))


def test_family_power():
    assert verify_family_power("cycle", 1) == cycle(4)
    assert is_isomorphic(verify_family_power("cycle", 2), complete_multipartite([2, 2, 2]))
    assert verify_family_power("path", 2).degrees() == [2, 3, 4, 4, 3, 2]
    with pytest.raises(InputError):
        verify_family_power("star", 2)
    with pytest.raises(InputError):
        verify_family_power("cycle", 0)
