import itertools

import pytest

from freeprod.catalog import chain_category, walking_arrow
from freeprod.fincat import FinCategory, Functor
from freeprod.vgraph import (FINCAT, FINSET, IncompatibleCocone, VGraph, cocone_from_multimap, closedness_factor,
                             compose_multimaps, count_morphisms, count_morphisms_into_hom, count_multimaps,
                             enumerate_morphisms, enumerate_multimaps, factor_through_alpha,
                             free_product_graphs, graph_hom, graph_isomorphic, identity_multimap,
                             multimap_from_cocone, rev_after, slot_product, tensor2_bijection,
                             tensor2_reformulation, unit_graph)

from oracles import brute_free_product, brute_graph_morphisms, brute_hom_graph_morphisms, brute_multimaps

LOOP = VGraph.from_edges(["a"], [("l", "a", "a")], name="L")
ARROW = VGraph.from_edges(["a", "b"], [("x", "a", "b")], name="A")
CYCLE = VGraph.from_edges(["a", "b"], [("x", "a", "b"), ("y", "b", "a")], name="C")
PAR = VGraph.from_edges(["a", "b"], [("x", "a", "b"), ("y", "a", "b")], name="P")
POINT = VGraph.from_edges(["a"], [], name="pt")
GRAPHS = [LOOP, ARROW, CYCLE, PAR, POINT]


def plain(g: VGraph):
    return list(g.objects), g.edges()


@pytest.mark.parametrize("X,Y", list(itertools.product(GRAPHS, repeat=2)))
def test_count_morphisms_matches_brute_force(X, Y):
    n = brute_graph_morphisms(plain(X), plain(Y))
    assert count_morphisms(X, Y) == n == sum(1 for _ in enumerate_morphisms(X, Y))


@pytest.mark.parametrize("X,Y", list(itertools.product(GRAPHS, repeat=2)))
def test_free_product_hom_sizes(X, Y):
    T, alpha = free_product_graphs([X, Y])
    objs, edges = brute_free_product(plain(X), plain(Y))
    assert set(T.objects) == set(objs)
    for a in objs:
        for b in objs:
            assert len(T.hom(a, b)) == sum(1 for _, s, t in edges if (s, t) == (a, b))
    assert alpha.check().ok


@pytest.mark.parametrize("A,B,C", list(itertools.product([LOOP, ARROW, CYCLE], repeat=3)))
def test_adjunction_and_multimap_counts(A, B, C):
    T, _ = free_product_graphs([A, B])
    n = count_morphisms(T, C)
    assert n == count_multimaps([A, B], C) == brute_multimaps(plain(A), plain(B), plain(C))
    assert n == count_morphisms_into_hom(A, B, C) == brute_hom_graph_morphisms(plain(A), plain(B), plain(C))


def test_hom_graph_object_count():
    H = graph_hom(ARROW, CYCLE)
    assert len(H.objects) == count_morphisms(ARROW, CYCLE)


@pytest.mark.parametrize("A,B", [(ARROW, CYCLE), (LOOP, PAR), (CYCLE, LOOP)])
def test_every_multimap_factors_through_alpha(A, B):
    T, alpha = free_product_graphs([A, B])
    for C in (CYCLE, LOOP):
        for F in enumerate_multimaps([A, B], C):
            g = factor_through_alpha(F, T)
            assert g.check().ok
            assert alpha.then(g) == F


@pytest.mark.parametrize("Cg,A,B", [(ARROW, LOOP, CYCLE), (LOOP, ARROW, CYCLE)])
def test_closedness_round_trip(Cg, A, B):
    H = graph_hom(A, B)
    for F in enumerate_multimaps([Cg, A], B):
        G = closedness_factor(F, H)
        assert G.check().ok
        assert rev_after(G, H) == F


def test_compose_with_identities_is_neutral():
    for F in enumerate_multimaps([ARROW, LOOP], CYCLE):
        assert compose_multimaps(F, [identity_multimap(ARROW), identity_multimap(LOOP)]) == F


def test_unit_graph_is_tensor_unit():
    for X in GRAPHS:
        T, _ = free_product_graphs([X, unit_graph()])
        assert graph_isomorphic(T, X) is not None


def test_nullary_free_product_is_unit():
    T, _ = free_product_graphs([])
    assert len(T.objects) == 1 and len(T.hom((), ())) == 0


def test_tensor2_bijection_is_bijective():
    for gs in ([ARROW, CYCLE], [LOOP, LOOP], [PAR, ARROW, LOOP]):
        T, _ = free_product_graphs(gs)
        R = tensor2_reformulation(gs)
        for key, m in tensor2_bijection(gs).items():
            assert len(set(m.images)) == len(m.images) == len(T.hom(*key)) == len(R.hom(*key))


def test_fincat_base_free_product():
    a = walking_arrow()
    G = VGraph(["p"], {("p", "p"): a}, FINCAT)
    T, alpha = free_product_graphs([G, G])
    # diagonal hom is the coproduct of the two loops' categories
    assert FINCAT.size(T.hom(("p", "p"), ("p", "p"))) == 6
    assert alpha.check().ok


def test_finset_base_operations():
    prod, ps = FINSET.product([(0, 1), ("a",)])
    assert len(prod) == 2 and ps[0]((1, "a")) == 1
    co, inj = FINSET.coproduct([(0,), (0, 1)])
    assert len(co) == 3 and inj[1](1) == (1, 1)
    assert FINSET.count_homs((0, 1), (0, 1, 2)) == 9


def test_cocone_round_trip_and_incompatibility():
    As = [walking_arrow(), chain_category(2)]
    C = chain_category(3)
    P0, P1 = slot_product(As, 0), slot_product(As, 1)
    # order-preserving sum of coordinates fits in [3]
    def obj(o):
        return int(o[0]) + int(o[1])
    def mor(P):
        return {f: (obj(P.morphisms[f][0]), obj(P.morphisms[f][1])) for f in P.morphisms}
    f0 = Functor(P0, C, {o: obj(o) for o in P0.objects}, mor(P0))
    f1 = Functor(P1, C, {o: obj(o) for o in P1.objects}, mor(P1))
    assert f0.check().ok and f1.check().ok
    m = multimap_from_cocone([f0, f1], As, C)
    assert m.check().ok
    back = cocone_from_multimap(m)
    assert back[0] == f0 and back[1] == f1
    bad = Functor(P1, C, {o: 0 for o in P1.objects}, {f: (0, 0) for f in P1.morphisms})
    with pytest.raises(IncompatibleCocone) as err:
        multimap_from_cocone([f0, bad], As, C)
    assert err.value.pair == (1, 2)


def test_empty_category_is_initial_in_fincat_base():
    assert FINCAT.is_initial(FinCategory([], {}, {}, {}))
    assert not FINCAT.is_initial(walking_arrow())
