import pytest

from freeprod.catalog import (arrow_graph, chain_category, cyclic_group, endofunction_monoid, free_on,
                              involution, loop_graph, monoid_category, walking_arrow)
from freeprod.errors import BoundExhausted
from freeprod.fincat import (FinCategory, FinGraph, Functor, Path, PresentationMap, PresentedCategory,
                             bounded_isomorphic, discrete_presentation, find_isomorphism, free_category,
                             functors_between, functors_from_presented, funny_tensor, lift_path,
                             path_from_word, product_category, pushout_cat, quotient_category,
                             to_fin_category, validate_fin_category, verify_pushout)

from oracles import brute_functor_count, funny_arrow_paths, reduced_alternating_words


def table(c: FinCategory):
    return (list(c.objects), dict(c.morphisms), dict(c.composition), dict(c.identities))


def test_graph_basics():
    g = FinGraph(["a", "b"], [("x", "a", "b"), ("y", "a", "b"), ("z", "b", "a")])
    assert g.hom("a", "b") == ["x", "y"]
    assert g.src("z") == "b" and g.tgt("z") == "a"
    with pytest.raises(Exception):
        FinGraph(["a"], [("x", "a", "missing")])


def test_path_typing():
    g = arrow_graph()
    p = path_from_word(g, ["f"])
    assert (p.src, p.tgt) == ("0", "1")
    assert Path("0", "0", ()).then(p) == p
    with pytest.raises(Exception):
        path_from_word(g, ["f", "f"])


@pytest.mark.parametrize("c", [walking_arrow(), chain_category(3), cyclic_group(4), endofunction_monoid(2)])
def test_catalog_categories_validate(c):
    assert validate_fin_category(c).ok


def test_broken_category_is_reported():
    c = cyclic_group(3)
    comp = dict(c.composition)
    comp[("g1", "g1")] = "e"
    bad = FinCategory(c.objects, c.morphisms, c.identities, comp)
    assert not validate_fin_category(bad).ok


def test_free_loop_hom_grows_linearly():
    p = free_on(loop_graph())
    for k in range(1, 6):
        assert len(p.hom("*", "*", k)) == k + 1


def test_involution_normalizer_agrees_with_closure():
    inv = involution()
    closed = PresentedCategory(inv.graph, inv.relations)
    for k in range(1, 6):
        assert len(inv.hom("*", "*", k)) == len(closed.hom("*", "*", k)) == min(k + 1, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_funny_tensor_of_arrows_counts_orders(n):
    A = free_on(arrow_graph())
    P = funny_tensor([A] * n)
    src, tgt = ("0",) * n, ("1",) * n
    assert len(P.hom(src, tgt, n + 1)) == len(funny_arrow_paths(n))


@pytest.mark.parametrize("k", range(1, 6))
def test_z2_free_product_two_routes(k):
    P = funny_tensor([involution(), involution()])
    o = P.objects[0]
    oracle = len(reduced_alternating_words(k))
    assert oracle == 2 * k + 1
    by_nf = {P.normalize(p) for p in P.words(o, o, k)}
    closure = PresentedCategory(P.graph, P.relations)
    by_cc = {closure.canonical(p, 2 * k + 2) for p in P.words(o, o, k)}
    assert len(by_nf) == len(by_cc) == oracle


def test_lift_path_moves_one_coordinate():
    p = Path("0", "1", ("f",))
    q = lift_path(1, ("x", None, "y"), p)
    assert q.src == ("x", "0", "y") and q.tgt == ("x", "1", "y")
    assert q.word[0].index == 1 and q.word[0].gen == "f"


def test_functor_counts_match_brute_force():
    for c, d in [(walking_arrow(), chain_category(3)), (cyclic_group(2), endofunction_monoid(2)),
                 (walking_arrow(), walking_arrow())]:
        co, cm, cc, ci = table(c)
        do, dm, dc, di = table(d)
        assert sum(1 for _ in functors_between(c, d)) == brute_functor_count(co, cm, cc, ci, do, dm, dc, di)


def test_functor_check_detects_bad_map():
    c = walking_arrow()
    F = Functor(c, c, {"0": "0", "1": "1"}, {"id0": "id0", "id1": "id1", "f": "id0"})
    assert not F.check().ok
    assert Functor.identity(c).check().ok


def test_product_projections_are_functors():
    P, projs = product_category([walking_arrow(), cyclic_group(2)])
    assert validate_fin_category(P).ok
    assert len(P.morphisms) == 3 * 2
    assert all(F.check().ok for F in projs)


def test_isomorphism_search():
    z2 = monoid_category(["1", "s"], "1", lambda x, y: "1" if x == y else "s")
    assert find_isomorphism(cyclic_group(2), z2) is not None
    assert find_isomorphism(cyclic_group(2), endofunction_monoid(2)) is None


def test_bounded_isomorphic_tensor_is_symmetric():
    A, L = free_on(arrow_graph()), involution()
    assert bounded_isomorphic(funny_tensor([A, L]), funny_tensor([L, A]), 4) is not None


def test_quotient_identifies_diagonals():
    A = free_on(arrow_graph())
    P = funny_tensor([A, A])
    d1, d2 = P.hom(("0", "0"), ("1", "1"), 3).reps
    Q = quotient_category(P, [(d1, d2)], 3)
    assert len(Q.hom(("0", "0"), ("1", "1"), 3)) == 1


def test_to_fin_category_of_tensor():
    A = free_on(arrow_graph())
    C = to_fin_category(funny_tensor([A, A]), 4)
    assert validate_fin_category(C).ok
    assert len(C.hom(("0", "0"), ("1", "1"))) == 2


def test_to_fin_category_needs_enough_bound():
    with pytest.raises(BoundExhausted):
        to_fin_category(free_on(loop_graph()), 4)


def test_pushout_glues_arrows_at_sources():
    # gluing two arrows at their sources: a span 1 <- 0 -> 1'
    D = discrete_presentation(["p"])
    A, B = free_on(arrow_graph()), free_on(arrow_graph("0", "2", "g"))
    left = PresentationMap.inclusion_of_objects(D, A, {"p": "0"})
    right = PresentationMap.inclusion_of_objects(D, B, {"p": "0"})
    po = pushout_cat(left, right)
    assert len(po.category.objects) == 3
    assert verify_pushout(po, left, right, [walking_arrow(), chain_category(3)]).ok


def test_functors_from_presented_respect_relations():
    inv = involution()
    # endomaps of a 2-element set squaring to the identity: the identity and the swap
    n = sum(1 for _ in functors_from_presented(inv, endofunction_monoid(2)))
    assert n == 2


def test_free_category_name_and_generators():
    p = free_category(arrow_graph(), name="A")
    assert p.generators == ("f",) and p.name == "A"
