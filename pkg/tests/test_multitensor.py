import itertools

import pytest

from freeprod.catalog import arrow_graph, chain_category, loop_graph, walking_arrow
from freeprod.fincat import FinCategory, FinGraph
from freeprod.multitensor import (LEAF, ECategory, EFunctor, MultitensorOnSet, category_from_ecategory,
                                  check_coequalizer_universal, coequalize_E_categories, ecategory_from_category,
                                  efunctors, free_ecategory, multitensor_from_operad, operad_from_multitensor,
                                  operad_mutation, operads_equal, path_multitensor_link, terminal_operad,
                                  two_monoid_ecategory, two_monoid_operad, validate_E_category,
                                  validate_partial_E_category)


def parallel_pair() -> FinCategory:
    return FinCategory(["0", "1"], {"i0": ("0", "0"), "i1": ("1", "1"), "p": ("0", "1"), "q": ("0", "1")},
                       {"0": "i0", "1": "i1"},
                       {("i0", "i0"): "i0", ("i1", "i1"): "i1", ("i0", "p"): "p", ("i0", "q"): "q",
                        ("p", "i1"): "p", ("q", "i1"): "q"}, name="par")


def parallel_functors():
    B, W = ecategory_from_category(parallel_pair()), ecategory_from_category(walking_arrow())
    ids = {"id0": "i0", "id1": "i1"}
    f = EFunctor(W, B, {"0": "0", "1": "1"}, {**ids, "f": "p"})
    g = EFunctor(W, B, {"0": "0", "1": "1"}, {**ids, "f": "q"})
    return f, g


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_terminal_operad_is_an_operad(N):
    O = terminal_operad(N)
    assert O.validate().ok
    assert all(len(O.elements(n)) == 1 for n in range(N + 1))


def test_two_monoid_operad_sizes_and_laws():
    O = two_monoid_operad(3)
    assert [len(O.elements(n)) for n in range(4)] == [1, 1, 2, 6]
    assert O.validate().ok


def test_operad_mutation_is_detected():
    O = two_monoid_operad(3)
    a2 = O.elements(2)[0]
    key = (a2, (a2, LEAF))
    wrong = O.elements(3)[-1]
    assert O.substitute(*key) != wrong
    assert not operad_mutation(O, key, wrong).validate().ok


@pytest.mark.parametrize("O", [terminal_operad(3), two_monoid_operad(3)], ids=["terminal", "two-monoids"])
def test_multitensor_round_trip(O):
    M = multitensor_from_operad(O)
    assert M.validate([(0,), (0, 1), ("a", "b", "c")], max_arity=2).ok
    assert operads_equal(operad_from_multitensor(M), O)


def test_multitensor_sizes_are_products():
    M = MultitensorOnSet(two_monoid_operad(3))
    assert len(M.apply([(0, 1), (0, 1, 2)])) == 2 * 2 * 3
    assert len(M.apply([])) == 1


@pytest.mark.parametrize("i", [0, 1])
def test_multitensor_distributes_over_coproducts(i):
    M = MultitensorOnSet(two_monoid_operad(3))
    assert M.closedness_witness([(0, 1)], i, ("y",), ("z1", "z2"))


def test_operads_differ_when_sizes_differ():
    assert not operads_equal(terminal_operad(3), two_monoid_operad(3))
    assert not operads_equal(terminal_operad(2), terminal_operad(3))


def test_two_monoid_ecategory_validates():
    assert validate_E_category(two_monoid_ecategory()).ok


@pytest.mark.parametrize("C", [walking_arrow(), chain_category(3), parallel_pair()], ids=["2", "3", "par"])
def test_category_round_trip_through_terminal_operad(C):
    A = ecategory_from_category(C)
    assert validate_E_category(A).ok
    back = category_from_ecategory(A)
    assert back.composition == C.composition and back.identities == C.identities


def test_broken_ecategory_table_is_reported():
    A = ecategory_from_category(chain_category(3))
    table = dict(A.table)
    key = next(k for k in table if len(k) == 2 and len(k[1]) == 2 and A.src(k[1][0]) != A.tgt(k[1][1]))
    table[key] = A.compose(terminal_operad().unit, (key[1][0],))
    bad = ECategory(A.objects, A.homs, A.operad, table, "bad")
    assert not validate_E_category(bad).ok


@pytest.mark.parametrize("g", [arrow_graph(), loop_graph(), FinGraph(["a", "b"], [("x", "a", "b"), ("y", "b", "a")])],
                         ids=["arrow", "loop", "cycle"])
def test_free_ecategory_is_partially_valid(g):
    A = free_ecategory(g, two_monoid_operad(3))
    assert getattr(A, "partial", False)
    assert validate_partial_E_category(A).ok


def test_coequalizer_identifies_the_pair():
    f, g = parallel_functors()
    co = coequalize_E_categories(f, g)
    assert co.report.ok
    assert len(co.category.homs[("0", "1")]) == 1
    assert co.homwise_sufficient
    assert check_coequalizer_universal(co, f, g, [f.cod, f.dom]).ok


def test_coequalizer_needs_identity_on_objects():
    f, g = parallel_functors()
    swapped = EFunctor(f.dom, f.cod, {"0": "1", "1": "0"}, dict(f.mor_map))
    with pytest.raises(ValueError):
        coequalize_E_categories(swapped, g)


def test_efunctors_between_categories_match_functor_counts():
    W = ecategory_from_category(walking_arrow())
    # functors 2 -> 3 are the monotone pairs a <= b
    assert len(efunctors(W, ecategory_from_category(chain_category(3)))) == 6
    assert len(efunctors(W, ecategory_from_category(parallel_pair()))) == 4


def test_efunctor_composition_is_a_functor():
    f, _ = parallel_functors()
    B = f.cod
    for k in efunctors(B, ecategory_from_category(chain_category(2))):
        assert f.then(k).check().ok


def test_path_decomposition():
    X = FinGraph(["a", "b"], [("x", "a", "b"), ("y", "b", "a"), ("l", "a", "a")])
    Y = FinGraph(["*"], [("u", "*", "*"), ("v", "*", "*")])
    h = {"objects": {"a": "*", "b": "*"}, "edges": {"x": "u", "y": "v", "l": "u"}}
    assert path_multitensor_link([X, Y, arrow_graph()], bound=3, morphisms=[(X, Y, h)]).ok


def test_parallel_pair_is_a_category():
    from freeprod.fincat import validate_fin_category
    assert validate_fin_category(parallel_pair()).ok
    assert list(itertools.chain.from_iterable([parallel_pair().hom("0", "1")])) == ["p", "q"]
