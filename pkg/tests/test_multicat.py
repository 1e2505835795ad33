import pytest

from freeprod.catalog import chain_category, walking_arrow
from freeprod.errors import SizeLimitExceeded
from freeprod.fincat import Functor
from freeprod.multicat import (F1_on_functor, FunctionMulticategory, GraphMulticategory, Multifunctor,
                               TableMulticategory, UV_from_monoidal, adjacent_transpositions, all_perms,
                               block_perm, build_F, cat_over_set, check_closed, check_multinatural,
                               chain_monoidal, closed_examples, derive_closed_structure, endomorphism_over_set,
                               find_closed_structure, find_unit, free_generated_multicategory, is_strongly_universal,
                               is_universal, perm_identity, perm_inverse, perm_mul, table_mutations, thin_monoidal,
                               universality_verdict, validate_symmetric_multicat, vect_dims_monoidal)
from freeprod.vgraph import VGraph, count_multimaps


def test_perm_conventions():
    s, t = (1, 2, 0), (0, 2, 1)
    assert perm_mul(s, t) == tuple(s[t[i]] for i in range(3))
    assert perm_mul(s, perm_inverse(s)) == perm_identity(3)
    assert block_perm((1, 0), [(0,), (1, 0)]) == (2, 1, 0)


@pytest.mark.parametrize("s", all_perms(4))
def test_adjacent_transpositions_rebuild_permutation(s):
    cur = list(range(4))
    for k in adjacent_transpositions(s):
        cur[k], cur[k + 1] = cur[k + 1], cur[k]
    assert tuple(cur) == s


@pytest.mark.parametrize("V", closed_examples(), ids=lambda V: V.name)
def test_closed_examples_validate_and_close(V):
    assert V.validate().ok
    X = UV_from_monoidal(V)
    assert validate_symmetric_multicat(X, max_arity=2).ok
    found = find_closed_structure(X)
    assert found is not None
    hom, rev = found
    assert check_closed(X, hom, rev, max_context=2).ok
    cs = derive_closed_structure(X, hom, rev, find_unit(X))
    assert cs.report.ok


def test_max_monoid_is_not_closed():
    V = thin_monoidal([0, 1, 2], lambda a, b: a <= b, max, 0, "max")
    assert V.validate().ok
    assert find_closed_structure(UV_from_monoidal(V)) is None


def test_unit_is_nullary_at_monoidal_unit():
    X = UV_from_monoidal(chain_monoidal(3))
    u = find_unit(X)
    assert X.dom(u) == () and X.cod(u) == 2


def test_universal_implies_strongly_universal_in_chain3():
    X = UV_from_monoidal(chain_monoidal(3))
    seen = 0
    for xs in X.sequences(2):
        for y in X.objects:
            for f in X.hom(xs, y):
                if is_universal(X, f):
                    seen += 1
                    assert is_strongly_universal(X, f, context_arity=2)
    assert seen > 0


def test_free_generated_universality():
    one = free_generated_multicategory(["z"], 1)
    assert validate_symmetric_multicat(one, max_arity=2).ok
    f = one.hom((0, 1), 2)[0]
    assert is_universal(one, f) and is_strongly_universal(one, f)
    two = free_generated_multicategory(["z", "w"], 1)
    assert not any(is_universal(two, g) for g in two.hom((0, 1), 2))


def test_functions_multicategory():
    X = FunctionMulticategory([1, 2])
    assert len(X.hom((2, 2), 2)) == 2 ** 4
    assert validate_symmetric_multicat(X, max_arity=1).ok
    assert validate_symmetric_multicat(FunctionMulticategory([2]), max_arity=2).ok
    X.size_limit = 10
    with pytest.raises(SizeLimitExceeded):
        X._checked_hom((2, 2), 2)
    assert universality_verdict(X, X.identity(2), strong=True) == "unknown"


def test_tabulated_multicategory_round_trip():
    X = UV_from_monoidal(vect_dims_monoidal(2))
    T = TableMulticategory.tabulate(X, max_arity=2)
    assert validate_symmetric_multicat(T, max_arity=2).ok


def test_table_mutations_are_detected():
    T = TableMulticategory.tabulate(UV_from_monoidal(vect_dims_monoidal(2)), max_arity=2)
    muts = table_mutations(T, 6, seed=3)
    assert len(muts) == 6
    for table, key, M in muts:
        assert not validate_symmetric_multicat(M, max_arity=2).ok, (table, key)


def test_table_mutations_are_deterministic():
    T = TableMulticategory.tabulate(UV_from_monoidal(vect_dims_monoidal(2)), max_arity=2)
    assert [(t, k) for t, k, _ in table_mutations(T, 4, seed=5)] == \
           [(t, k) for t, k, _ in table_mutations(T, 4, seed=5)]


def test_F_of_categories_over_objects():
    A = cat_over_set({"A": walking_arrow(), "C": chain_category(2)})
    assert A.validate().ok
    assert validate_symmetric_multicat(build_F(A), max_arity=1).ok
    assert validate_symmetric_multicat(build_F(cat_over_set({"A": walking_arrow()})), max_arity=2).ok


def test_F_of_endomorphisms():
    E = endomorphism_over_set(2)
    assert E.validate().ok
    FE = build_F(E)
    assert validate_symmetric_multicat(FE, max_arity=1).ok
    # every unary multimap is a function on {0,1} with its own part
    assert len(FE.hom(("*",), "*")) == 4


def test_F1_of_identity_functor_is_multifunctor():
    A = cat_over_set({"A": walking_arrow()})
    FA = build_F(A)
    c = A.category
    F = F1_on_functor(FA, FA, {o: o for o in c.objects}, {m: m for m in c.morphisms})
    assert F.check(max_arity=2).ok
    comps = {x: FA.identity(x) for x in FA.objects}
    assert check_multinatural(FA, FA, F, F, comps, max_arity=2).ok


def test_broken_multifunctor_is_reported():
    X = UV_from_monoidal(chain_monoidal(2))
    # unary maps sent to identities: ill-typed whenever source and target differ
    F = Multifunctor(X, X, {x: x for x in X.objects},
                     lambda f: X.identity(X.cod(f)) if len(X.dom(f)) == 1 else f)
    assert not F.check(max_arity=1).ok


def test_graph_multicategory_counts():
    L = VGraph.from_edges(["a"], [("l", "a", "a")])
    A = VGraph.from_edges(["a", "b"], [("x", "a", "b")])
    G = GraphMulticategory({"L": L, "A": A})
    assert len(G.hom(("A", "L"), "A")) == count_multimaps([A, L], A)
    assert validate_symmetric_multicat(G, max_arity=2).ok
