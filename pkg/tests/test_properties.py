import itertools

from hypothesis import given, settings, strategies as st

from freeprod.catalog import cyclic_group
from freeprod.fincat import FinGraph, free_category, funny_tensor, validate_fin_category
from freeprod.monads import F2, free_module, module_ops_from_algebra, tensor_algebras, validate_module, zmod
from freeprod.multicat import adjacent_transpositions, block_perm, perm_identity, perm_inverse, perm_mul
from freeprod.multitensor import MultitensorOnSet, two_monoid_operad
from freeprod.vgraph import VGraph, count_morphisms, count_multimaps, free_product_graphs

from oracles import brute_free_product, brute_graph_morphisms, brute_multimaps

FAST = settings(max_examples=40, deadline=None)


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


@st.composite
def perm_triples(draw):
    n = draw(st.integers(0, 5))
    return draw(perms(n)), draw(perms(n)), draw(perms(n))


@FAST
@given(perm_triples())
def test_permutations_form_a_group(triple):
    s, t, u = triple
    n = len(s)
    assert perm_mul(perm_mul(s, t), u) == perm_mul(s, perm_mul(t, u))
    assert perm_mul(s, perm_identity(n)) == s == perm_mul(perm_identity(n), s)
    assert perm_mul(s, perm_inverse(s)) == perm_identity(n)


@FAST
@given(st.integers(0, 5).flatmap(perms))
def test_adjacent_transpositions_rebuild(s):
    cur = list(range(len(s)))
    for k in adjacent_transpositions(s):
        cur[k], cur[k + 1] = cur[k + 1], cur[k]
    assert tuple(cur) == s


@FAST
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3).flatmap(
    lambda ks: st.tuples(perms(len(ks)), st.tuples(*[perms(k) for k in ks]))))
def test_block_permutations_are_permutations(data):
    sigma, taus = data
    b = block_perm(sigma, taus)
    assert sorted(b) == list(range(sum(len(t) for t in taus)))
    # identities in, identity out
    assert block_perm(perm_identity(len(taus)), [perm_identity(len(t)) for t in taus]) == \
        perm_identity(sum(len(t) for t in taus))


@st.composite
def small_graphs(draw, max_objects=2, max_edges=3):
    n = draw(st.integers(1, max_objects))
    objs = [f"o{i}" for i in range(n)]
    m = draw(st.integers(0, max_edges))
    edges = [(f"e{i}", draw(st.sampled_from(objs)), draw(st.sampled_from(objs))) for i in range(m)]
    return objs, edges


def vg(g):
    return VGraph.from_edges(g[0], g[1])


@FAST
@given(small_graphs(), small_graphs())
def test_graph_morphism_counts(X, Y):
    assert count_morphisms(vg(X), vg(Y)) == brute_graph_morphisms(X, Y)


@FAST
@given(small_graphs(), small_graphs())
def test_free_product_homs(X, Y):
    T, alpha = free_product_graphs([vg(X), vg(Y)])
    objs, edges = brute_free_product(X, Y)
    assert set(T.objects) == set(objs)
    for a, b in itertools.product(objs, repeat=2):
        assert len(T.hom(a, b)) == sum(1 for _, s, t in edges if (s, t) == (a, b))


@settings(max_examples=25, deadline=None)
@given(small_graphs(max_edges=2), small_graphs(max_edges=2), small_graphs(max_edges=2))
def test_multimap_counts(A, B, C):
    T, _ = free_product_graphs([vg(A), vg(B)])
    n = brute_multimaps(A, B, C)
    assert count_multimaps([vg(A), vg(B)], vg(C)) == n == count_morphisms(T, vg(C))


@FAST
@given(small_graphs(max_objects=2, max_edges=2), st.data())
def test_free_category_composition_is_associative(g, data):
    P = free_category(FinGraph(g[0], g[1]))
    paths = [p for a in g[0] for p in P.words_from(a, 2)]
    p = data.draw(st.sampled_from(paths))
    nexts = [q for q in paths if q.src == p.tgt]
    q = data.draw(st.sampled_from(nexts))
    r = data.draw(st.sampled_from([x for x in paths if x.src == q.tgt]))
    assert p.then(q).then(r) == p.then(q.then(r))
    assert len(p.then(q).word) == len(p.word) + len(q.word)


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 7))
def test_zmod_ring_laws(n):
    assert zmod(n).validate().ok


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2))
def test_free_modules_satisfy_module_laws(n, m):
    R = zmod(n)
    A = free_module(R, m)
    add, scale = module_ops_from_algebra(A)
    assert len(A.carrier) == n ** m
    assert validate_module(R, A.carrier, add, scale).ok


@settings(max_examples=6, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2))
def test_tensor_of_free_f2_modules_multiplies_ranks(m, n):
    t = tensor_algebras([free_module(F2, m), free_module(F2, n)])
    assert len(t.algebra.carrier) == 2 ** (m * n)


@settings(max_examples=8, deadline=None)
@given(st.integers(1, 5))
def test_free_product_of_z2_counts_reduced_words(k):
    from oracles import reduced_alternating_words
    P = funny_tensor([cyclic_group(2).presentation, cyclic_group(2).presentation])
    o = P.objects[0]
    assert len({P.canonical(p, 2 * k + 2) for p in P.words(o, o, k)}) == len(reduced_alternating_words(k))


@FAST
@given(st.lists(st.sampled_from([(0,), (0, 1), ("a", "b", "c")]), min_size=0, max_size=3), st.data())
def test_multitensor_units_and_distribution(sets, data):
    M = MultitensorOnSet(two_monoid_operad(3))
    for t in M.apply(sets):
        assert M.sigma((M.operad.unit, (t,))) == t
        assert M.sigma((t[0], tuple(M.iota(x) for x in t[1]))) == t
    if sets:
        i = data.draw(st.integers(0, len(sets) - 1))
        rest = sets[:i] + sets[i + 1:]
        assert M.closedness_witness(rest, i, ("y",), ("z1", "z2"))


@settings(max_examples=5, deadline=None)
@given(st.integers(1, 5))
def test_cyclic_groups_are_categories(n):
    assert validate_fin_category(cyclic_group(n)).ok
