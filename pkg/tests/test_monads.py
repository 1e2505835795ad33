import itertools

import pytest

from freeprod.catalog import arrow_graph, chain_category, cyclic_group, free_on, involution, walking_arrow
from freeprod.fincat import FinCategory, FinGraph, functors_between, funny_tensor, to_fin_category
from freeprod.monads import (F2, EMMulticategory, FiniteCommRing, IdentityMonad, MutatedSetMonad, TAlgebra,
                             algebra_maps, category_monad, category_multimaps, free_algebra, free_module,
                             hom_algebras, hom_categories, is_algebra_map_in_each_variable, is_multi_algebra_map, linear_maps,
                             module_algebra, module_ops_from_algebra, rmodule_monad, tensor_algebras,
                             tensor_categories, unit_algebra, validate_module, validate_set_monad, zmod)
from freeprod.multicat import validate_symmetric_multicat
from freeprod.vgraph import SetMap

from oracles import count_bilinear_f2, count_linear_f2

SETS = [(), (0,), (0, 1)]
MAPS = [SetMap((0, 1), (0,), (0, 0)), SetMap((0,), (0, 1), (1,)), SetMap((0, 1), (0, 1), (1, 0))]


def z2_over_z4() -> TAlgebra:
    R = zmod(4)
    E = (0, 1)
    return module_algebra(R, E, {(a, b): (a + b) % 2 for a in E for b in E},
                          {(c, x): (c * x) % 2 for c in R.elements for x in E}, 0, "Z/2")


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_zmod_is_a_ring(n):
    assert zmod(n).validate().ok


def test_broken_ring_is_reported():
    R = zmod(3)
    mul = dict(R.mul)
    mul[(2, 2)] = 2
    assert not FiniteCommRing(R.elements, R.add, mul, 0, 1).validate().ok


@pytest.mark.parametrize("R", [F2, zmod(3)], ids=["F2", "Z3"])
def test_rmodule_monad_laws(R):
    assert validate_set_monad(rmodule_monad(R), SETS, MAPS).ok


def test_identity_monad_laws():
    assert validate_set_monad(IdentityMonad(), SETS, MAPS).ok


def test_large_carriers_are_sampled_and_noted():
    rep = validate_set_monad(rmodule_monad(zmod(3)), [(0, 1)], limit=50)
    assert rep.ok and "sampled" in rep.notes


@pytest.mark.parametrize("op,key,value", [
    ("unit", ((0, 1), 0), (0, 1)),
    ("mult", ((0,), (0, 1)), (0,)),
    ("fmap", (MAPS[2], (1, 0)), (1, 0)),
    ("phi", (((0,), (0,)), ((1,), (1,))), (0,)),
])
def test_monad_mutations_are_detected(op, key, value):
    T = MutatedSetMonad(rmodule_monad(F2), op, key, value)
    assert not validate_set_monad(T, SETS, MAPS).ok


@pytest.mark.parametrize("m", [0, 1, 2])
def test_free_modules_are_algebras(m):
    A = free_module(F2, m)
    assert A.validate().ok
    add, scale = module_ops_from_algebra(A)
    assert validate_module(F2, A.carrier, add, scale).ok
    assert add == {k: v for k, v in A.module[0].items()}


def test_free_algebra_is_an_algebra():
    assert free_algebra(rmodule_monad(F2), (0, 1)).validate().ok


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_linear_maps_match_matrix_count(m, n):
    A, B = free_module(F2, m), free_module(F2, n)
    expected = count_linear_f2(m, n)
    assert len(algebra_maps(A, B)) == len(linear_maps(A, B)) == expected
    H = hom_algebras(A, B)
    assert len(H.carrier) == expected
    assert H.validate(limit=256).ok


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_module_tensor_size_and_universal_property(m, n):
    A, B = free_module(F2, m), free_module(F2, n)
    t = tensor_algebras([A, B])
    assert len(t.algebra.carrier) == 2 ** (m * n)
    assert t.reflexive_ok
    assert t.algebra.validate(limit=256).ok
    assert is_algebra_map_in_each_variable(t.universal, [A, B], t.algebra)
    # algebra maps out of the tensor correspond to bilinear forms
    line = free_module(F2, 1)
    n_bilinear = count_bilinear_f2(m, n)
    assert len(linear_maps(t.algebra, line)) == n_bilinear
    if m * n <= 2:
        assert len(algebra_maps(t.algebra, line)) == n_bilinear
    em = EMMulticategory(rmodule_monad(F2), {"A": A, "B": B, "L": line})
    assert len(em.hom(("A", "B"), "L")) == n_bilinear


def test_every_bilinear_map_factors_uniquely():
    A, B, L = free_module(F2, 1), free_module(F2, 2), free_module(F2, 1)
    t = tensor_algebras([A, B])
    em = EMMulticategory(rmodule_monad(F2), {"A": A, "B": B, "L": L})
    maps = algebra_maps(t.algebra, L)
    for f in em.hom(("A", "B"), "L"):
        fn = em.forgetful(f)
        hits = [g for g in maps if all(g(t.universal(a, b)) == fn(a, b) for a in A.carrier for b in B.carrier)]
        assert len(hits) == 1


def test_tensor_over_z4():
    R = zmod(4)
    Z4, Z2 = free_module(R, 1), z2_over_z4()
    assert Z2.validate().ok
    assert len(tensor_algebras([Z4, Z2]).algebra.carrier) == 2
    assert len(tensor_algebras([Z2, Z2]).algebra.carrier) == 2


def test_unit_algebra_is_neutral():
    T = rmodule_monad(F2)
    U = unit_algebra(T)
    assert len(U.carrier) == 2
    for m in (1, 2):
        A = free_module(F2, m)
        assert len(tensor_algebras([A, U]).algebra.carrier) == len(A.carrier)


def test_identity_monad_tensor_is_product():
    T = IdentityMonad()
    A = TAlgebra(T, (0, 1), lambda x: x)
    B = TAlgebra(T, ("a", "b", "c"), lambda x: x)
    t = tensor_algebras([A, B])
    assert len(t.algebra.carrier) == 6
    assert is_multi_algebra_map(t.universal, [A, B], t.algebra)


def test_em_multicategory_is_symmetric_multicategory():
    em = EMMulticategory(rmodule_monad(F2), {"L": free_module(F2, 1), "U": unit_algebra(rmodule_monad(F2))})
    assert validate_symmetric_multicat(em, max_arity=2).ok


def test_category_monad_laws_and_unit():
    M = category_monad()
    gs = [arrow_graph(), FinGraph(["*"], [("l", "*", "*")]), FinGraph(["a", "b"], [("x", "a", "b"), ("y", "b", "a")])]
    assert M.validate(gs, bound=3).ok
    T0 = M.T0()
    assert len(T0.objects) == 1 and len(T0.hom("*", "*", 4)) == 1


def test_tensor_of_walking_arrows_has_two_diagonals():
    t = tensor_categories([walking_arrow(), walking_arrow()], 4)
    h = t.algebra.hom(("0", "0"), ("1", "1"), 4)
    assert len(h) == 2 and not h.exhausted
    assert not t.truncated


def test_tensor_of_presented_factors_is_truncated_by_gen_bound():
    t = tensor_categories([free_on(arrow_graph()), free_on(FinGraph(["*"], [("l", "*", "*")]))], 4, gen_bound=2)
    assert t.truncated


def test_tensor_of_groups_matches_funny_tensor():
    t = tensor_categories([cyclic_group(2), cyclic_group(2)], 6)
    o = t.algebra.objects[0]
    P = funny_tensor([involution(), involution()])
    for k in range(1, 4):
        assert len({t.algebra.canonical(p, 2 * k + 2) for p in t.algebra.words(o, o, k)}) == 2 * k + 1
        assert len(P.hom(P.objects[0], P.objects[0], k)) == 2 * k + 1


@pytest.mark.parametrize("A,B,C", [
    (walking_arrow(), walking_arrow(), chain_category(3)),
    (walking_arrow(), cyclic_group(2), cyclic_group(2)),
    (chain_category(2), walking_arrow(), walking_arrow()),
])
def test_multimaps_and_hom_category_adjunction(A, B, C):
    P = to_fin_category(funny_tensor([A.presentation, B.presentation]), 6)
    n = sum(1 for _ in functors_between(P, C))
    assert len(category_multimaps([A, B], C)) == n
    assert sum(1 for _ in functors_between(A, hom_categories(B, C))) == n


def test_hom_category_of_points():
    one = FinCategory.terminal()
    H = hom_categories(one, walking_arrow())
    assert len(H.objects) == 2 and len(H.morphisms) == 3


def test_carrier_sizes():
    T = rmodule_monad(zmod(3))
    assert T.carrier_size((0, 1)) == 9
    assert len(list(itertools.islice(T.carrier((0, 1)), 100))) == 9
