import pytest

from freeprod.catalog import chain_category, cyclic_group, walking_arrow
from freeprod.multicat import closed_examples, discrete_group_monoidal
from freeprod.sesqui import (check_interchange, free_whiskerable_pair, sesqui_from_category, sesqui_from_enrichment,
                             sesqui_from_monoidal, sesqui_mutation, validate_sesqui, walking_two_cell)


@pytest.mark.parametrize("C", [walking_arrow(), chain_category(3), cyclic_group(3)], ids=["2", "3", "Z3"])
def test_categories_are_sesqui_categories(C):
    S = sesqui_from_category(C)
    assert validate_sesqui(S).ok
    assert check_interchange(S).ok


def test_walking_two_cell():
    S = walking_two_cell()
    assert validate_sesqui(S).ok
    assert check_interchange(S).ok
    assert S.whisker_left("x", "x", "y", "1x", "alpha") == "alpha"


@pytest.mark.parametrize("V", closed_examples(), ids=lambda V: V.name)
def test_monoidal_categories_satisfy_interchange(V):
    S = sesqui_from_monoidal(V)
    assert validate_sesqui(S).ok
    assert check_interchange(S).ok


def test_free_whiskerable_pair_breaks_interchange():
    S = free_whiskerable_pair()
    assert validate_sesqui(S).ok
    rep = check_interchange(S)
    assert not rep.ok
    assert len(rep.violations) == 1
    # the two composites are the two orders of the moves
    Hxz = S.homs[("x", "z")]
    assert len(Hxz.hom(("f", "g"), ("f'", "g'"))) == 2


def test_missing_composition_is_rejected():
    S = walking_two_cell()
    homs = dict(S.homs)
    homs[("y", "x")] = homs[("x", "y")]
    with pytest.raises(ValueError):
        sesqui_from_enrichment(["x", "y"], homs, S.identity, {})


def test_whiskering_mutation_is_detected():
    S = free_whiskerable_pair()
    Hxy, Hxz = S.homs[("x", "y")], S.homs[("x", "z")]
    alpha = next(m for m in Hxy.morphisms if Hxy.morphisms[m][0] != Hxy.morphisms[m][1])
    wrong = Hxz.identities[("f", "g")]
    T = sesqui_mutation(S, ("x", "y", "z"), (0, ("g",)), alpha, wrong)
    assert not validate_sesqui(T).ok
    assert validate_sesqui(S).ok


def test_one_cell_associativity_break_is_detected():
    # Z/3 with 1 * 1 sent to 0: every part stays a functor and unital
    S = sesqui_from_monoidal(discrete_group_monoidal(3))
    T = S.copy()
    m = T.compose[("*", "*", "*")]
    m.object_map[(1, 1)] = 0
    m.parts[(0, (1,))].obj_map[1] = 0
    m.parts[(0, (1,))].mor_map[("id", 1)] = ("id", 0)
    m.parts[(1, (1,))].obj_map[1] = 0
    m.parts[(1, (1,))].mor_map[("id", 1)] = ("id", 0)
    rep = validate_sesqui(T)
    assert not rep.ok
    axioms = {v.axiom for v in rep.violations}
    assert "assoc-1cell" in axioms
    assert not any(a.startswith("functoriality") or a.startswith("unit") for a in axioms)
