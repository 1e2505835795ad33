import pytest

from freeprod.catalog import chain_category
from freeprod.monads import F2, rmodule_monad, validate_set_monad
from freeprod.multicat import TableMulticategory, UV_from_monoidal, validate_symmetric_multicat, vect_dims_monoidal
from freeprod.multitensor import ecategory_from_category, two_monoid_ecategory, two_monoid_operad, validate_E_category
from freeprod.sesqui import free_whiskerable_pair, sesqui_from_monoidal, validate_sesqui, walking_two_cell

from mutants import MAPS, SETS, mutation_suite

SUITE = mutation_suite()


def test_suite_has_twenty_entries_over_every_validator():
    assert len(SUITE) == 20
    assert {fam for fam, _, _ in SUITE} == {"multicategory", "E-category", "sesqui", "monad", "operad"}


def test_unmutated_structures_pass():
    T = TableMulticategory.tabulate(UV_from_monoidal(vect_dims_monoidal(2)), max_arity=2)
    assert validate_symmetric_multicat(T, max_arity=2).ok
    assert validate_E_category(two_monoid_ecategory()).ok
    assert validate_E_category(ecategory_from_category(chain_category(3))).ok
    for S in (free_whiskerable_pair(), walking_two_cell(), sesqui_from_monoidal(vect_dims_monoidal(3))):
        assert validate_sesqui(S).ok
    assert validate_set_monad(rmodule_monad(F2), SETS, MAPS).ok
    assert two_monoid_operad(3).validate().ok


@pytest.mark.parametrize("family,label,thunk", SUITE, ids=[f"{f}-{l}" for f, l, _ in SUITE])
def test_mutation_is_detected(family, label, thunk):
    rep = thunk()
    assert not rep.ok
    assert rep.violations
