"""A fixed suite of twenty single-entry mutations across the axiom validators.

Each entry is ``(family, label, thunk)``; the thunk builds the mutated
structure and returns its validation report, which must fail.
"""
from freeprod.catalog import chain_category
from freeprod.monads import F2, MutatedSetMonad, rmodule_monad, validate_set_monad
from freeprod.multicat import (TableMulticategory, UV_from_monoidal, table_mutations,
                               validate_symmetric_multicat, vect_dims_monoidal)
from freeprod.multitensor import (ECategory, ecategory_from_category, operad_mutation, two_monoid_ecategory,
                                  two_monoid_operad, validate_E_category)
from freeprod.sesqui import (free_whiskerable_pair, sesqui_from_monoidal, sesqui_mutation, validate_sesqui,
                             walking_two_cell)
from freeprod.vgraph import SetMap

SETS = [(), (0,), (0, 1)]
MAPS = [SetMap((0, 1), (0,), (0, 0)), SetMap((0,), (0, 1), (1,)), SetMap((0, 1), (0, 1), (1, 0))]


def _multicat_entries():
    T = TableMulticategory.tabulate(UV_from_monoidal(vect_dims_monoidal(2)), max_arity=2)
    out = []
    for table, key, M in table_mutations(T, 6, seed=3):
        out.append(("multicategory", f"{table} {key}", lambda M=M: validate_symmetric_multicat(M, max_arity=2)))
    return out


def _ecat_entry(base, key, value):
    def run():
        A = base()
        table = dict(A.table)
        assert key in table and table[key] != value
        table[key] = value
        return validate_E_category(ECategory(A.objects, A.homs, A.operad, table, A.name))
    return run


def _ecat_entries():
    O = two_monoid_operad(3)
    a2, b2 = O.elements(2)
    u0 = O.elements(0)[0]
    chain = lambda: ecategory_from_category(chain_category(3))
    C = chain()
    f01 = C.homs[(0, 1)][0]
    f12 = C.homs[(1, 2)][0]
    m2 = C.operad.elements(2)[0]
    return [
        ("E-category", "a(1,1)", _ecat_entry(two_monoid_ecategory, (a2, (1, 1)), 1)),
        ("E-category", "b(0,2)", _ecat_entry(two_monoid_ecategory, (b2, (0, 2)), 1)),
        ("E-category", "unit(1)", _ecat_entry(two_monoid_ecategory, (O.unit, (1,)), 2)),
        ("E-category", "nullary", _ecat_entry(two_monoid_ecategory, (u0, (), "*"), 1)),
        ("E-category", "chain composite", _ecat_entry(chain, (m2, (f01, f12)), C.homs[(0, 1)][0])),
    ]


def _sesqui_entries():
    def free_right():
        S = free_whiskerable_pair()
        Hxy, Hxz = S.homs[("x", "y")], S.homs[("x", "z")]
        alpha = next(m for m, (s, t) in Hxy.morphisms.items() if s != t)
        return validate_sesqui(sesqui_mutation(S, ("x", "y", "z"), (0, ("g",)), alpha, Hxz.identities[("f", "g")]))

    def free_left():
        S = free_whiskerable_pair()
        Hyz, Hxz = S.homs[("y", "z")], S.homs[("x", "z")]
        beta = next(m for m, (s, t) in Hyz.morphisms.items() if s != t)
        other = next(m for m, (s, t) in Hxz.morphisms.items() if (s, t) == (("f'", "g"), ("f'", "g'")))
        return validate_sesqui(sesqui_mutation(S, ("x", "y", "z"), (1, ("f",)), beta, other))

    def walking_unit():
        S = walking_two_cell()
        return validate_sesqui(sesqui_mutation(S, ("x", "x", "y"), (1, ("1x",)), "alpha", "1f"))

    def unit_scalar():
        # scalar 2 sent to 1 by whiskering with the unit: still a functor, not unital
        S = sesqui_from_monoidal(vect_dims_monoidal(3))
        return validate_sesqui(sesqui_mutation(S, ("*", "*", "*"), (0, (1,)), ("s", 2), ("s", 1)))

    return [("sesqui", "right whisker", free_right), ("sesqui", "left whisker", free_left),
            ("sesqui", "unit whisker", walking_unit), ("sesqui", "unit scalar", unit_scalar)]


def _monad_entries():
    T = rmodule_monad(F2)
    cases = [("unit", ((0, 1), 0), (0, 1)), ("mult", ((0,), (0, 1)), (0,)),
             ("fmap", (MAPS[2], (1, 0)), (1, 0)), ("phi", (((0,), (0,)), ((1,), (1,))), (0,))]
    return [("monad", op, lambda op=op, k=k, v=v: validate_set_monad(MutatedSetMonad(T, op, k, v), SETS, MAPS))
            for op, k, v in cases]


def _operad_entries():
    def run():
        O = two_monoid_operad(3)
        a2 = O.elements(2)[0]
        key = (a2, (a2, "x"))
        return operad_mutation(O, key, O.elements(3)[-1]).validate()
    return [("operad", "a(a,x)", run)]


def mutation_suite() -> list:
    return _multicat_entries() + _ecat_entries() + _sesqui_entries() + _monad_entries() + _operad_entries()
