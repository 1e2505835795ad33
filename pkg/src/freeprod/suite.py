"""Built-in invariant suite: one small, fast instance per module.

Each entry returns a :class:`Report`; ``run_suite`` yields ``(name, report)``.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterator

from .catalog import arrow_graph, free_on, involution, walking_arrow
from .comparison import (IdentityGraphMonad, check_cartesian_naturality, compare_kappa_tilde_bar,
                         compare_with_tensor, free_tensor_comparison, graph_morphisms, is_well_pointed,
                         kappa, kappa_on_classes, kappa_tilde_square, pushout_formula_tensor)
from .fincat import FinGraph, funny_tensor
from .monads import (F2, category_monad, free_module, hom_algebras, rmodule_monad, tensor_algebras,
                     tensor_categories, validate_set_monad)
from .multicat import (UV_from_monoidal, derive_closed_structure, find_closed_structure, TableMulticategory,
                       find_unit, is_strongly_universal, is_universal, table_mutations, thin_monoidal,
                       validate_symmetric_multicat, vect_dims_monoidal)
from .multitensor import (EFunctor, check_coequalizer_universal, coequalize_E_categories,
                          ecategory_from_category, two_monoid_ecategory, validate_E_category)
from .report import Report
from .sesqui import check_interchange, free_whiskerable_pair, validate_sesqui, walking_two_cell
from .vgraph import VGraph, count_morphisms, count_morphisms_into_hom, count_multimaps, free_product_graphs


def two_diagonals(bound: int) -> Report:
    rep = Report(subject="two diagonals")
    A = free_on(arrow_graph())
    P = funny_tensor([A, A])
    rep.check("normal-forms", len(P.hom(("0", "0"), ("1", "1"), bound)) == 2, ())
    t = tensor_categories([walking_arrow(), walking_arrow()], bound)
    hom = t.algebra.hom(("0", "0"), ("1", "1"), bound)
    rep.check("coequalizer", len(hom) == 2 and not hom.exhausted, ())
    rep.merge(compare_with_tensor(pushout_formula_tensor([walking_arrow(), walking_arrow()], bound), t, bound),
              prefix="pushout:")
    images = kappa_on_classes(kappa(t), ("0", "0"), ("1", "1"), bound)
    rep.check("kappa-collapses", len(set(images.values())) == 1, ())
    return rep


def free_product_counts(bound: int) -> Report:
    rep = Report(subject="Z/2 free product")
    P = funny_tensor([involution(), involution()])
    o = P.objects[0]
    for k in range(1, bound + 1):
        n = len({P.canonical(p, 2 * k + 2) for p in P.words(o, o, k)})
        rep.check("count", n == 2 * k + 1, (k,), f"{n}")
    return rep


def graph_adjunction(bound: int) -> Report:
    rep = Report(subject="graph adjunction")
    gs = [VGraph.from_edges(["a"], [("l", "a", "a")]), VGraph.from_edges(["a", "b"], [("x", "a", "b")]),
          VGraph.from_edges(["a", "b"], [("x", "a", "b"), ("y", "b", "a")])]
    for A, B, C in itertools.product(gs, repeat=3):
        T, _ = free_product_graphs([A, B])
        n = count_morphisms(T, C)
        rep.check("hom-adjunction", n == count_morphisms_into_hom(A, B, C), ())
        rep.check("multimaps", n == count_multimaps([A, B], C), ())
    return rep


def module_tensor(bound: int) -> Report:
    rep = Report(subject="module tensor")
    for m, n in [(1, 1), (1, 2), (2, 1)]:
        t = tensor_algebras([free_module(F2, m), free_module(F2, n)])
        rep.check("size", len(t.algebra.carrier) == 2 ** (m * n), (m, n), f"{len(t.algebra.carrier)}")
    rep.check("hom", len(hom_algebras(free_module(F2, 1), free_module(F2, 1)).carrier) == 2, ())
    rep.merge(validate_set_monad(rmodule_monad(F2), [(), (0,), (0, 1)]), prefix="monad:")
    return rep


def tensor_of_frees(bound: int) -> Report:
    rep = Report(subject="tensor of frees")
    X = FinGraph(["0", "1"], [("f", "0", "1")])
    L = FinGraph(["*"], [("l", "*", "*")])
    for gs in ([X, L], [L, L], [X, X]):
        rep.merge(free_tensor_comparison(gs, min(bound, 3)))
    return rep


def kappa_checks(bound: int) -> Report:
    rep = Report(subject="kappa tilde")
    X = FinGraph(["0", "1"], [("f", "0", "1")])
    L = FinGraph(["*"], [("l", "*", "*")])
    rep.merge(compare_kappa_tilde_bar([X, L]))
    squares = [kappa_tilde_square([X, X], [L, L], [h, h]) for h in graph_morphisms(X, L)]
    rep.merge(check_cartesian_naturality(squares), prefix="naturality:")
    return rep


def universal_strong(bound: int) -> Report:
    rep = Report(subject="universal implies strongly universal")
    V = thin_monoidal([0, 1, 2], lambda a, b: a <= b, min, 2, "chain3")
    X = UV_from_monoidal(V)
    for xs in [(a, b) for a in X.objects for b in X.objects]:
        for y in X.objects:
            for f in X.hom(xs, y):
                if is_universal(X, f):
                    rep.check("strong", is_strongly_universal(X, f, context_arity=1), (str(f),))
    hom, rev = find_closed_structure(X)
    cs = derive_closed_structure(X, hom, rev, find_unit(X))
    rep.merge(cs.report, prefix="closed:")
    return rep


def ecat_coequalizer(bound: int) -> Report:
    from .fincat import FinCategory
    par = FinCategory(["0", "1"], {"i0": ("0", "0"), "i1": ("1", "1"), "p": ("0", "1"), "q": ("0", "1")},
                      {"0": "i0", "1": "i1"},
                      {("i0", "i0"): "i0", ("i1", "i1"): "i1", ("i0", "p"): "p", ("i0", "q"): "q",
                       ("p", "i1"): "p", ("q", "i1"): "q"})
    B, W = ecategory_from_category(par), ecategory_from_category(walking_arrow())
    ids = {"id0": "i0", "id1": "i1"}
    f = EFunctor(W, B, {"0": "0", "1": "1"}, {**ids, "f": "p"})
    g = EFunctor(W, B, {"0": "0", "1": "1"}, {**ids, "f": "q"})
    co = coequalize_E_categories(f, g)
    rep = Report(subject="E-category coequalizer")
    rep.merge(co.report)
    rep.check("identified", len(co.category.homs[("0", "1")]) == 1, ())
    rep.merge(check_coequalizer_universal(co, f, g, [B, W]), prefix="universal:")
    rep.merge(validate_E_category(two_monoid_ecategory()), prefix="two-monoids:")
    return rep


def well_pointed(bound: int) -> Report:
    rep = Report(subject="well-pointedness")
    rep.check("category-monad", is_well_pointed(category_monad(), bound), ())
    rep.check("identity-graph-monad", not is_well_pointed(IdentityGraphMonad(), bound), ())
    return rep


def mutation_detection(bound: int) -> Report:
    rep = Report(subject="mutation detection")
    T = TableMulticategory.tabulate(UV_from_monoidal(vect_dims_monoidal(2)), max_arity=2)
    for table, key, M in table_mutations(T, 3, seed=1):
        rep.check("multicategory", not validate_symmetric_multicat(M, max_arity=2).ok, (table, key))
    return rep


def sesqui_checks(bound: int) -> Report:
    rep = Report(subject="sesqui-categories")
    rep.merge(validate_sesqui(walking_two_cell()), prefix="walking:")
    S = free_whiskerable_pair()
    rep.merge(validate_sesqui(S), prefix="free:")
    rep.check("interchange-distinct", not check_interchange(S).ok, ())
    return rep


SUITE: dict[str, Callable[[int], Report]] = {
    "two-diagonals": two_diagonals,
    "free-product-counts": free_product_counts,
    "graph-adjunction": graph_adjunction,
    "module-tensor": module_tensor,
    "tensor-of-frees": tensor_of_frees,
    "kappa": kappa_checks,
    "universal-strong": universal_strong,
    "ecat-coequalizer": ecat_coequalizer,
    "well-pointed": well_pointed,
    "mutations": mutation_detection,
    "sesqui": sesqui_checks,
}


def run_suite(bound: int = 3, names=None) -> Iterator[tuple[str, Report]]:
    for name, fn in SUITE.items():
        if names and name not in names:
            continue
        yield name, fn(bound)
