"""Sesqui-categories: categories enriched over the funny tensor.

Hom-categories hold 1-cells (objects) and 2-cells (morphisms).  Horizontal
composition is a separately functorial multimap, so each 1-cell whiskers
2-cells on either side and no interchange law is imposed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .catalog import arrow_graph, free_on
from .fincat import FinCategory, Functor, funny_tensor, lift_path, to_fin_category
from .report import Report
from .vgraph import CatMultimap


@dataclass
class SesquiCategory:
    objects: tuple
    homs: dict  # (a, b) -> FinCategory of 1-cells and 2-cells
    identity: dict  # a -> 1-cell of homs[(a, a)]
    compose: dict  # (a, b, c) -> CatMultimap (homs[(a,b)], homs[(b,c)]) -> homs[(a,c)]
    name: str = ""

    def comp1(self, a, b, c, f, g):
        """Composite 1-cell *f then g*."""
        return self.compose[(a, b, c)].object_map[(f, g)]

    def whisker_left(self, a, b, c, f, beta):
        """``f . beta`` for ``f`` in (a, b) and a 2-cell ``beta`` in (b, c)."""
        return self.compose[(a, b, c)].parts[(1, (f,))](beta)

    def whisker_right(self, a, b, c, alpha, g):
        """``alpha . g`` for a 2-cell ``alpha`` in (a, b) and ``g`` in (b, c)."""
        return self.compose[(a, b, c)].parts[(0, (g,))](alpha)

    def copy(self) -> "SesquiCategory":
        comp = {k: CatMultimap(m.doms, m.cod, dict(m.object_map),
                               {pk: Functor(F.dom, F.cod, dict(F.obj_map), dict(F.mor_map))
                                for pk, F in m.parts.items()})
                for k, m in self.compose.items()}
        return SesquiCategory(self.objects, dict(self.homs), dict(self.identity), comp, self.name)


def validate_sesqui(S: SesquiCategory) -> Report:
    """Separate functoriality, units and associativity of 1-cells and both whiskerings."""
    rep = Report(subject=f"sesqui-category {S.name}".strip())
    obs = S.objects
    H = S.homs
    for (a, b, c), m in S.compose.items():
        rep.check("typing", m.doms == (H[(a, b)], H[(b, c)]) and m.cod == H[(a, c)], (a, b, c))
        rep.merge(m.check(), prefix="functoriality:")
    if not rep.ok:
        return rep
    for a in obs:
        rep.check("unit-typing", S.identity[a] in H[(a, a)].objects, (a,))
    for a, b in itertools.product(obs, repeat=2):
        Hab = H[(a, b)]
        ia, ib = S.identity[a], S.identity[b]
        for f in Hab.objects:
            rep.check("unit-1cell", S.comp1(a, a, b, ia, f) == f and S.comp1(a, b, b, f, ib) == f, (a, b, f))
        for al in Hab.morphisms:
            rep.check("unit-2cell", S.whisker_left(a, a, b, ia, al) == al and S.whisker_right(a, b, b, al, ib) == al,
                      (a, b, al))
    for a, b, c, d in itertools.product(obs, repeat=4):
        Hab, Hbc, Hcd = H[(a, b)], H[(b, c)], H[(c, d)]
        for f, g, h in itertools.product(Hab.objects, Hbc.objects, Hcd.objects):
            fg, gh = S.comp1(a, b, c, f, g), S.comp1(b, c, d, g, h)
            rep.check("assoc-1cell", S.comp1(a, c, d, fg, h) == S.comp1(a, b, d, f, gh), (f, g, h))
        for al, g, h in itertools.product(Hab.morphisms, Hbc.objects, Hcd.objects):
            lhs = S.whisker_right(a, c, d, S.whisker_right(a, b, c, al, g), h)
            rhs = S.whisker_right(a, b, d, al, S.comp1(b, c, d, g, h))
            rep.check("assoc-right", lhs == rhs, (al, g, h))
        for f, be, h in itertools.product(Hab.objects, Hbc.morphisms, Hcd.objects):
            lhs = S.whisker_right(a, c, d, S.whisker_left(a, b, c, f, be), h)
            rhs = S.whisker_left(a, b, d, f, S.whisker_right(b, c, d, be, h))
            rep.check("assoc-middle", lhs == rhs, (f, be, h))
        for f, g, ga in itertools.product(Hab.objects, Hbc.objects, Hcd.morphisms):
            lhs = S.whisker_left(a, c, d, S.comp1(a, b, c, f, g), ga)
            rhs = S.whisker_left(a, b, d, f, S.whisker_left(b, c, d, g, ga))
            rep.check("assoc-left", lhs == rhs, (f, g, ga))
    return rep


def check_interchange(S: SesquiCategory) -> Report:
    """Both horizontal composites of each pair of 2-cells agree (true in a 2-category)."""
    rep = Report(subject="interchange")
    for a, b, c in itertools.product(S.objects, repeat=3):
        Hab, Hbc, Hac = S.homs[(a, b)], S.homs[(b, c)], S.homs[(a, c)]
        for al, be in itertools.product(Hab.morphisms, Hbc.morphisms):
            (f, f2), (g, g2) = Hab.morphisms[al], Hbc.morphisms[be]
            one = Hac.then(S.whisker_right(a, b, c, al, g), S.whisker_left(a, b, c, f2, be))
            two = Hac.then(S.whisker_left(a, b, c, f, be), S.whisker_right(a, b, c, al, g2))
            rep.check("interchange", one == two, (al, be), f"{one} != {two}")
    return rep


# ---------------------------------------------------------------- builders


def sesqui_from_enrichment(objects, homs: Mapping, identity: Mapping, compose: Mapping, name="") -> SesquiCategory:
    """Assemble from hom-categories and composition multimaps.

    Triples missing from ``compose`` whose middle hom starts or ends at an
    identity-only category are filled with unit composition.
    """
    comp = dict(compose)
    for a, b, c in itertools.product(objects, repeat=3):
        if (a, b, c) in comp:
            continue
        if a == b:
            comp[(a, b, c)] = _unit_multimap(homs[(a, a)], homs[(a, c)], identity[a], side=0)
        elif b == c:
            comp[(a, b, c)] = _unit_multimap(homs[(a, b)], homs[(b, b)], identity[b], side=1)
        elif not homs[(a, b)].objects or not homs[(b, c)].objects:
            comp[(a, b, c)] = CatMultimap((homs[(a, b)], homs[(b, c)]), homs[(a, c)], {}, {})
        else:
            raise ValueError(f"missing composition for {(a, b, c)}")
    return SesquiCategory(tuple(objects), dict(homs), dict(identity), comp, name)


def _unit_multimap(left: FinCategory, right: FinCategory, unit, side: int) -> CatMultimap:
    """Composition with an identity-only hom; ``side`` is the slot that must hold the unit."""
    if side == 0:
        U, X = left, right
        om = {(u, x): x for u in U.objects for x in X.objects}
        parts = {(1, (u,)): Functor(X, X, {x: x for x in X.objects}, {m: m for m in X.morphisms}) for u in U.objects}
        parts.update({(0, (x,)): Functor(U, X, {u: x for u in U.objects},
                                         {m: X.identities[x] for m in U.morphisms}) for x in X.objects})
        return CatMultimap((U, X), X, om, parts)
    X, U = left, right
    om = {(x, u): x for x in X.objects for u in U.objects}
    parts = {(0, (u,)): Functor(X, X, {x: x for x in X.objects}, {m: m for m in X.morphisms}) for u in U.objects}
    parts.update({(1, (x,)): Functor(U, X, {u: x for u in U.objects},
                                     {m: X.identities[x] for m in U.morphisms}) for x in X.objects})
    return CatMultimap((X, U), X, om, parts)


def _terminal(label) -> FinCategory:
    return FinCategory([label], {("id", label): (label, label)}, {label: ("id", label)},
                       {(("id", label), ("id", label)): ("id", label)}, name=str(label))


_EMPTY = FinCategory([], {}, {}, {}, name="empty")


def sesqui_from_category(C: FinCategory) -> SesquiCategory:
    """Discrete hom-categories: an ordinary category."""
    homs = {}
    for a in C.objects:
        for b in C.objects:
            hs = C.hom(a, b)
            homs[(a, b)] = FinCategory(hs, {("id", f): (f, f) for f in hs}, {f: ("id", f) for f in hs},
                                       {(("id", f), ("id", f)): ("id", f) for f in hs})
    comp = {}
    for a, b, c in itertools.product(C.objects, repeat=3):
        L, R, T = homs[(a, b)], homs[(b, c)], homs[(a, c)]
        om = {(f, g): C.then(f, g) for f in L.objects for g in R.objects}
        parts = {(0, (g,)): Functor(L, T, {f: om[(f, g)] for f in L.objects},
                                    {("id", f): ("id", om[(f, g)]) for f in L.objects}) for g in R.objects}
        parts.update({(1, (f,)): Functor(R, T, {g: om[(f, g)] for g in R.objects},
                                         {("id", g): ("id", om[(f, g)]) for g in R.objects}) for f in L.objects})
        comp[(a, b, c)] = CatMultimap((L, R), T, om, parts)
    return SesquiCategory(C.objects, homs, {a: C.identities[a] for a in C.objects}, comp, C.name or "")


def walking_two_cell() -> SesquiCategory:
    """Objects x, y and a single 2-cell ``alpha : f => g`` between 1-cells x -> y."""
    Hxy = FinCategory(["f", "g"], {"1f": ("f", "f"), "1g": ("g", "g"), "alpha": ("f", "g")},
                      {"f": "1f", "g": "1g"},
                      {("1f", "1f"): "1f", ("1g", "1g"): "1g", ("1f", "alpha"): "alpha", ("alpha", "1g"): "alpha"},
                      name="x->y")
    homs = {("x", "x"): _terminal("1x"), ("y", "y"): _terminal("1y"), ("x", "y"): Hxy, ("y", "x"): _EMPTY}
    return sesqui_from_enrichment(["x", "y"], homs, {"x": "1x", "y": "1y"}, {}, name="walking 2-cell")


def sesqui_from_monoidal(M) -> SesquiCategory:
    """A strict monoidal category as a one-object 2-category; whiskering is tensoring with identities."""
    C = M.category
    om = {(f, g): M.tensor_obj[(f, g)] for f in C.objects for g in C.objects}
    parts = {(0, (g,)): Functor(C, C, {f: om[(f, g)] for f in C.objects},
                                {a: M.tensor_mor[(a, C.identities[g])] for a in C.morphisms}) for g in C.objects}
    parts.update({(1, (f,)): Functor(C, C, {g: om[(f, g)] for g in C.objects},
                                     {b: M.tensor_mor[(C.identities[f], b)] for b in C.morphisms})
                  for f in C.objects})
    comp = {("*", "*", "*"): CatMultimap((C, C), C, om, parts)}
    return SesquiCategory(("*",), {("*", "*"): C}, {"*": M.unit}, comp, M.name or "monoidal")


def free_whiskerable_pair(bound: int = 6) -> SesquiCategory:
    """Free sesqui-category on ``alpha : f => f'`` (x -> y) and ``beta : g => g'`` (y -> z).

    The x -> z hom is the funny tensor of the two walking arrows, so the two
    composites of the whiskered squares stay distinct.
    """
    A = free_on(arrow_graph("f", "f'", "alpha"), name="x->y")
    B = free_on(arrow_graph("g", "g'", "beta"), name="y->z")
    AB = funny_tensor([A, B], name="x->z")
    Hxy, Hyz, Hxz = to_fin_category(A, bound), to_fin_category(B, bound), to_fin_category(AB, bound)
    om = {(f, g): (f, g) for f in Hxy.objects for g in Hyz.objects}
    parts = {}
    for g in Hyz.objects:
        parts[(0, (g,))] = Functor(Hxy, Hxz, {f: (f, g) for f in Hxy.objects},
                                   {p: AB.canonical(lift_path(0, (None, g), p), bound) for p in Hxy.morphisms})
    for f in Hxy.objects:
        parts[(1, (f,))] = Functor(Hyz, Hxz, {g: (f, g) for g in Hyz.objects},
                                   {p: AB.canonical(lift_path(1, (f, None), p), bound) for p in Hyz.morphisms})
    homs = {("x", "y"): Hxy, ("y", "z"): Hyz, ("x", "z"): Hxz,
            ("x", "x"): _terminal("1x"), ("y", "y"): _terminal("1y"), ("z", "z"): _terminal("1z"),
            ("y", "x"): _EMPTY, ("z", "y"): _EMPTY, ("z", "x"): _EMPTY}
    comp = {("x", "y", "z"): CatMultimap((Hxy, Hyz), Hxz, om, parts)}
    return sesqui_from_enrichment(["x", "y", "z"], homs, {"x": "1x", "y": "1y", "z": "1z"}, comp,
                                  name="free whiskerable pair")


def sesqui_mutation(S: SesquiCategory, triple: tuple, part_key, morphism, value) -> SesquiCategory:
    """Copy of ``S`` with one whiskering value replaced."""
    T = S.copy()
    T.compose[triple].parts[part_key].mor_map[morphism] = value
    return T
