"""Comparison maps from free products to cartesian products.

``kappa`` sends a morphism of the tensor of categories to the tuple of its
coordinate composites.  ``kappa_tilde`` and ``kappa_bar`` are the two
descriptions of its restriction along the unit on free categories of graphs.
Cartesian naturality is checked square by square as fiber-product bijections.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import BoundExhausted
from .fincat import (FinCategory, FinGraph, Move, Path, PresentationMap, PresentedCategory,
                     discrete_presentation, free_category, funny_tensor, pushout_cat)
from .monads import CatAlgebra, CategoryMonad, TensorResult, is_terminal_category, tensor_categories
from .report import Report
from .vgraph import VGraph, tensor2_bijection, tensor2_reformulation

# ------------------------------------------------------------ well-pointed


class IdentityGraphMonad:
    """The identity monad on graphs; ``T0`` is the graph 0 itself."""

    name = "identity"

    def T0(self) -> FinGraph:
        return FinGraph(("*",), ())


def is_well_pointed(T, bound: int = 3) -> bool:
    """True iff ``T0`` is terminal: one object whose hom has exactly one element."""
    if isinstance(T, CategoryMonad):
        return is_terminal_category(T.T0(), bound)
    g = T.T0()
    return len(g.objects) == 1 and len(g.hom(g.objects[0], g.objects[0])) == 1


def unit_comparison_is_iso(T: CategoryMonad, bound: int = 3) -> bool:
    """``e : 1 -> T0`` is an isomorphism (both categories terminal)."""
    return is_terminal_category(T.T0(), bound)


# ------------------------------------------------------------------- kappa


@dataclass
class ComparisonMap:
    """Identity on objects; sends a tensor path to the tuple of coordinate composites."""

    tensor: PresentedCategory
    factors: tuple  # CatAlgebra per coordinate
    psi: Callable | None = None

    def obj(self, o):
        return o

    def __call__(self, p: Path) -> tuple:
        acc = [A.identity(p.src[i]) for i, A in enumerate(self.factors)]
        for g in p.word:
            j = g.index
            A = self.factors[j]
            c = A.then(acc[j], g.gen)
            if c is None:
                raise BoundExhausted(f"coordinate {j} composite exceeds the bound")
            acc[j] = c
        out = tuple(acc)
        return self.psi(out) if self.psi else out

    def check(self, bound: int | None = None) -> Report:
        """Relations map to equal tuples; identity on objects; compatible with projections."""
        rep = Report(subject="comparison map")
        P = self.tensor
        for lhs, rhs in P.relations:
            rep.check("well-defined", self(lhs) == self(rhs), (str(lhs), str(rhs)))
        k = bound or P.bound
        for a in P.objects:
            for b in P.objects:
                for r in P.hom(a, b, k):
                    img = self(r)
                    srcs = tuple(A.src(x) for A, x in zip(self.factors, img))
                    tgts = tuple(A.tgt(x) for A, x in zip(self.factors, img))
                    rep.check("identity-on-objects", srcs == a and tgts == b, (str(r),))
        return rep


def kappa(tensor: TensorResult) -> ComparisonMap:
    P = tensor.algebra
    return ComparisonMap(P, P.factors)


def kappa_on_classes(K: ComparisonMap, a, b, bound: int) -> dict:
    """Image of every bounded class of ``hom(a, b)``; checks all words of a class agree."""
    P = K.tensor
    cl = P.closure(bound)
    images = {}
    for p in P.words(a, b, bound):
        rep = cl.representative(p)
        img = K(p)
        if images.setdefault(rep, img) != img:
            raise AssertionError(f"comparison map not constant on the class of {rep}")
    return images


def kappa_coherence_check(cats: Sequence, bound: int) -> Report:
    """Unit, associativity (nested binary vs ternary) and symmetry coherence of kappa."""
    rep = Report(subject="comparison coherence")
    cats = list(cats)
    # nullary: the empty tensor is the terminal category, as is the empty product
    T0 = tensor_categories([], bound).algebra
    rep.check("unit", len(T0.objects) == 1 and len(T0.hom((), (), bound)) == 1, ())
    # symmetry
    A, B = cats[0], cats[1]
    tab = tensor_categories([A, B], bound)
    tba = tensor_categories([B, A], bound)
    kab, kba = kappa(tab), kappa(tba)
    for a in tab.algebra.objects:
        for p in tab.algebra.words_from(a, bound):
            swapped = Path(p.src[::-1], p.tgt[::-1],
                           tuple(Move(1 - g.index, g.coords[::-1]) for g in p.word))
            rep.check("symmetry", kba(swapped) == kab(p)[::-1], (str(p),))
    # associativity: ternary kappa equals kappa on the nested binary tensor
    if len(cats) >= 3:
        C = cats[2]
        t3 = tensor_categories([A, B, C], bound)
        k3 = kappa(t3)
        ab = CatAlgebra(tab.algebra, bound, name="AB")
        nested = tensor_categories([ab, C], bound)
        kn = kappa(nested)
        for a in t3.algebra.objects:
            for p in t3.algebra.words_from(a, bound):
                word = []
                for g in p.word:
                    if g.index < 2:
                        inner_ctx = g.coords[:2]
                        inner = Path(_move_src(tab, g), _move_tgt(tab, g), (Move(g.index, inner_ctx),))
                        m = tab.algebra.canonical(inner, bound)
                        word.append(Move(0, (m, g.coords[2])))
                    else:
                        word.append(Move(1, ((g.coords[0], g.coords[1]), g.coords[2])))
                src = ((p.src[0], p.src[1]), p.src[2])
                tgt = ((p.tgt[0], p.tgt[1]), p.tgt[2])
                q = Path(src, tgt, tuple(word))
                outer = kn(q)
                flat = kab(outer[0]) + (outer[1],)
                rep.check("associativity", flat == k3(p), (str(p),))
    return rep


def _move_src(t: TensorResult, g: Move):
    A = t.algebra.factors[g.index]
    return g.context(A.src(g.gen))[:2]


def _move_tgt(t: TensorResult, g: Move):
    A = t.algebra.factors[g.index]
    return g.context(A.tgt(g.gen))[:2]


# ------------------------------------------------------ kappa tilde / bar


def _as_vgraph(X: FinGraph) -> VGraph:
    return VGraph.from_edges(X.objects, X.edges)


def kappa_tilde(graphs: Sequence[FinGraph], bound: int = 2) -> Callable:
    """``kappa . eta``: an edge ``Move(j, coords)`` of the graph tensor to a tuple of paths.

    Computed through the coequalizer tensor of the free categories.
    """
    frees = [free_category(X) for X in graphs]
    t = tensor_categories([CatAlgebra(F, 1) for F in frees], bound, gen_bound=1)
    K = kappa(t)

    def apply(edge: Move) -> tuple:
        X = graphs[edge.index]
        e = edge.gen
        r = Path(X.src(e), X.tgt(e), (e,))
        ctx = edge.coords[:edge.index] + edge.coords[edge.index + 1:]
        return K(t.universal(edge.index, ctx, r))

    return apply


def kappa_bar(graphs: Sequence[FinGraph]) -> Callable:
    """Summand-wise formula: ``T i`` on the fixed coordinates, ``eta`` on the moving one.

    Takes an element ``(j, tup)`` of the reformulated hom at ``(a, b)``.
    """

    def apply(a: tuple, b: tuple, element) -> tuple:
        j, tup = element
        out = []
        for i, X in enumerate(graphs):
            if i == j:
                out.append(Path(a[i], b[i], (tup[i],)))  # eta on the moving factor
            else:
                out.append(Path(a[i], a[i], ()))  # T i_X on the discrete factor
        return tuple(out)

    return apply


def compare_kappa_tilde_bar(graphs: Sequence[FinGraph]) -> Report:
    """Pointwise equality of the two descriptions on every hom of the graph tensor."""
    rep = Report(subject="kappa tilde vs kappa bar")
    kt, kb = kappa_tilde(graphs), kappa_bar(graphs)
    vgs = [_as_vgraph(X) for X in graphs]
    R = tensor2_reformulation(vgs)
    bij = tensor2_bijection(vgs)
    for (a, b), h in R.homs.items():
        for el in h:
            x = bij[(a, b)](el)
            j = el[0]
            edge = x[1] if a == b else x
            coords = a[:j] + (edge,) + a[j + 1:]
            lhs = kt(Move(j, coords))
            rhs = kb(a, b, el)
            rep.check("pointwise", lhs == rhs, (a, b, el))
            rep.check("identity-on-objects", tuple(p.src for p in lhs) == a and tuple(p.tgt for p in lhs) == b,
                      (a, b, el))
    return rep


def graph_tensor_edges(graphs: Sequence[FinGraph]) -> list:
    """Edges of the graph tensor as ``(Move, source, target)``."""
    out = []
    for j, X in enumerate(graphs):
        others = [Y.objects if i != j else (None,) for i, Y in enumerate(graphs)]
        for ctx in itertools.product(*others):
            for lab, s, t in X.edges:
                mv = Move(j, ctx[:j] + (lab,) + ctx[j + 1:])
                out.append((mv, mv.context(s), mv.context(t)))
    return out


# ----------------------------------------------------------- pullbacks


def is_pullback(P: Iterable, top: Callable, left: Callable, Q: Iterable, R: Iterable,
                right: Callable, bottom: Callable) -> tuple[bool, str]:
    """Square ``P -> Q``, ``P -> R``, ``Q -> S``, ``R -> S`` of finite sets.

    ``Q`` must contain every element whose image lies in ``bottom(R)``.
    Accepts iff the square commutes and ``P -> Q x_S R`` is a bijection.
    """
    P, Q, R = list(P), list(Q), list(R)
    for p in P:
        if right(top(p)) != bottom(left(p)):
            return False, "square does not commute"
    fiber = [(q, r) for q in Q for r in R if right(q) == bottom(r)]
    images = [(top(p), left(p)) for p in P]
    if len(set(images)) != len(images):
        return False, "comparison map is not injective"
    if set(images) != set(fiber):
        return False, "comparison map is not surjective"
    return True, ""


@dataclass
class NaturalitySquare:
    """``top: P -> Q``, ``left: P -> R``, ``right: Q -> S``, ``bottom: R -> S`` hom by hom."""

    name: str
    homs: list  # entries (label, P, top, left, Q, R, right, bottom)


def check_cartesian_naturality(squares: Sequence[NaturalitySquare]) -> Report:
    rep = Report(subject="cartesian naturality")
    rep.notes["tested_squares"] = [s.name for s in squares]
    for sq in squares:
        for label, P, top, left, Q, R, right, bottom in sq.homs:
            ok, why = is_pullback(P, top, left, Q, R, right, bottom)
            rep.check("pullback", ok, (sq.name, label), why)
    return rep


def _paths_upto(X: FinGraph, a, b, n: int) -> list:
    return [p for p in free_category(X).words(a, b, n)]


def kappa_tilde_square(xs: Sequence[FinGraph], ys: Sequence[FinGraph], hs: Sequence[dict]) -> NaturalitySquare:
    """Naturality square of kappa tilde along graph morphisms ``h_i : X_i -> Y_i``.

    ``hs[i]`` maps ``"objects"`` and ``"edges"`` dictionaries.  The corner
    ``prod T X_i (a, b)`` is cut to paths no longer than any image in the
    bottom row, which contains the whole fiber since T h preserves length.
    """
    kx, ky = kappa_tilde(xs), kappa_tilde(ys)
    ex = graph_tensor_edges(xs)
    ey = graph_tensor_edges(ys)
    n = len(xs)
    homs = []
    objs_x = list(itertools.product(*[X.objects for X in xs]))
    hobj = lambda a: tuple(hs[i]["objects"][a[i]] for i in range(n))

    def h_edge(m: Move) -> Move:
        j = m.index
        c = tuple(hs[i]["objects"][m.coords[i]] if i != j else hs[j]["edges"][m.coords[j]] for i in range(n))
        return Move(j, c)

    def T_h(paths):
        return tuple(Path(hs[i]["objects"][p.src], hs[i]["objects"][p.tgt],
                          tuple(hs[i]["edges"][e] for e in p.word)) for i, p in enumerate(paths))

    for a in objs_x:
        for b in objs_x:
            P = [m for m, s, t in ex if s == a and t == b]
            ha, hb = hobj(a), hobj(b)
            R = [m for m, s, t in ey if s == ha and t == hb]
            Rimg = [ky(m) for m in R]
            maxlen = [max([len(t[i]) for t in Rimg], default=0) for i in range(n)]
            Q = list(itertools.product(*[_paths_upto(xs[i], a[i], b[i], maxlen[i]) for i in range(n)]))
            homs.append(((a, b), P, kx, h_edge, Q, R, T_h, ky))
    return NaturalitySquare("kappa-tilde", homs)


def inclusion_square(X: FinGraph, Y: FinGraph, h: dict) -> NaturalitySquare:
    """Naturality square of ``i : X0 . 0 -> X`` along ``h``; the discrete homs are empty."""
    homs = []
    for a in X.objects:
        for b in X.objects:
            P, R = [], []
            Q = X.hom(a, b)
            homs.append(((a, b), P, lambda p: p, lambda p: p, Q, R,
                         lambda e: h["edges"][e], lambda r: r))
    return NaturalitySquare("inclusion", homs)


def collapse_square(X: FinGraph, Y: FinGraph, h: dict) -> NaturalitySquare:
    """Naturality square of the collapse ``X -> 1`` (one object, one loop) along ``h``."""
    homs = []
    star = lambda e: "loop"
    for a in X.objects:
        for b in X.objects:
            P = X.hom(a, b)
            R = Y.hom(h["objects"][a], h["objects"][b])
            homs.append(((a, b), P, star, lambda e: h["edges"][e], ["loop"], R, lambda l: l, star))
    return NaturalitySquare("collapse", homs)


def graph_morphisms(X: FinGraph, Y: FinGraph) -> list[dict]:
    out = []
    for imgs in itertools.product(Y.objects, repeat=len(X.objects)):
        om = dict(zip(X.objects, imgs))
        choices = [Y.hom(om[s], om[t]) for _, s, t in X.edges]
        for es in itertools.product(*choices):
            out.append({"objects": om, "edges": {lab: e for (lab, _, _), e in zip(X.edges, es)}})
    return out


def kappa_recovery_check(graphs: Sequence[FinGraph], bound: int) -> Report:
    """``kappa = (prod mu) . k . T(kappa tilde)`` on all paths of the graph tensor up to bound."""
    rep = Report(subject="kappa recovery")
    frees = [free_category(X) for X in graphs]
    t = tensor_categories([CatAlgebra(F, bound) for F in frees], bound, gen_bound=bound)
    K = kappa(t)
    kt = kappa_tilde(graphs)
    edges = graph_tensor_edges(graphs)
    G = FinGraph(list(itertools.product(*[X.objects for X in graphs])), edges)
    T = free_category(G)
    for a in G.objects:
        for p in T.words_from(a, bound):
            lifted = [kt(m) for m in p.word]  # T(kappa tilde): a path of tuples
            coords = list(zip(*lifted)) if lifted else [() for _ in graphs]  # product obstruction
            flat = []
            for i, col in enumerate(coords):
                q = Path(a[i], a[i], ())
                for step in col:
                    q = q.then(step)  # mu: flatten a path of paths
                flat.append(q)
            via_tensor = Path(p.src, p.tgt, tuple(
                t.universal(m.index, m.coords[:m.index] + m.coords[m.index + 1:],
                            Path(graphs[m.index].src(m.gen), graphs[m.index].tgt(m.gen), (m.gen,))).word[0]
                for m in p.word))
            rep.check("recovery", tuple(flat) == K(via_tensor), (str(p),))
    return rep


# ------------------------------------------------------ width-n pushout


def _presentation(c) -> PresentedCategory:
    if isinstance(c, FinCategory):
        return c.presentation
    if isinstance(c, CatAlgebra):
        return _presentation(c.cat)
    return c


def pushout_formula_tensor(cats: Sequence, bound: int) -> PresentedCategory:
    """Width-n pushout of the slot products under the product of object sets."""
    press = [_presentation(c) for c in cats]
    n = len(press)
    discs = [discrete_presentation(p.objects) for p in press]
    D = funny_tensor(discs)
    slots = []
    for j in range(n):
        slots.append(funny_tensor([press[i] if i == j else discs[i] for i in range(n)]))
    acc = slots[0]
    acc_map = {o: o for o in D.objects}
    for j in range(1, n):
        left = PresentationMap(D, acc, acc_map, {})
        right = PresentationMap(D, slots[j], {o: o for o in D.objects}, {})
        po = pushout_cat(left, right, bound)
        acc_map = {o: po.inl.obj_map[acc_map[o]] for o in D.objects}
        acc = po.category
    if n == 1:
        return PresentedCategory(acc.graph, acc.relations, bound=bound, name="pushout")
    return acc


def move_weight(g: Move) -> int:
    """Length of the factor morphism a tensor generator carries (1 for table labels)."""
    return len(g.gen) if isinstance(g.gen, Path) else 1


def weighted_classes(t: TensorResult, a, b, bound: int) -> dict:
    """Bounded classes of ``hom(a, b)`` that contain a word of total weight ≤ bound.

    Splitting a generator never raises the weight, so every class of weight
    ≤ bound is connected inside the closure at that bound: these counts are exact.
    """
    Q = t.algebra
    cl = Q.closure(bound)
    best = {}
    for p in Q.words(a, b, bound):
        w = sum(move_weight(g) for g in p.word)
        if w <= bound:
            r = cl.representative(p)
            best[r] = min(best.get(r, w), w)
    return best


def compare_with_tensor(P: PresentedCategory, t: TensorResult, bound: int) -> Report:
    """Object-identity comparison of bounded hom counts, tensor side measured by weight."""
    rep = Report(subject="pushout vs tensor")
    Q = t.algebra
    for a in Q.objects:
        for b in Q.objects:
            hp = P.hom(a, b, bound)
            if hp.exhausted:
                rep.notes.setdefault("exhausted", []).append((a, b))
            hq = weighted_classes(t, a, b, bound)
            rep.check("hom-count", len(hp) == len(hq), (a, b), f"{len(hp)} vs {len(hq)}")
    return rep


def free_tensor_comparison(graphs: Sequence[FinGraph], bound: int) -> Report:
    """The tensor of free categories against the free category on the graph tensor.

    Paths of length ≤ bound on the graph tensor must map bijectively onto the
    tensor classes of weight ≤ bound, hom by hom.
    """
    rep = Report(subject="tensor of free categories")
    t = tensor_categories([CatAlgebra(free_category(X), bound) for X in graphs], bound, gen_bound=bound)
    G = FinGraph(list(itertools.product(*[X.objects for X in graphs])), graph_tensor_edges(graphs))
    TG = free_category(G)
    cl = t.algebra.closure(bound)
    for a in G.objects:
        for b in G.objects:
            target = weighted_classes(t, a, b, bound)
            images = []
            for p in TG.words(a, b, bound):
                word = tuple(Move(m.index, m.coords[:m.index] +
                                  (Path(graphs[m.index].src(m.gen), graphs[m.index].tgt(m.gen), (m.gen,)),) +
                                  m.coords[m.index + 1:]) for m in p.word)
                images.append(cl.representative(Path(p.src, p.tgt, word)))
            rep.check("injective", len(set(images)) == len(images), (a, b))
            rep.check("surjective", set(images) == set(target), (a, b),
                      f"{len(set(images))} images vs {len(target)} classes")
    return rep


# ----------------------------------------------- operad/multitensor link


def operad_multitensor_composite(cats: Sequence, bound: int, psi: Callable | None = None) -> dict:
    """Components ``kappa . psi`` on every bounded class of the tensor.

    With ``psi`` the identity (the only shipped instance) the result is the
    comparison map itself, tabulated.
    """
    t = tensor_categories(list(cats), bound)
    K = ComparisonMap(t.algebra, t.algebra.factors, psi)
    table = {}
    for a in t.algebra.objects:
        for b in t.algebra.objects:
            for r in t.algebra.hom(a, b, bound):
                table[r] = K(r)
    return table
