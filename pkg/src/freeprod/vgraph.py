"""Graphs enriched over a finite base, their homs, free products and multimaps.

A base supplies finite products, coproducts, terminal/initial objects and
hom-set enumeration.  Two bases ship: :data:`FINSET` (objects are tuples of
elements) and :data:`FINCAT` (objects are :class:`FinCategory`).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import SizeLimitExceeded
from .fincat import FinCategory, Functor, functors_between, product_category
from .report import Report

HOM_OBJECT_LIMIT = 10_000


# ------------------------------------------------------------------ bases


@dataclass(frozen=True)
class SetMap:
    """A function between finite sets; ``images`` is aligned with ``dom``."""

    dom: tuple
    cod: tuple
    images: tuple

    @cached_property
    def _table(self):
        return dict(zip(self.dom, self.images))

    def __call__(self, x):
        return self._table[x]

    def __repr__(self):
        return "SetMap{" + ", ".join(f"{x!r}->{y!r}" for x, y in zip(self.dom, self.images)) + "}"


class Base:
    """Operations on the enriching category used by the graph constructions."""

    name = "base"

    def terminal(self): raise NotImplementedError
    def initial(self): raise NotImplementedError
    def product(self, xs): raise NotImplementedError
    def coproduct(self, xs): raise NotImplementedError
    def pair(self, maps, prod): raise NotImplementedError
    def copair(self, maps, coprod): raise NotImplementedError
    def homset(self, x, y) -> list: raise NotImplementedError
    def then(self, f, g): raise NotImplementedError
    def identity(self, x): raise NotImplementedError
    def dom(self, f): raise NotImplementedError
    def cod(self, f): raise NotImplementedError

    def count_homs(self, x, y) -> int:
        return len(self.homset(x, y))

    def is_initial(self, x) -> bool:
        return self.count_homs(x, self.initial()) > 0

    def is_iso(self, f) -> bool:
        x, y = self.dom(f), self.cod(f)
        return any(self.then(f, g) == self.identity(x) and self.then(g, f) == self.identity(y)
                   for g in self.homset(y, x))


class FinSetBase(Base):
    name = "FinSet"

    def terminal(self):
        return ((),)

    def initial(self):
        return ()

    def product(self, xs):
        xs = list(xs)
        prod = tuple(itertools.product(*xs))
        return prod, [SetMap(prod, x, tuple(t[i] for t in prod)) for i, x in enumerate(xs)]

    def coproduct(self, xs):
        xs = list(xs)
        co = tuple((i, v) for i, x in enumerate(xs) for v in x)
        return co, [SetMap(x, co, tuple((i, v) for v in x)) for i, x in enumerate(xs)]

    def pair(self, maps, prod):
        maps = list(maps)
        dom = maps[0].dom if maps else ((),)
        return SetMap(dom, prod, tuple(tuple(m(x) for m in maps) for x in dom))

    def copair(self, maps, coprod):
        maps = list(maps)
        cod = maps[0].cod
        return SetMap(coprod, cod, tuple(maps[i](v) for i, v in coprod))

    def homset(self, x, y):
        return [SetMap(tuple(x), tuple(y), imgs) for imgs in itertools.product(y, repeat=len(x))]

    def count_homs(self, x, y):
        return len(y) ** len(x)

    def then(self, f, g):
        return SetMap(f.dom, g.cod, tuple(g(f(v)) for v in f.dom))

    def identity(self, x):
        return SetMap(tuple(x), tuple(x), tuple(x))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def is_initial(self, x):
        return len(x) == 0

    def is_iso(self, f):
        return len(set(f.images)) == len(f.images) == len(f.cod)

    def size(self, x) -> int:
        return len(x)


class FinCatBase(Base):
    name = "FinCat"

    def terminal(self):
        return FinCategory.terminal()

    def initial(self):
        return FinCategory([], {}, {}, {}, name="0")

    def product(self, xs):
        return product_category(list(xs))

    def coproduct(self, xs):
        xs = list(xs)
        objects = [(i, o) for i, c in enumerate(xs) for o in c.objects]
        mors = {(i, f): ((i, s), (i, t)) for i, c in enumerate(xs) for f, (s, t) in c.morphisms.items()}
        ids = {(i, o): (i, c.identities[o]) for i, c in enumerate(xs) for o in c.objects}
        comp = {((i, f), (i, g)): (i, h) for i, c in enumerate(xs) for (f, g), h in c.composition.items()}
        co = FinCategory(objects, mors, ids, comp)
        inj = [Functor(c, co, {o: (i, o) for o in c.objects}, {f: (i, f) for f in c.morphisms})
               for i, c in enumerate(xs)]
        return co, inj

    def pair(self, maps, prod):
        maps = list(maps)
        dom = maps[0].dom if maps else FinCategory.terminal()
        return Functor(dom, prod, {o: tuple(m.obj_map[o] for m in maps) for o in dom.objects},
                       {f: tuple(m.mor_map[f] for m in maps) for f in dom.morphisms})

    def copair(self, maps, coprod):
        maps = list(maps)
        cod = maps[0].cod
        return Functor(coprod, cod, {(i, o): maps[i].obj_map[o] for i, o in coprod.objects},
                       {(i, f): maps[i].mor_map[f] for i, f in coprod.morphisms})

    def homset(self, x, y):
        return list(functors_between(x, y))

    def then(self, f, g):
        return f.then(g)

    def identity(self, x):
        return Functor.identity(x)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def is_initial(self, x):
        return len(x.objects) == 0

    def size(self, x) -> int:
        return len(x.morphisms)


FINSET = FinSetBase()
FINCAT = FinCatBase()


# ----------------------------------------------------------------- graphs


class VGraph:
    """Objects plus a base object ``hom(a, b)`` for every ordered pair."""

    def __init__(self, objects, hom: Mapping, base: Base = FINSET, name: str | None = None):
        self.objects = tuple(objects)
        self.base = base
        self.homs = {(a, b): hom[(a, b)] for a in self.objects for b in self.objects}
        self.name = name

    def hom(self, a, b):
        return self.homs[(a, b)]

    def __eq__(self, other):
        return (isinstance(other, VGraph) and self.objects == other.objects
                and self.homs == other.homs)

    def __hash__(self):
        return hash((self.objects, tuple(self.homs.items())))

    def __repr__(self):
        name = f" {self.name}" if self.name else ""
        return f"<VGraph{name} over {self.base.name}: {len(self.objects)} objects>"

    @classmethod
    def from_edges(cls, objects, edges, name=None) -> "VGraph":
        """FinSet graph from ``(label, source, target)`` triples."""
        objects = tuple(objects)
        hom = {(a, b): [] for a in objects for b in objects}
        for lab, s, t in edges:
            hom[(s, t)].append(lab)
        return cls(objects, {k: tuple(v) for k, v in hom.items()}, FINSET, name)

    def edges(self) -> list:
        return [(e, a, b) for (a, b), h in self.homs.items() for e in h]

    def edge_count(self) -> int:
        return sum(self.base.size(h) for h in self.homs.values())


def unit_graph(base: Base = FINSET) -> VGraph:
    """The graph 0: one object whose only hom is initial."""
    return VGraph(["*"], {("*", "*"): base.initial()}, base, name="0")


class GraphMorphism:
    """Object map plus a base morphism for every hom."""

    def __init__(self, dom: VGraph, cod: VGraph, obj_map: Mapping, hom_maps: Mapping):
        self.dom = dom
        self.cod = cod
        self.obj_map = dict(obj_map)
        self.hom_maps = dict(hom_maps)

    def __call__(self, a):
        return self.obj_map[a]

    @cached_property
    def _key(self):
        return (tuple(self.obj_map[a] for a in self.dom.objects),
                tuple(self.hom_maps[k] for k in self.dom.homs))

    def __eq__(self, other):
        return isinstance(other, GraphMorphism) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GraphMorphism({self.obj_map!r})"

    def then(self, other: "GraphMorphism") -> "GraphMorphism":
        base = self.dom.base
        return GraphMorphism(self.dom, other.cod, {a: other(self(a)) for a in self.dom.objects},
                             {(a, b): base.then(self.hom_maps[(a, b)],
                                                other.hom_maps[(self(a), self(b))])
                              for (a, b) in self.dom.homs})

    def check(self) -> Report:
        rep = Report(subject="graph morphism")
        base = self.dom.base
        for (a, b), h in self.dom.homs.items():
            m = self.hom_maps.get((a, b))
            ok = m is not None and base.dom(m) == h and base.cod(m) == self.cod.hom(self(a), self(b))
            rep.check("typing", ok, (a, b))
        return rep

    @classmethod
    def identity(cls, x: VGraph) -> "GraphMorphism":
        return cls(x, x, {a: a for a in x.objects},
                   {k: x.base.identity(h) for k, h in x.homs.items()})


def enumerate_morphisms(x: VGraph, y: VGraph, limit: int | None = None) -> Iterator[GraphMorphism]:
    base = x.base
    keys = list(x.homs)
    n = 0
    for imgs in itertools.product(y.objects, repeat=len(x.objects)):
        om = dict(zip(x.objects, imgs))
        choices = [base.homset(x.homs[(a, b)], y.hom(om[a], om[b])) for a, b in keys]
        for hm in itertools.product(*choices):
            n += 1
            if limit is not None and n > limit:
                raise SizeLimitExceeded(f"more than {limit} graph morphisms")
            yield GraphMorphism(x, y, om, dict(zip(keys, hm)))


def _weights_over_object_maps(n_dom: int, n_cod: int, factors) -> int:
    """Sum over all maps ``range(n_dom) -> range(n_cod)`` of a product of table lookups.

    ``factors`` is a list of ``(p, q, table, exponent)``: each contributes
    ``table[f(p), f(q)] ** exponent``; ``p`` or ``q`` may be None for unary
    weights indexed by the other position.
    """
    if n_dom == 0:
        return 1
    if n_cod == 0:
        return 0
    grid = np.indices((n_cod,) * n_dom).reshape(n_dom, -1)
    logmax = 0.0
    for p, q, table, e in factors:
        m = int(np.max(table)) if np.size(table) else 0
        if m > 1:
            logmax += e * math.log2(m)
    dtype = np.int64 if logmax < 62 else object
    w = np.ones(grid.shape[1], dtype=dtype)
    for p, q, table, e in factors:
        if e == 0:
            continue
        t = np.asarray(table, dtype=dtype)
        if q is None:
            vals = t[grid[p]]
        elif p is None:
            vals = t[grid[q]]
        else:
            vals = t[grid[p], grid[q]]
        w = w * vals ** e if dtype is object else w * np.power(vals, e)
    return int(w.sum())


def _size_table(y: VGraph) -> np.ndarray:
    n = len(y.objects)
    t = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(y.objects):
        for j, b in enumerate(y.objects):
            t[i, j] = y.base.size(y.hom(a, b))
    return t


def count_morphisms(x: VGraph, y: VGraph) -> int:
    """Number of FinSet-graph morphisms, summed over object maps."""
    idx = {a: i for i, a in enumerate(x.objects)}
    t = _size_table(y)
    factors = [(idx[a], idx[b], t, len(h)) for (a, b), h in x.homs.items() if len(h)]
    return _weights_over_object_maps(len(x.objects), len(y.objects), factors)


# ---------------------------------------------------------- internal hom


class HomGraph(VGraph):
    """``[A, B]``: objects are morphisms A -> B, homs are products over A's objects."""

    def __init__(self, A: VGraph, B: VGraph, limit: int = HOM_OBJECT_LIMIT):
        base = A.base
        objs = list(enumerate_morphisms(A, B, limit=limit))
        homs, proj = {}, {}
        for f in objs:
            for g in objs:
                prod, ps = base.product([B.hom(f(a), g(a)) for a in A.objects])
                homs[(f, g)] = prod
                proj[(f, g)] = dict(zip(A.objects, ps))
        super().__init__(objs, homs, base, name=f"[{A.name or 'A'},{B.name or 'B'}]")
        self.A, self.B = A, B
        self.projections = proj


def graph_hom(A: VGraph, B: VGraph, limit: int = HOM_OBJECT_LIMIT) -> HomGraph:
    return HomGraph(A, B, limit)


def count_morphisms_into_hom(X: VGraph, A: VGraph, B: VGraph) -> int:
    """``|Mor(X, [A, B])|`` without materializing ``[A, B]``.

    Homs of ``[A, B]`` depend only on object maps, so objects are grouped by
    their object map and weighted by how many morphisms share it.
    """
    ta = _size_table(B)
    na = len(A.objects)
    omaps = list(itertools.product(range(len(B.objects)), repeat=na))
    aidx = {a: i for i, a in enumerate(A.objects)}
    mult = np.array([math.prod(int(ta[om[aidx[a]], om[aidx[b]]]) ** len(h)
                               for (a, b), h in A.homs.items()) for om in omaps], dtype=object)
    hom = np.array([[math.prod(int(ta[f[i], g[i]]) for i in range(na)) for g in omaps]
                    for f in omaps], dtype=object)
    xidx = {a: i for i, a in enumerate(X.objects)}
    factors = [(i, None, mult, 1) for i in range(len(X.objects))]
    factors += [(xidx[a], xidx[b], hom, len(h)) for (a, b), h in X.homs.items() if len(h)]
    return _weights_over_object_maps(len(X.objects), len(omaps), factors)


# -------------------------------------------------------------- multimaps


def insert(z: tuple, i: int, a) -> tuple:
    return z[:i] + (a,) + z[i:]


def contexts(doms: Sequence[VGraph], i: int) -> list:
    return list(itertools.product(*[d.objects for k, d in enumerate(doms) if k != i]))


class VGraphMultimap:
    """Multimap ``(A_1..A_n) -> B``: object multifunction plus linear hom maps.

    ``hom_maps[(i, z, a, b)]`` is the base morphism ``A_i(a, b) -> B(f(z|a), f(z|b))``
    where ``z`` lists the fixed objects of the other inputs.
    """

    def __init__(self, doms: Sequence[VGraph], cod: VGraph, object_map: Mapping, hom_maps: Mapping):
        self.doms = tuple(doms)
        self.cod = cod
        self.object_map = dict(object_map)
        self.hom_maps = dict(hom_maps)

    def __call__(self, *objs):
        return self.object_map[tuple(objs)]

    def keys(self) -> list:
        out = []
        for i, d in enumerate(self.doms):
            for z in contexts(self.doms, i):
                for (a, b) in d.homs:
                    out.append((i, z, a, b))
        return out

    @cached_property
    def _key(self):
        return (tuple(sorted(self.object_map.items(), key=repr)),
                tuple(self.hom_maps[k] for k in self.keys()))

    def __eq__(self, other):
        return isinstance(other, VGraphMultimap) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def part(self, i, z, a, b):
        return self.hom_maps[(i, z, a, b)]

    def check(self) -> Report:
        rep = Report(subject="multimap")
        base = self.cod.base
        for objs in itertools.product(*[d.objects for d in self.doms]):
            rep.check("object-map", self.object_map.get(objs) in self.cod.objects, objs)
        if not rep.ok:
            return rep
        for i, z, a, b in self.keys():
            m = self.hom_maps.get((i, z, a, b))
            want = (self.doms[i].hom(a, b),
                    self.cod.hom(self.object_map[insert(z, i, a)], self.object_map[insert(z, i, b)]))
            rep.check("typing", m is not None and (base.dom(m), base.cod(m)) == want, (i, z, a, b))
        return rep

    def then(self, g: GraphMorphism) -> "VGraphMultimap":
        """Post-compose with a graph morphism."""
        base = self.cod.base
        om = {k: g(v) for k, v in self.object_map.items()}
        hm = {}
        for (i, z, a, b), m in self.hom_maps.items():
            src, tgt = self.object_map[insert(z, i, a)], self.object_map[insert(z, i, b)]
            hm[(i, z, a, b)] = base.then(m, g.hom_maps[(src, tgt)])
        return VGraphMultimap(self.doms, g.cod, om, hm)

    @classmethod
    def from_morphism(cls, f: GraphMorphism) -> "VGraphMultimap":
        return cls([f.dom], f.cod, {(a,): f(a) for a in f.dom.objects},
                   {(0, (), a, b): m for (a, b), m in f.hom_maps.items()})


def compose_multimaps(f: VGraphMultimap, gs: Sequence[VGraphMultimap]) -> VGraphMultimap:
    """Substitute ``gs[k]`` into the k-th input of ``f``.

    The part at an input of ``gs[k]`` is that input's part in ``gs[k]``
    followed by ``f``'s k-th part at the objects the other ``gs`` produce.
    """
    base = f.cod.base
    gs = list(gs)
    doms = [d for g in gs for d in g.doms]
    offsets = list(itertools.accumulate([0] + [len(g.doms) for g in gs]))
    om = {}
    for objs in itertools.product(*[d.objects for d in doms]):
        chunks = [objs[offsets[k]:offsets[k + 1]] for k in range(len(gs))]
        om[objs] = f.object_map[tuple(g.object_map[c] for g, c in zip(gs, chunks))]
    hm = {}
    for k, g in enumerate(gs):
        for l, d in enumerate(g.doms):
            pos = offsets[k] + l
            for w in contexts(doms, pos):
                full = insert(w, pos, None)
                chunks = [full[offsets[m]:offsets[m + 1]] for m in range(len(gs))]
                outer = tuple(gs[m].object_map[chunks[m]] for m in range(len(gs)) if m != k)
                inner_z = chunks[k][:l] + chunks[k][l + 1:]
                for (a, b) in d.homs:
                    first = g.hom_maps[(l, inner_z, a, b)]
                    ga, gb = g.object_map[insert(inner_z, l, a)], g.object_map[insert(inner_z, l, b)]
                    hm[(pos, w, a, b)] = base.then(first, f.hom_maps[(k, outer, ga, gb)])
    return VGraphMultimap(doms, f.cod, om, hm)


def identity_multimap(x: VGraph) -> VGraphMultimap:
    return VGraphMultimap.from_morphism(GraphMorphism.identity(x))


def enumerate_multimaps(doms: Sequence[VGraph], cod: VGraph, limit: int | None = None) -> Iterator[VGraphMultimap]:
    doms = list(doms)
    base = cod.base
    tuples = list(itertools.product(*[d.objects for d in doms]))
    keys = [(i, z, a, b) for i, d in enumerate(doms) for z in contexts(doms, i) for (a, b) in d.homs]
    n = 0
    for imgs in itertools.product(cod.objects, repeat=len(tuples)):
        om = dict(zip(tuples, imgs))
        choices = [base.homset(doms[i].hom(a, b), cod.hom(om[insert(z, i, a)], om[insert(z, i, b)]))
                   for i, z, a, b in keys]
        for hm in itertools.product(*choices):
            n += 1
            if limit is not None and n > limit:
                raise SizeLimitExceeded(f"more than {limit} multimaps")
            yield VGraphMultimap(doms, cod, om, dict(zip(keys, hm)))


def count_multimaps(doms: Sequence[VGraph], cod: VGraph) -> int:
    """Number of FinSet multimaps, from the per-variable hom families."""
    doms = list(doms)
    tuples = list(itertools.product(*[d.objects for d in doms]))
    pos = {t: k for k, t in enumerate(tuples)}
    t = _size_table(cod)
    factors = []
    for i, d in enumerate(doms):
        for z in contexts(doms, i):
            for (a, b), h in d.homs.items():
                if len(h):
                    factors.append((pos[insert(z, i, a)], pos[insert(z, i, b)], t, len(h)))
    return _weights_over_object_maps(len(tuples), len(cod.objects), factors)


# ------------------------------------------------------------ rev, closedness


def right_evaluation(H: HomGraph) -> VGraphMultimap:
    """``rev : ([A, B], A) -> B`` with ``(f, a) -> f(a)``."""
    A, B = H.A, H.B
    om = {(f, a): f(a) for f in H.objects for a in A.objects}
    hm = {}
    for a in A.objects:
        for (f, g) in H.homs:
            hm[(0, (a,), f, g)] = H.projections[(f, g)][a]
    for f in H.objects:
        for (a1, a2) in A.homs:
            hm[(1, (f,), a1, a2)] = f.hom_maps[(a1, a2)]
    return VGraphMultimap([H, A], B, om, hm)


def closedness_factor(F: VGraphMultimap, H: HomGraph) -> VGraphMultimap:
    """The unique ``G : (C_1..C_n) -> [A, B]`` with ``F = rev(G, 1_A)``; A is F's last input."""
    *cs, A = F.doms
    base = F.cod.base
    if A is not H.A and A != H.A:
        raise ValueError("last input of F must be the exponent of H")
    n = len(cs)
    by_key = {f._key: f for f in H.objects}
    om = {}
    for c in itertools.product(*[x.objects for x in cs]):
        cand = GraphMorphism(A, F.cod, {a: F.object_map[c + (a,)] for a in A.objects},
                             {(a1, a2): F.hom_maps[(n, c, a1, a2)] for (a1, a2) in A.homs})
        om[c] = by_key[cand._key]
    hm = {}
    for i, ci in enumerate(cs):
        for z in contexts(cs, i):
            for (x, y) in ci.homs:
                src, tgt = om[insert(z, i, x)], om[insert(z, i, y)]
                maps = [F.hom_maps[(i, z + (a,), x, y)] for a in A.objects]
                hm[(i, z, x, y)] = base.pair(maps, H.hom(src, tgt)) if maps else \
                    _to_terminal(base, ci.hom(x, y), H.hom(src, tgt))
    return VGraphMultimap(cs, H, om, hm)


def _to_terminal(base, x, t):
    return base.homset(x, t)[0]


def rev_after(G: VGraphMultimap, H: HomGraph) -> VGraphMultimap:
    """``rev(G, 1_A)``."""
    return compose_multimaps(right_evaluation(H), [G, identity_multimap(H.A)])


# -------------------------------------------------------- free products


def free_product_graphs(As: Sequence[VGraph]) -> tuple[VGraph, VGraphMultimap]:
    """n-ary free product with its universal multimap α.

    Homs: the coproduct of all factor homs on the diagonal, the single moving
    factor's hom when exactly one coordinate changes, initial otherwise.
    """
    As = list(As)
    base = As[0].base if As else FINSET
    objects = list(itertools.product(*[A.objects for A in As]))
    homs, injections = {}, {}
    for a in objects:
        for b in objects:
            moving = [i for i in range(len(As)) if a[i] != b[i]]
            if not moving:
                co, inj = base.coproduct([A.hom(x, x) for A, x in zip(As, a)])
                homs[(a, b)] = co
                injections[a] = inj
            elif len(moving) == 1:
                j = moving[0]
                homs[(a, b)] = As[j].hom(a[j], b[j])
            else:
                homs[(a, b)] = base.initial()
    T = VGraph(objects, homs, base, name="□".join(A.name or "X" for A in As) or "0")
    hm = {}
    for i, A in enumerate(As):
        for z in contexts(As, i):
            for (x, y), h in A.homs.items():
                if x == y:
                    hm[(i, z, x, y)] = injections[insert(z, i, x)][i]
                else:
                    hm[(i, z, x, y)] = base.identity(h)
    alpha = VGraphMultimap(As, T, {o: o for o in objects}, hm)
    return T, alpha


def factor_through_alpha(F: VGraphMultimap, T: VGraph) -> GraphMorphism:
    """The graph morphism ``g`` with ``g α = F``."""
    base = T.base
    As = F.doms
    hm = {}
    for (a, b), h in T.homs.items():
        moving = [i for i in range(len(As)) if a[i] != b[i]]
        if not moving:
            maps = [F.hom_maps[(i, a[:i] + a[i + 1:], a[i], a[i])] for i in range(len(As))]
            hm[(a, b)] = base.copair(maps, h) if maps else base.homset(h, F.cod.hom(F.object_map[a], F.object_map[b]))[0]
        elif len(moving) == 1:
            j = moving[0]
            hm[(a, b)] = F.hom_maps[(j, a[:j] + a[j + 1:], a[j], b[j])]
        else:
            hm[(a, b)] = base.homset(h, F.cod.hom(F.object_map[a], F.object_map[b]))[0]
    return GraphMorphism(T, F.cod, dict(F.object_map), hm)


def discrete_graph(objects, base: Base = FINSET) -> VGraph:
    """``dZ``: terminal homs on the diagonal, initial elsewhere."""
    objects = tuple(objects)
    return VGraph(objects, {(a, b): base.terminal() if a == b else base.initial()
                            for a in objects for b in objects}, base)


def tensor2_reformulation(As: Sequence[VGraph]) -> VGraph:
    """Homs as a coproduct over j of products of discrete homs with the j-th hom."""
    As = list(As)
    base = As[0].base if As else FINSET
    ds = [discrete_graph(A.objects, base) for A in As]
    objects = list(itertools.product(*[A.objects for A in As]))
    homs = {}
    for a in objects:
        for b in objects:
            summands = []
            for j in range(len(As)):
                parts = [(As[i] if i == j else ds[i]).hom(a[i], b[i]) for i in range(len(As))]
                summands.append(base.product(parts)[0])
            homs[(a, b)] = base.coproduct(summands)[0]
    return VGraph(objects, homs, base)


def tensor2_bijection(As: Sequence[VGraph]) -> dict:
    """Per hom, the explicit map from the reformulated hom to the free-product hom."""
    T, _ = free_product_graphs(As)
    R = tensor2_reformulation(As)
    out = {}
    for (a, b), h in R.homs.items():
        moving = [i for i in range(len(As)) if a[i] != b[i]]
        table = {}
        for j, tup in h:
            x = tup[j]
            table[(j, tup)] = (j, x) if not moving else x
        out[(a, b)] = SetMap(h, T.hom(a, b), tuple(table[e] for e in h))
    return out


def graph_isomorphic(X: VGraph, Y: VGraph, max_objects: int = 6) -> dict | None:
    """Object bijection with equal FinSet hom sizes, or None."""
    if len(X.objects) != len(Y.objects):
        return None
    if len(X.objects) > max_objects:
        raise SizeLimitExceeded(f"isomorphism search is limited to {max_objects} objects")
    for perm in itertools.permutations(Y.objects):
        om = dict(zip(X.objects, perm))
        if all(X.base.size(h) == Y.base.size(Y.hom(om[a], om[b])) for (a, b), h in X.homs.items()):
            return om
    return None


# --------------------------------------------------- cocones over categories


class IncompatibleCocone(ValueError):
    def __init__(self, j, k):
        self.pair = (j, k)
        super().__init__(f"maps {j} and {k} disagree on the product of object sets")


@dataclass
class CatMultimap:
    """Separately functorial data ``(A_1..A_n) -> C``: object map plus linear functors."""

    doms: tuple
    cod: FinCategory
    object_map: dict
    parts: dict  # (i, z) -> Functor A_i -> C

    def check(self) -> Report:
        rep = Report(subject="category multimap")
        for (i, z), F in self.parts.items():
            rep.merge(F.check(), prefix=f"part{i}:")
            for o in self.doms[i].objects:
                rep.check("underlying", F.obj_map[o] == self.object_map[insert(z, i, o)], (i, z, o))
        return rep


def _slot_product(As, j):
    facs = [A if i == j else FinCategory.discrete(A.objects) for i, A in enumerate(As)]
    return product_category(facs)[0]


def multimap_from_cocone(fs: Sequence[Functor], As: Sequence[FinCategory], C: FinCategory) -> CatMultimap:
    """Assemble functors ``f_j : prod_i A_i0|_j A_j -> C`` into one multimap.

    The ``f_j`` must agree on the product of object sets; otherwise
    :class:`IncompatibleCocone` names the first disagreeing pair (1-based).
    """
    As = tuple(As)
    n = len(As)
    objs = list(itertools.product(*[A.objects for A in As]))
    for j in range(n):
        for k in range(j + 1, n):
            if any(fs[j].obj_map[o] != fs[k].obj_map[o] for o in objs):
                raise IncompatibleCocone(j + 1, k + 1)
    om = {o: fs[0].obj_map[o] for o in objs} if n else {}
    parts = {}
    for j, A in enumerate(As):
        for z in contexts(As, j):
            lift = lambda f: tuple(("id", z[i if i < j else i - 1]) if i != j else f
                                   for i in range(n))
            parts[(j, z)] = Functor(A, C, {o: fs[j].obj_map[insert(z, j, o)] for o in A.objects},
                                    {f: fs[j].mor_map[lift(f)] for f in A.morphisms})
    return CatMultimap(As, C, om, parts)


def cocone_from_multimap(m: CatMultimap) -> list[Functor]:
    As, C = m.doms, m.cod
    n = len(As)
    out = []
    for j in range(n):
        P = _slot_product(As, j)
        mor = {}
        for f in P.morphisms:
            z = tuple(P.morphisms[f][0][i] for i in range(n) if i != j)
            mor[f] = m.parts[(j, z)].mor_map[f[j]]
        out.append(Functor(P, C, {o: m.object_map[o] for o in P.objects}, mor))
    return out


def slot_product(As: Sequence[FinCategory], j: int) -> FinCategory:
    """``prod_i A_i0|_j A_j``: discrete in every slot except the j-th."""
    return _slot_product(list(As), j)
