"""Finite symmetric multicategories.

Permutations are tuples ``s`` with ``s[i]`` the old position feeding new
input ``i``: the right action ``f.s`` has inputs ``(x[s[0]], .., x[s[n-1]])``
and products compose as ``(s*t)[i] = s[t[i]]`` so that ``(f.s).t = f.(s*t)``.

Multimaps are opaque values; each multicategory class knows how to read
their domain and codomain.  Hom-sets are materialized on demand under a
size limit; predicates that would exceed it report ``"unknown"``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from .errors import SizeLimitExceeded
from .fincat import FinCategory, Functor
from .report import Report
from .vgraph import (VGraph, VGraphMultimap, compose_multimaps, contexts, enumerate_multimaps,
                     identity_multimap, insert)

HOM_SIZE_LIMIT = 100_000

# ------------------------------------------------------------ permutations


def perm_identity(n: int) -> tuple:
    return tuple(range(n))


def perm_mul(s: Sequence[int], t: Sequence[int]) -> tuple:
    return tuple(s[t[i]] for i in range(len(t)))


def perm_inverse(s: Sequence[int]) -> tuple:
    inv = [0] * len(s)
    for i, v in enumerate(s):
        inv[v] = i
    return tuple(inv)


def all_perms(n: int) -> list:
    return list(itertools.permutations(range(n)))


def block_perm(sigma: Sequence[int], taus: Sequence[Sequence[int]]) -> tuple:
    """``sigma(tau_i)_i``: permute blocks by sigma and each block by its tau."""
    sizes = [len(t) for t in taus]
    offs = list(itertools.accumulate([0] + sizes))
    out = []
    for k in range(len(sigma)):
        b = sigma[k]
        out.extend(offs[b] + taus[b][t] for t in range(sizes[b]))
    return tuple(out)


def adjacent_transpositions(s: Sequence[int]) -> list:
    """Positions k of adjacent swaps whose product (left to right) is ``s``."""
    cur = list(range(len(s)))
    target = list(s)
    swaps = []
    for i in range(len(target)):
        j = cur.index(target[i], i)
        while j > i:
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            swaps.append(j - 1)
            j -= 1
    return swaps


# ------------------------------------------------------------------ interface


class SymMulticategory:
    """Interface: objects, homs, identities, composition and the right action."""

    objects: tuple = ()
    name: str = ""
    size_limit: int = HOM_SIZE_LIMIT

    def hom(self, xs: tuple, y) -> list:
        raise NotImplementedError

    def dom(self, f) -> tuple:
        raise NotImplementedError

    def cod(self, f):
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def compose(self, g, fs: Sequence):
        raise NotImplementedError

    def act(self, f, sigma: Sequence[int]):
        raise NotImplementedError

    def placed(self, g, k: int, f):
        """``g ∘_k f``: substitute f at input k, identities elsewhere."""
        ys = self.dom(g)
        return self.compose(g, [f if i == k else self.identity(y) for i, y in enumerate(ys)])

    def sequences(self, max_len: int) -> Iterator[tuple]:
        for n in range(max_len + 1):
            yield from itertools.product(self.objects, repeat=n)

    def _checked_hom(self, xs, y) -> list:
        h = self.hom(tuple(xs), y)
        if len(h) > self.size_limit:
            raise SizeLimitExceeded(f"hom {xs}->{y} has more than {self.size_limit} multimaps")
        return h


# ------------------------------------------------------------ validation


def validate_symmetric_multicat(X: SymMulticategory, max_arity: int = 2,
                                instance_limit: int = 2_000_000) -> Report:
    """Check the five axioms on all instances whose arities stay ≤ max_arity.

    Every composite considered (including intermediate ones) has arity at
    most ``max_arity``; exceeding ``instance_limit`` raises rather than sampling.
    """
    rep = Report(subject=f"symmetric multicategory {X.name}".strip())
    rep.notes["max_arity"] = max_arity
    homs = {}
    for xs in X.sequences(max_arity):
        for y in X.objects:
            homs[(xs, y)] = X._checked_hom(xs, y)
    by_cod = {}
    for (xs, y), fs in homs.items():
        by_cod.setdefault(y, []).extend(fs)
    budget = [instance_limit]

    def tick():
        budget[0] -= 1
        if budget[0] < 0:
            raise SizeLimitExceeded("validation instance limit reached")

    for (xs, y), fs in homs.items():
        n = len(xs)
        for f in fs:
            rep.check("typing", X.dom(f) == xs and X.cod(f) == y, (f,))
            rep.check("action-unit", X.act(f, perm_identity(n)) == f, (f,))
            rep.check("composition-unit", X.compose(X.identity(y), [f]) == f, (f, "left"))
            rep.check("composition-unit", X.compose(f, [X.identity(x) for x in xs]) == f, (f, "right"))
            for s in all_perms(n):
                fs_ = X.act(f, s)
                rep.check("action-typing", X.dom(fs_) == tuple(xs[s[i]] for i in range(n)), (f, s))
                for t in all_perms(n):
                    tick()
                    rep.check("action-associativity", X.act(fs_, t) == X.act(f, perm_mul(s, t)), (f, s, t))
    if not rep.ok:
        return rep

    def families(targets, total):
        """Tuples of multimaps into ``targets`` with arities summing ≤ total."""
        if not targets:
            yield ()
            return
        first, rest = targets[0], targets[1:]
        for k in range(total + 1):
            for xs in itertools.product(X.objects, repeat=k):
                for f in homs[(xs, first)]:
                    for tail in families(rest, total - k):
                        yield (f,) + tail

    for (zs, w), hs in homs.items():
        for h in hs:
            for gs in families(list(zs), max_arity):
                hg = X.compose(h, list(gs))
                mid = [y for g in gs for y in X.dom(g)]
                for fs in families(mid, max_arity):
                    tick()
                    offs = list(itertools.accumulate([0] + [len(X.dom(g)) for g in gs]))
                    inner = [X.compose(g, list(fs[offs[i]:offs[i + 1]])) for i, g in enumerate(gs)]
                    rep.check("composition-associativity",
                              X.compose(hg, list(fs)) == X.compose(h, inner), (h, gs, fs))
            n = len(zs)
            for gs in families(list(zs), max_arity):
                comp = X.compose(h, list(gs))
                for s in all_perms(n):
                    for taus in itertools.product(*[all_perms(len(X.dom(g))) for g in gs]):
                        tick()
                        lhs = X.act(comp, block_perm(s, taus))
                        rhs = X.compose(X.act(h, s), [X.act(gs[s[i]], taus[s[i]]) for i in range(n)])
                        rep.check("equivariance", lhs == rhs, (h, gs, s, taus))
    return rep


# ------------------------------------------------------------ tables


class TableMulticategory(SymMulticategory):
    """All structure stored in finite tables up to a maximum arity."""

    def __init__(self, objects, homs: Mapping, identities: Mapping, composition: Mapping,
                 action: Mapping, max_arity: int, name: str = ""):
        self.objects = tuple(objects)
        self.homs = {k: list(v) for k, v in homs.items()}
        self.identities = dict(identities)
        self.composition = dict(composition)
        self.action = dict(action)
        self.max_arity = max_arity
        self.name = name
        self.typing = {f: (xs, y) for (xs, y), fs in self.homs.items() for f in fs}

    def hom(self, xs, y):
        return self.homs.get((tuple(xs), y), [])

    def dom(self, f):
        return self.typing[f][0]

    def cod(self, f):
        return self.typing[f][1]

    def identity(self, x):
        return self.identities[x]

    def compose(self, g, fs):
        return self.composition[(g, tuple(fs))]

    def act(self, f, sigma):
        return self.action[(f, tuple(sigma))]

    def copy(self) -> "TableMulticategory":
        return TableMulticategory(self.objects, self.homs, self.identities, self.composition,
                                  self.action, self.max_arity, self.name)

    @classmethod
    def tabulate(cls, X: SymMulticategory, max_arity: int, labels: Callable | None = None) -> "TableMulticategory":
        """Freeze ``X`` up to ``max_arity``; multimaps become short string labels."""
        raw = {}
        for xs in X.sequences(max_arity):
            for y in X.objects:
                raw[(xs, y)] = X._checked_hom(xs, y)
        label = {}
        for fs in raw.values():
            for f in fs:
                label.setdefault(f, labels(f) if labels else f"m{len(label)}")
        homs = {k: [label[f] for f in fs] for k, fs in raw.items()}
        ids = {x: label[X.identity(x)] for x in X.objects}
        comp, act = {}, {}
        by_cod = {}
        for (xs, y), fs in raw.items():
            by_cod.setdefault(y, []).append((xs, fs))
        for (zs, w), gs in raw.items():
            for g in gs:
                for fam in _bounded_families(raw, list(zs), max_arity, X.objects):
                    comp[(label[g], tuple(label[f] for f in fam))] = label[X.compose(g, list(fam))]
        for (xs, y), fs in raw.items():
            for f in fs:
                for s in all_perms(len(xs)):
                    act[(label[f], s)] = label[X.act(f, s)]
        return cls(X.objects, homs, ids, comp, act, max_arity, name=X.name)


def _bounded_families(raw, targets, total, objects):
    if not targets:
        yield ()
        return
    for k in range(total + 1):
        for xs in itertools.product(objects, repeat=k):
            for f in raw[(xs, targets[0])]:
                for tail in _bounded_families(raw, targets[1:], total - k, objects):
                    yield (f,) + tail


# ------------------------------------------------- universality, closedness

UNKNOWN = "unknown"


def _is_bijection(mapping_images: list, target: list) -> bool:
    return len(mapping_images) == len(target) and set(mapping_images) == set(target) \
        and len(set(mapping_images)) == len(mapping_images)


def is_universal(X: SymMulticategory, f) -> bool:
    """Composition with f is a bijection ``X((y), z) -> X(x, z)`` for every z."""
    xs, y = X.dom(f), X.cod(f)
    for z in X.objects:
        imgs = [X.compose(g, [f]) for g in X._checked_hom((y,), z)]
        if not _is_bijection(imgs, X._checked_hom(xs, z)):
            return False
    return True


def is_strongly_universal(X: SymMulticategory, f, context_arity: int = 2,
                          context_objects: Sequence | None = None) -> bool:
    """Placed composition with f is bijective in every context of length ≤ context_arity.

    ``context_objects`` restricts the other context entries (default: all objects).
    """
    xs, y = X.dom(f), X.cod(f)
    objs = tuple(context_objects) if context_objects is not None else X.objects
    for L in range(1, context_arity + 1):
        for k in range(L):
            for others in itertools.product(objs, repeat=L - 1):
                ctx = others[:k] + (y,) + others[k:]
                new = others[:k] + tuple(xs) + others[k:]
                for z in X.objects:
                    imgs = [X.placed(g, k, f) for g in X._checked_hom(ctx, z)]
                    if not _is_bijection(imgs, X._checked_hom(new, z)):
                        return False
    return True


def universality_verdict(X, f, strong=False, context_arity=2, context_objects=None):
    """True, False or ``"unknown"`` when a hom exceeds the size limit."""
    try:
        return (is_strongly_universal(X, f, context_arity, context_objects) if strong
                else is_universal(X, f))
    except SizeLimitExceeded:
        return UNKNOWN


def check_closed(X: SymMulticategory, hom_assignment: Mapping, rev_assignment: Mapping,
                 max_context: int = 2, pairs: Iterable | None = None,
                 context_objects: Sequence | None = None) -> Report:
    """Verify ``rev(-, 1_x)`` and ``lev(1_x, -)`` are bijections for contexts up to max_context."""
    rep = Report(subject=f"closedness {X.name}".strip())
    rep.notes["max_context"] = max_context
    objs = tuple(context_objects) if context_objects is not None else X.objects
    for (x, y) in (pairs if pairs is not None else hom_assignment):
        h = hom_assignment[(x, y)]
        rev = rev_assignment[(x, y)]
        rep.check("rev-typing", X.dom(rev) == (h, x) and X.cod(rev) == y, (x, y))
        lev = X.act(rev, (1, 0))
        for n in range(max_context + 1):
            for zs in itertools.product(objs, repeat=n):
                src = X._checked_hom(zs, h)
                right = [X.compose(rev, [g, X.identity(x)]) for g in src]
                rep.check("right-evaluation", _is_bijection(right, X._checked_hom(zs + (x,), y)), (zs, x, y))
                left = [X.compose(lev, [X.identity(x), g]) for g in src]
                rep.check("left-evaluation", _is_bijection(left, X._checked_hom((x,) + zs, y)), (zs, x, y))
    return rep


def find_closed_structure(X: SymMulticategory, max_context: int = 1) -> tuple[dict, dict] | None:
    """Search every pair for a hom object and right evaluation; None if some pair has none."""
    homs, revs = {}, {}
    for x in X.objects:
        for y in X.objects:
            found = False
            for h in X.objects:
                for rev in X._checked_hom((h, x), y):
                    if check_closed(X, {(x, y): h}, {(x, y): rev}, max_context).ok:
                        homs[(x, y)], revs[(x, y)] = h, rev
                        found = True
                        break
                if found:
                    break
            if not found:
                return None
    return homs, revs


def find_unit(X: SymMulticategory):
    """A universal nullary multimap, or None."""
    for e in X.objects:
        for u in X._checked_hom((), e):
            if is_universal(X, u):
                return u
    return None


@dataclass
class ClosedStructure:
    unit: Any
    hom: dict
    i: dict
    j: dict
    L: dict
    report: Report


def _unique(X, xs, y, pred, what):
    found = [h for h in X._checked_hom(xs, y) if pred(h)]
    if len(found) != 1:
        raise ValueError(f"{what}: expected a unique factorization, found {len(found)}")
    return found[0]


def derive_closed_structure(X: SymMulticategory, hom: Mapping, rev: Mapping, u) -> ClosedStructure:
    """Build (e, [-,-], i, j, L) by unique factorization and check the closed-category axioms."""
    rep = Report(subject=f"closed category from {X.name}".strip())
    e = X.cod(u)
    objs = X.objects
    ident = X.identity
    lin = lambda g, f: X.compose(g, [f])

    def internal(f, g):
        """``[f, g] : [a, b] -> [a', b']`` for linear ``f : a' -> a`` and ``g : b -> b'``."""
        (a2,), a = X.dom(f), X.cod(f)
        (b,), b2 = X.dom(g), X.cod(g)
        target = lin(g, X.compose(rev[(a, b)], [ident(hom[(a, b)]), f]))
        return _unique(X, (hom[(a, b)],), hom[(a2, b2)],
                       lambda h: X.compose(rev[(a2, b2)], [h, ident(a2)]) == target, "[f,g]")

    i = {a: _unique(X, (a,), hom[(e, a)],
                    lambda h, a=a: X.compose(rev[(e, a)], [h, u]) == ident(a), f"i_{a}") for a in objs}
    j = {a: _unique(X, (e,), hom[(a, a)],
                    lambda h, a=a: X.compose(rev[(a, a)], [lin(h, u), ident(a)]) == ident(a), f"j_{a}")
         for a in objs}
    L = {}
    for a in objs:
        for b in objs:
            for c in objs:
                ab, ac, bc = hom[(a, b)], hom[(a, c)], hom[(b, c)]
                rhs = X.compose(rev[(b, c)], [ident(bc), rev[(a, b)]])
                L[(a, b, c)] = _unique(
                    X, (bc,), hom[(ab, ac)],
                    lambda h: X.compose(rev[(a, c)], [X.compose(rev[(ab, ac)], [h, ident(ab)]), ident(a)]) == rhs,
                    f"L^{a}_{b},{c}")
    for a in objs:
        inv = [g for g in X._checked_hom((hom[(e, a)],), a)
               if lin(g, i[a]) == ident(a) and lin(i[a], g) == ident(hom[(e, a)])]
        rep.check("i-iso", len(inv) == 1, (a,))
    for a in objs:
        for b in objs:
            ab = hom[(a, b)]
            rep.check("L-j", lin(L[(a, b, b)], j[b]) == j[ab], (a, b))
            rep.check("j-L-i", lin(internal(j[a], ident(ab)), L[(a, a, b)]) == i[ab], (a, b))
            rep.check("L-i", lin(internal(i[a], ident(hom[(e, b)])), L[(e, a, b)]) ==
                      internal(ident(a), i[b]), (a, b))
            for c in objs:
                for d in objs:
                    lhs = lin(internal(ident(hom[(b, c)]), L[(a, b, d)]), L[(b, c, d)])
                    mid = lin(L[(hom[(a, b)], hom[(a, c)], hom[(a, d)])], L[(a, c, d)])
                    rhs = lin(internal(L[(a, b, c)], ident(hom[(hom[(a, b)], hom[(a, d)])])), mid)
                    rep.check("L-L", lhs == rhs, (a, b, c, d))
    return ClosedStructure(u, dict(hom), i, j, L, rep)


# ---------------------------------------------- categories over Set and F(A)


class CategoryOverSet:
    """A finite category with an element set per object and a function per morphism."""

    def __init__(self, category: FinCategory, elements: Mapping, action: Mapping, name: str = ""):
        self.category = category
        self.elements = {o: tuple(v) for o, v in elements.items()}
        self.action = {m: dict(v) for m, v in action.items()}
        self.name = name or (category.name or "")

    def underlying(self, m) -> tuple:
        s = self.category.src(m)
        return tuple(self.action[m][x] for x in self.elements[s])

    def validate(self) -> Report:
        rep = Report(subject="category over Set")
        c = self.category
        for m, (s, t) in c.morphisms.items():
            rep.check("typing", all(self.action[m].get(x) in self.elements[t] for x in self.elements[s]), (m,))
        for o in c.objects:
            rep.check("identity", all(self.action[c.identities[o]][x] == x for x in self.elements[o]), (o,))
        for (f, g), h in c.composition.items():
            ok = all(self.action[g][self.action[f][x]] == self.action[h][x] for x in self.elements[c.src(f)])
            rep.check("composition", ok, (f, g))
        return rep


def cat_over_set(categories: Mapping[str, FinCategory], functors: Iterable | None = None,
                 name="Cat") -> CategoryOverSet:
    """Categories (by name) and functors between them, over their object sets.

    With ``functors`` omitted every functor between the listed categories is used.
    """
    from .fincat import functors_between
    names = list(categories)
    mors = {}
    if functors is None:
        for a in names:
            for b in names:
                for F in functors_between(categories[a], categories[b]):
                    mors[(a, b, F._key)] = (a, b, F)
    else:
        for a, b, F in functors:
            mors[(a, b, F._key)] = (a, b, F)
    for a in names:
        mors[(a, a, Functor.identity(categories[a])._key)] = (a, a, Functor.identity(categories[a]))
    labels = list(mors)
    ids = {a: (a, a, Functor.identity(categories[a])._key) for a in names}
    comp = {}
    for k1 in labels:
        a, b, F = mors[k1]
        for k2 in labels:
            b2, c, G = mors[k2]
            if b2 == b:
                H = F.then(G)
                key = (a, c, H._key)
                if key not in mors:
                    raise ValueError("functor family is not closed under composition")
                comp[(k1, k2)] = key
    cat = FinCategory(names, {k: (mors[k][0], mors[k][1]) for k in labels}, ids, comp, name=name)
    elements = {a: categories[a].objects for a in names}
    action = {k: mors[k][2].obj_map for k in labels}
    out = CategoryOverSet(cat, elements, action, name)
    out.functors = {k: mors[k][2] for k in labels}
    out.categories = dict(categories)
    return out


@dataclass(frozen=True)
class FMultimap:
    """Underlying multifunction plus linear parts (morphisms of A)."""

    dom: tuple
    cod: Any
    f0: tuple  # images aligned with the product of element sets
    parts: tuple  # morphisms aligned with FMulticategory.part_keys(dom)

    def __str__(self):
        return f"({','.join(map(str, self.dom))})->{self.cod}:{self.f0}"


class FMulticategory(SymMulticategory):
    """F(A): multimaps are a multifunction with compatible linear parts."""

    def __init__(self, A: CategoryOverSet, size_limit: int = HOM_SIZE_LIMIT):
        self.A = A
        self.objects = A.category.objects
        self.name = f"F({A.name})"
        self.size_limit = size_limit
        self._homs = {}
        by_fn = {}
        c = A.category
        for m, (s, t) in c.morphisms.items():
            by_fn.setdefault((s, t, A.underlying(m)), []).append(m)
        self._by_fn = by_fn

    def elements_of(self, xs) -> list:
        return list(itertools.product(*[self.A.elements[x] for x in xs]))

    def part_keys(self, xs) -> list:
        out = []
        for i in range(len(xs)):
            for z in itertools.product(*[self.A.elements[x] for k, x in enumerate(xs) if k != i]):
                out.append((i, z))
        return out

    def f0_map(self, f: FMultimap) -> dict:
        return dict(zip(self.elements_of(f.dom), f.f0))

    def part(self, f: FMultimap, i, z):
        return f.parts[self.part_keys(f.dom).index((i, z))]

    def hom(self, xs, y):
        key = (tuple(xs), y)
        if key not in self._homs:
            self._homs[key] = list(self._enumerate(tuple(xs), y))
        return self._homs[key]

    def _enumerate(self, xs, y):
        elems = self.elements_of(xs)
        ys = self.A.elements[y]
        keys = self.part_keys(xs)
        total = len(ys) ** len(elems)
        count = 0
        for imgs in itertools.product(ys, repeat=len(elems)):
            f0 = dict(zip(elems, imgs))
            choices = []
            for i, z in keys:
                fn = tuple(f0[insert(z, i, x)] for x in self.A.elements[xs[i]])
                choices.append(self._by_fn.get((xs[i], y, fn), []))
            for parts in itertools.product(*choices):
                count += 1
                if count > self.size_limit:
                    raise SizeLimitExceeded(f"hom {xs}->{y} exceeds {self.size_limit} (of {total} multifunctions)")
                yield FMultimap(xs, y, tuple(imgs), tuple(parts))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def identity(self, x):
        elems = self.A.elements[x]
        return FMultimap((x,), x, tuple(elems), (self.A.category.identities[x],))

    def act(self, f: FMultimap, sigma):
        n = len(f.dom)
        new_dom = tuple(f.dom[sigma[i]] for i in range(n))
        f0 = self.f0_map(f)
        imgs = []
        for u in self.elements_of(new_dom):
            v = [None] * n
            for i in range(n):
                v[sigma[i]] = u[i]
            imgs.append(f0[tuple(v)])
        parts = []
        for i, zu in self.part_keys(new_dom):
            full = insert(zu, i, None)
            v = [None] * n
            for k in range(n):
                v[sigma[k]] = full[k]
            old_i = sigma[i]
            z_old = tuple(v[:old_i] + v[old_i + 1:])
            parts.append(self.part(f, old_i, z_old))
        return FMultimap(new_dom, f.cod, tuple(imgs), tuple(parts))

    def compose(self, g: FMultimap, fs: Sequence[FMultimap]):
        fs = list(fs)
        c = self.A.category
        dom = tuple(x for f in fs for x in f.dom)
        offs = list(itertools.accumulate([0] + [len(f.dom) for f in fs]))
        g0 = self.f0_map(g)
        f0s = [self.f0_map(f) for f in fs]
        imgs = []
        for w in self.elements_of(dom):
            imgs.append(g0[tuple(f0s[i][w[offs[i]:offs[i + 1]]] for i in range(len(fs)))])
        parts = []
        for pos, wz in self.part_keys(dom):
            full = insert(wz, pos, None)
            i = max(k for k in range(len(fs)) if offs[k] <= pos)
            jj = pos - offs[i]
            inner = full[offs[i]:offs[i + 1]]
            inner_z = inner[:jj] + inner[jj + 1:]
            outer = tuple(f0s[k][full[offs[k]:offs[k + 1]]] for k in range(len(fs)) if k != i)
            parts.append(c.then(self.part(fs[i], jj, inner_z), self.part(g, i, outer)))
        return FMultimap(dom, g.cod, tuple(imgs), tuple(parts))


def build_F(A: CategoryOverSet, size_limit: int = HOM_SIZE_LIMIT) -> FMulticategory:
    return FMulticategory(A, size_limit)


@dataclass
class Multifunctor:
    dom: SymMulticategory
    cod: SymMulticategory
    obj_map: dict
    apply: Callable

    def __call__(self, f):
        return self.apply(f)

    def check(self, max_arity: int = 2) -> Report:
        X, Y = self.dom, self.cod
        rep = Report(subject="multifunctor")
        for x in X.objects:
            rep.check("identity", self(X.identity(x)) == Y.identity(self.obj_map[x]), (x,))
        homs = {(xs, y): X.hom(xs, y) for xs in X.sequences(max_arity) for y in X.objects}
        for (xs, y), fs in homs.items():
            for f in fs:
                Ff = self(f)
                rep.check("typing", Y.dom(Ff) == tuple(self.obj_map[x] for x in xs)
                          and Y.cod(Ff) == self.obj_map[y], (f,))
                for s in all_perms(len(xs)):
                    rep.check("action", self(X.act(f, s)) == Y.act(Ff, s), (f, s))
        if not rep.ok:
            return rep
        for (zs, w), gs in homs.items():
            for g in gs:
                for fam in _bounded_families(homs, list(zs), max_arity, X.objects):
                    lhs = self(X.compose(g, list(fam)))
                    rhs = Y.compose(self(g), [self(f) for f in fam])
                    rep.check("composition", lhs == rhs, (g, fam))
        return rep


def F1_on_functor(FX: FMulticategory, FY: FMulticategory, obj_map: Mapping, mor_map: Mapping) -> Multifunctor:
    """F_1 of a functor over Set: same multifunction, parts mapped by the functor."""

    def apply(f: FMultimap):
        return FMultimap(tuple(obj_map[x] for x in f.dom), obj_map[f.cod], f.f0,
                         tuple(mor_map[p] for p in f.parts))

    return Multifunctor(FX, FY, dict(obj_map), apply)


def check_multinatural(X: SymMulticategory, Y: SymMulticategory, F: Multifunctor, G: Multifunctor,
                       components: Mapping, max_arity: int = 2) -> Report:
    """``G f (phi_{x_i})_i = phi_y (F f)`` for every multimap up to max_arity."""
    rep = Report(subject="multinatural transformation")
    for xs in X.sequences(max_arity):
        for y in X.objects:
            for f in X.hom(xs, y):
                lhs = Y.compose(G(f), [components[x] for x in xs])
                rhs = Y.compose(components[y], [F(f)])
                rep.check("multinaturality", lhs == rhs, (f,))
    return rep


# ----------------------------------------------------- UV of monoidal data


@dataclass
class StrictMonoidalData:
    """A strict symmetric monoidal structure on a finite category, by tables."""

    category: FinCategory
    unit: Any
    tensor_obj: dict  # (a, b) -> a⊗b
    tensor_mor: dict  # (f, g) -> f⊗g
    braid: dict  # (a, b) -> a⊗b -> b⊗a
    name: str = ""

    def tensor_objects(self, xs) -> Any:
        out = self.unit
        for x in xs:
            out = self.tensor_obj[(out, x)]
        return out

    def tensor_morphisms(self, fs) -> Any:
        c = self.category
        out = c.identities[self.unit]
        for f in fs:
            out = self.tensor_mor[(out, f)]
        return out

    def permutation_iso(self, xs, sigma):
        """Canonical iso ``⊗(x[s[i]])_i -> ⊗x`` assembled from braidings."""
        c = self.category
        cur = [xs[sigma[i]] for i in range(len(xs))]
        order = list(sigma)
        acc = c.identities[self.tensor_objects(cur)]
        # bubble the arrangement back to the identity order
        for i in range(len(order)):
            j = order.index(i, i)
            while j > i:
                pre, a, b, post = cur[:j - 1], cur[j - 1], cur[j], cur[j + 1:]
                step = self.tensor_morphisms([c.identities[self.tensor_objects(pre)],
                                              self.braid[(a, b)],
                                              c.identities[self.tensor_objects(post)]])
                acc = c.then(acc, step)
                cur[j - 1], cur[j] = b, a
                order[j - 1], order[j] = order[j], order[j - 1]
                j -= 1
        return acc

    def validate(self) -> Report:
        rep = Report(subject=f"strict symmetric monoidal {self.name}".strip())
        c = self.category
        objs = c.objects
        I = self.unit
        for a in objs:
            rep.check("unit", self.tensor_obj[(I, a)] == a and self.tensor_obj[(a, I)] == a, (a,))
            for b in objs:
                for d in objs:
                    lhs = self.tensor_obj[(self.tensor_obj[(a, b)], d)]
                    rhs = self.tensor_obj[(a, self.tensor_obj[(b, d)])]
                    rep.check("associativity", lhs == rhs, (a, b, d))
        for f, (s, t) in c.morphisms.items():
            for g, (s2, t2) in c.morphisms.items():
                fg = self.tensor_mor.get((f, g))
                rep.check("tensor-typing", fg is not None and c.morphisms[fg] ==
                          (self.tensor_obj[(s, s2)], self.tensor_obj[(t, t2)]), (f, g))
        if not rep.ok:
            return rep
        for a in objs:
            for b in objs:
                rep.check("tensor-identity", self.tensor_mor[(c.identities[a], c.identities[b])] ==
                          c.identities[self.tensor_obj[(a, b)]], (a, b))
                br = self.braid[(a, b)]
                rep.check("braid-typing", c.morphisms[br] == (self.tensor_obj[(a, b)], self.tensor_obj[(b, a)]), (a, b))
                rep.check("symmetry", c.then(br, self.braid[(b, a)]) == c.identities[self.tensor_obj[(a, b)]], (a, b))
        for (f, g), h in c.composition.items():
            for (f2, g2), h2 in c.composition.items():
                rep.check("interchange", self.tensor_mor[(h, h2)] ==
                          c.then(self.tensor_mor[(f, f2)], self.tensor_mor[(g, g2)]), (f, g, f2, g2))
        for f, (s, t) in c.morphisms.items():
            for g, (s2, t2) in c.morphisms.items():
                lhs = c.then(self.tensor_mor[(f, g)], self.braid[(t, t2)])
                rhs = c.then(self.braid[(s, s2)], self.tensor_mor[(g, f)])
                rep.check("braid-naturality", lhs == rhs, (f, g))
        for a in objs:
            for b in objs:
                for d in objs:
                    lhs = self.braid[(a, self.tensor_obj[(b, d)])]
                    rhs = c.then(self.tensor_mor[(self.braid[(a, b)], c.identities[d])],
                                 self.tensor_mor[(c.identities[b], self.braid[(a, d)])])
                    rep.check("hexagon", lhs == rhs, (a, b, d))
        return rep


@dataclass(frozen=True)
class UVMap:
    dom: tuple
    cod: Any
    mor: Any

    def __str__(self):
        return f"{self.mor}:({','.join(map(str, self.dom))})->{self.cod}"


class UVMulticategory(SymMulticategory):
    """``UV(x, y) = V(⊗x, y)`` for a strict symmetric monoidal V."""

    def __init__(self, V: StrictMonoidalData):
        self.V = V
        self.objects = V.category.objects
        self.name = f"U({V.name})" if V.name else "UV"

    def hom(self, xs, y):
        c = self.V.category
        return [UVMap(tuple(xs), y, m) for m in c.hom(self.V.tensor_objects(xs), y)]

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def identity(self, x):
        return UVMap((x,), x, self.V.category.identities[x])

    def compose(self, g, fs):
        c = self.V.category
        fs = list(fs)
        dom = tuple(x for f in fs for x in f.dom)
        m = c.then(self.V.tensor_morphisms([f.mor for f in fs]), g.mor)
        return UVMap(dom, g.cod, m)

    def act(self, f, sigma):
        c = self.V.category
        new = tuple(f.dom[sigma[i]] for i in range(len(f.dom)))
        return UVMap(new, f.cod, c.then(self.V.permutation_iso(f.dom, sigma), f.mor))


def UV_from_monoidal(V: StrictMonoidalData) -> UVMulticategory:
    return UVMulticategory(V)


def thin_monoidal(elements, leq: Callable, tensor: Callable, unit, name="") -> StrictMonoidalData:
    """A preordered commutative monoid as a thin strict symmetric monoidal category."""
    elements = list(elements)
    mors = {(a, b): (a, b) for a in elements for b in elements if leq(a, b)}
    cat = FinCategory(elements, mors, {a: (a, a) for a in elements},
                      {((a, b), (b2, d)): (a, d) for (a, b) in mors for (b2, d) in mors if b == b2},
                      name=name)
    tobj = {(a, b): tensor(a, b) for a in elements for b in elements}
    tmor = {(f, g): (tensor(f[0], g[0]), tensor(f[1], g[1])) for f in mors for g in mors}
    braid = {(a, b): (tensor(a, b), tensor(b, a)) for a in elements for b in elements}
    return StrictMonoidalData(cat, unit, tobj, tmor, braid, name)


def chain_monoidal(n: int) -> StrictMonoidalData:
    """The chain 0 < ... < n-1 with meet as tensor and the top as unit."""
    return thin_monoidal(list(range(n)), lambda a, b: a <= b, min, n - 1, f"chain{n}")


def lukasiewicz_monoidal(n: int) -> StrictMonoidalData:
    """The chain 0 < ... < n-1 with truncated addition ``max(0, a + b - (n-1))``."""
    return thin_monoidal(list(range(n)), lambda a, b: a <= b,
                         lambda a, b: max(0, a + b - (n - 1)), n - 1, f"Luk{n}")


def boolean_square_monoidal() -> StrictMonoidalData:
    """The four-element Boolean lattice with meet as tensor."""
    elems = [(a, b) for a in (0, 1) for b in (0, 1)]
    return thin_monoidal(elems, lambda x, y: x[0] <= y[0] and x[1] <= y[1],
                         lambda x, y: (min(x[0], y[0]), min(x[1], y[1])), (1, 1), "Bool2x2")


def closed_examples() -> list:
    """Ten small closed symmetric monoidal categories."""
    z2 = commutative_monoid_monoidal(["e", "s"], "e", lambda a, b: "e" if a == b else "s", "Z2-monoid")
    return [chain_monoidal(2), chain_monoidal(3), lukasiewicz_monoidal(3), lukasiewicz_monoidal(4),
            boolean_square_monoidal(), discrete_group_monoidal(2), discrete_group_monoidal(3), z2,
            vect_dims_monoidal(2), vect_dims_monoidal(3)]


def discrete_group_monoidal(n: int) -> StrictMonoidalData:
    """Z/n as a discrete category with addition as tensor."""
    elements = list(range(n))
    cat = FinCategory(elements, {("id", a): (a, a) for a in elements}, {a: ("id", a) for a in elements},
                      {(("id", a), ("id", a)): ("id", a) for a in elements}, name=f"Z/{n}")
    tobj = {(a, b): (a + b) % n for a in elements for b in elements}
    tmor = {(("id", a), ("id", b)): ("id", (a + b) % n) for a in elements for b in elements}
    braid = {(a, b): ("id", (a + b) % n) for a in elements for b in elements}
    return StrictMonoidalData(cat, 0, tobj, tmor, braid, f"Z/{n}")


def commutative_monoid_monoidal(elements, unit, mul: Callable, name="") -> StrictMonoidalData:
    """One object whose endomorphisms form a commutative monoid; tensor = multiplication."""
    elements = list(elements)
    cat = FinCategory(["*"], {m: ("*", "*") for m in elements}, {"*": unit},
                      {(a, b): mul(a, b) for a in elements for b in elements}, name=name)
    return StrictMonoidalData(cat, "*", {("*", "*"): "*"},
                              {(a, b): mul(a, b) for a in elements for b in elements},
                              {("*", "*"): unit}, name)


def vect_dims_monoidal(p: int) -> StrictMonoidalData:
    """F_p-vector spaces of dimension 0 and 1 with the tensor product (skeletal, strict)."""
    mors = {("z", a, b): (a, b) for a in (0, 1) for b in (0, 1) if (a, b) != (1, 1)}
    mors.update({("s", k): (1, 1) for k in range(p)})
    ids = {0: ("z", 0, 0), 1: ("s", 1)}

    def then(f, g):
        s, t = mors[f][0], mors[g][1]
        if f[0] == "s" and g[0] == "s":
            return ("s", (f[1] * g[1]) % p)
        if (s, t) == (1, 1):
            return ("s", 0)
        return ("z", s, t)

    comp = {(f, g): then(f, g) for f in mors for g in mors if mors[f][1] == mors[g][0]}
    cat = FinCategory([0, 1], mors, ids, comp, name=f"Vect(F{p})")

    def tensor(f, g):
        s, t = mors[f][0] * mors[g][0], mors[f][1] * mors[g][1]
        if f[0] == "s" and g[0] == "s":
            return ("s", (f[1] * g[1]) % p)
        return ("s", 0) if (s, t) == (1, 1) else ("z", s, t)

    tobj = {(a, b): a * b for a in (0, 1) for b in (0, 1)}
    tmor = {(f, g): tensor(f, g) for f in mors for g in mors}
    braid = {(a, b): ids[a * b] for a in (0, 1) for b in (0, 1)}
    return StrictMonoidalData(cat, 1, tobj, tmor, braid, f"Vect(F{p})")


# ------------------------------------------------------- sets and functions


@dataclass(frozen=True)
class FunctionMap:
    dom: tuple
    cod: Any
    table: tuple  # images aligned with the product of the domain sets


class FunctionMulticategory(SymMulticategory):
    """Finite sets (named by size) and functions out of cartesian products."""

    def __init__(self, sizes: Sequence[int]):
        self.objects = tuple(sizes)
        self.name = "Set"

    def _points(self, xs):
        return list(itertools.product(*[range(x) for x in xs]))

    def hom(self, xs, y):
        pts = self._points(xs)
        if y ** len(pts) > self.size_limit:
            raise SizeLimitExceeded(f"hom {xs}->{y} has {y ** len(pts)} functions")
        return [FunctionMap(tuple(xs), y, t) for t in itertools.product(range(y), repeat=len(pts))]

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def identity(self, x):
        return FunctionMap((x,), x, tuple(range(x)))

    def compose(self, g, fs):
        fs = list(fs)
        dom = tuple(x for f in fs for x in f.dom)
        offs = list(itertools.accumulate([0] + [len(f.dom) for f in fs]))
        gt = dict(zip(self._points(g.dom), g.table))
        fts = [dict(zip(self._points(f.dom), f.table)) for f in fs]
        table = tuple(gt[tuple(fts[i][w[offs[i]:offs[i + 1]]] for i in range(len(fs)))]
                      for w in self._points(dom))
        return FunctionMap(dom, g.cod, table)

    def act(self, f, sigma):
        n = len(f.dom)
        new = tuple(f.dom[sigma[i]] for i in range(n))
        ft = dict(zip(self._points(f.dom), f.table))
        out = []
        for u in self._points(new):
            v = [None] * n
            for i in range(n):
                v[sigma[i]] = u[i]
            out.append(ft[tuple(v)])
        return FunctionMap(new, f.cod, tuple(out))


# ------------------------------------------------------------ graphs


class GraphMulticategory(SymMulticategory):
    """F of Set-graphs restricted to a named family of graphs."""

    def __init__(self, graphs: Mapping[str, VGraph], size_limit: int = HOM_SIZE_LIMIT):
        self.graphs = dict(graphs)
        self.objects = tuple(self.graphs)
        self.name = "F(GSet)"
        self.size_limit = size_limit
        self._homs = {}
        self._names = {id(g): n for n, g in self.graphs.items()}

    def name_of(self, g: VGraph):
        return self._names[id(g)]

    def hom(self, xs, y):
        key = (tuple(xs), y)
        if key not in self._homs:
            self._homs[key] = [_NamedMultimap(tuple(xs), y, m) for m in enumerate_multimaps(
                [self.graphs[x] for x in xs], self.graphs[y], limit=self.size_limit)]
        return self._homs[key]

    def wrap(self, xs, y, m: VGraphMultimap):
        return _NamedMultimap(tuple(xs), y, m)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def identity(self, x):
        return _NamedMultimap((x,), x, identity_multimap(self.graphs[x]))

    def compose(self, g, fs):
        fs = list(fs)
        m = compose_multimaps(g.m, [f.m for f in fs])
        return _NamedMultimap(tuple(x for f in fs for x in f.dom), g.cod, m)

    def act(self, f, sigma):
        return _NamedMultimap(tuple(f.dom[s] for s in sigma), f.cod, permute_multimap(f.m, sigma))


@dataclass(frozen=True)
class _NamedMultimap:
    dom: tuple
    cod: Any
    m: VGraphMultimap

    def __hash__(self):
        return hash((self.dom, self.cod, self.m))

    def __eq__(self, other):
        return isinstance(other, _NamedMultimap) and (self.dom, self.cod) == (other.dom, other.cod) \
            and self.m == other.m


def permute_multimap(f: VGraphMultimap, sigma) -> VGraphMultimap:
    n = len(f.doms)
    doms = [f.doms[sigma[i]] for i in range(n)]
    om = {}
    for u in itertools.product(*[d.objects for d in doms]):
        v = [None] * n
        for i in range(n):
            v[sigma[i]] = u[i]
        om[u] = f.object_map[tuple(v)]
    hm = {}
    for i, d in enumerate(doms):
        for zu in contexts(doms, i):
            full = insert(zu, i, None)
            v = [None] * n
            for k in range(n):
                v[sigma[k]] = full[k]
            oi = sigma[i]
            z_old = tuple(v[:oi] + v[oi + 1:])
            for (a, b) in d.homs:
                hm[(i, zu, a, b)] = f.hom_maps[(oi, z_old, a, b)]
    return VGraphMultimap(doms, f.cod, om, hm)


# ------------------------------------------------------------- mutations


def table_mutations(T: TableMulticategory, count: int, seed: int = 0) -> list:
    """Deterministic single-entry mutations of composition or action tables.

    Each mutation replaces one entry by a different multimap of the same
    type; entries whose hom has a single element cannot be mutated that way
    and are skipped.
    """
    import random
    rng = random.Random(seed)
    candidates = []
    for key, val in sorted(T.composition.items(), key=repr):
        alts = [m for m in T.hom(T.dom(val), T.cod(val)) if m != val]
        if alts:
            candidates.append(("composition", key, alts))
    for key, val in sorted(T.action.items(), key=repr):
        alts = [m for m in T.hom(T.dom(val), T.cod(val)) if m != val]
        if alts:
            candidates.append(("action", key, alts))
    rng.shuffle(candidates)
    out = []
    for table, key, alts in candidates[:count]:
        M = T.copy()
        getattr(M, table)[key] = rng.choice(sorted(alts, key=repr))
        out.append((table, key, M))
    return out


# ------------------------------------------------------------- examples


def endomorphism_over_set(n: int) -> CategoryOverSet:
    """The monoid of all functions on ``range(n)`` as a one-object category over Set."""
    from .catalog import endofunction_monoid
    E = endofunction_monoid(n)
    return CategoryOverSet(E, {"*": tuple(range(n))},
                           {f: {i: f[i] for i in range(n)} for f in E.morphisms}, name=f"End({n})")


def free_generated_multicategory(generators: Sequence, n: int) -> TableMulticategory:
    """Objects ``0..n+1``; free on the set ``generators`` of multimaps ``(0..n) -> n+1``.

    Besides identities the multimaps are the generators and their
    permutations; no two of them compose, and no object has elements.
    """
    objs = tuple(range(n + 2))
    arity = n + 1
    homs = {}
    typing_dom = tuple(range(arity))
    for xs in itertools.chain.from_iterable(itertools.product(objs, repeat=k) for k in range(arity + 1)):
        for y in objs:
            homs[(xs, y)] = []
    for x in objs:
        homs[((x,), x)].append(("id", x))
    for s in all_perms(arity):
        dom = tuple(typing_dom[s[i]] for i in range(arity))
        for z in generators:
            homs[(dom, n + 1)].append((z, s))
    ids = {x: ("id", x) for x in objs}
    comp, act = {}, {}
    for x in objs:
        comp[(("id", x), (("id", x),))] = ("id", x)
        act[(("id", x), (0,))] = ("id", x)
    for s in all_perms(arity):
        dom = tuple(typing_dom[s[i]] for i in range(arity))
        for z in generators:
            f = (z, s)
            comp[(("id", n + 1), (f,))] = f
            comp[(f, tuple(("id", d) for d in dom))] = f
            for t in all_perms(arity):
                act[(f, t)] = (z, perm_mul(s, t))
    return TableMulticategory(objs, homs, ids, comp, act, arity, name="free")
