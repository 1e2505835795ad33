"""Finite graphs, finite categories and finitely presented categories.

Words and paths are written in diagrammatic order: ``f;g`` means first ``f``
then ``g``.  Composition tables of :class:`FinCategory` follow the same
convention, so ``c.then(f, g)`` is the composite usually written g∘f.

Equality in a presented category is decided either by an attached
normalizer (exact) or by congruence closure over all words up to a length
bound (sound, and complete for classes that fit under the bound).
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import BoundExhausted, SizeLimitExceeded
from .report import Report

WORD_LIMIT = 2_000_000


@dataclass(frozen=True)
class WordEqualityBound:
    max_word_length: int

    def __post_init__(self):
        if not isinstance(self.max_word_length, int) or self.max_word_length < 1:
            raise ValueError("max_word_length must be a positive integer")


def as_bound(bound) -> int | None:
    if bound is None:
        return None
    if isinstance(bound, WordEqualityBound):
        return bound.max_word_length
    return WordEqualityBound(int(bound)).max_word_length


# ---------------------------------------------------------------- graphs


@dataclass(frozen=True)
class FinGraph:
    """Objects plus labelled edges ``(label, source, target)``."""

    objects: tuple
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object labels")
        objs = set(self.objects)
        seen = set()
        for e in self.edges:
            if len(e) != 3:
                raise ValueError(f"edge {e!r} is not (label, source, target)")
            lab, s, t = e
            if s not in objs or t not in objs:
                raise ValueError(f"edge {lab!r} has an endpoint outside the objects")
            if lab in seen:
                raise ValueError(f"duplicate edge label {lab!r}")
            seen.add(lab)

    @cached_property
    def _ends(self) -> dict:
        return {lab: (s, t) for lab, s, t in self.edges}

    @cached_property
    def _out(self) -> dict:
        out = defaultdict(list)
        for lab, s, _ in self.edges:
            out[s].append(lab)
        return dict(out)

    @cached_property
    def order(self) -> dict:
        """Position of each edge label; used for shortlex comparisons."""
        return {lab: i for i, (lab, _, _) in enumerate(self.edges)}

    def src(self, label):
        return self._ends[label][0]

    def tgt(self, label):
        return self._ends[label][1]

    def out_edges(self, obj) -> list:
        return self._out.get(obj, [])

    def hom(self, a, b) -> list:
        return [lab for lab, s, t in self.edges if s == a and t == b]

    def has_edge(self, label) -> bool:
        return label in self._ends

    @classmethod
    def discrete(cls, objects) -> "FinGraph":
        return cls(tuple(objects), ())


@dataclass(frozen=True)
class Path:
    """A composable word of generators from ``src`` to ``tgt``."""

    src: Hashable
    tgt: Hashable
    word: tuple = ()

    def __len__(self):
        return len(self.word)

    def then(self, other: "Path") -> "Path":
        if self.tgt != other.src:
            raise ValueError(f"cannot compose {self} then {other}")
        return Path(self.src, other.tgt, self.word + other.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def __str__(self):
        if not self.word:
            return f"id({self.src})"
        return ";".join(str(g) for g in self.word)


def path_from_word(graph: FinGraph, word: Sequence, src=None) -> Path:
    """Type-check a word against ``graph``; ``src`` is needed for empty words."""
    word = tuple(word)
    if not word:
        if src is None:
            raise ValueError("empty word needs an explicit source object")
        if src not in graph.objects:
            raise ValueError(f"unknown object {src!r}")
        return Path(src, src, ())
    for g in word:
        if not graph.has_edge(g):
            raise ValueError(f"unknown generator {g!r}")
    if src is not None and graph.src(word[0]) != src:
        raise ValueError(f"word {word!r} does not start at {src!r}")
    for g, h in zip(word, word[1:]):
        if graph.tgt(g) != graph.src(h):
            raise ValueError(f"generators {g!r} and {h!r} are not composable")
    return Path(graph.src(word[0]), graph.tgt(word[-1]), word)


# ------------------------------------------------------ finite categories


class FinCategory:
    """A finite category given by explicit tables.

    ``composition[(f, g)]`` is the composite *f then g*.
    """

    def __init__(self, objects, morphisms: Mapping, identities: Mapping,
                 composition: Mapping, name: str | None = None):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        self.composition = dict(composition)
        self.name = name

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def hom(self, a, b) -> list:
        return [f for f, (s, t) in self.morphisms.items() if s == a and t == b]

    def then(self, f, g):
        return self.composition[(f, g)]

    def compose_path(self, obj, fs: Iterable):
        """Fold a diagrammatic sequence starting at ``obj``."""
        acc = self.identities[obj]
        for f in fs:
            acc = self.composition[(acc, f)]
        return acc

    def is_identity(self, f) -> bool:
        s, t = self.morphisms[f]
        return s == t and self.identities.get(s) == f

    @cached_property
    def _key(self):
        return (self.objects, tuple(self.morphisms.items()),
                tuple(self.identities.items()),
                tuple(sorted(self.composition.items(), key=repr)))

    def __eq__(self, other):
        return isinstance(other, FinCategory) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        name = f" {self.name}" if self.name else ""
        return f"<FinCategory{name}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def underlying_graph(self) -> FinGraph:
        """All morphisms, identities included, as edges."""
        return FinGraph(self.objects, [(f, s, t) for f, (s, t) in self.morphisms.items()])

    def non_identities(self) -> list:
        return [f for f in self.morphisms if not self.is_identity(f)]

    @cached_property
    def presentation(self) -> "PresentedCategory":
        """Generators are the non-identity morphisms; the table decides equality."""
        gens = self.non_identities()
        graph = FinGraph(self.objects, [(f, *self.morphisms[f]) for f in gens])
        rels = []
        gen_set = set(gens)
        for f in gens:
            for g in gens:
                if self.tgt(f) != self.src(g):
                    continue
                h = self.composition[(f, g)]
                lhs = Path(self.src(f), self.tgt(g), (f, g))
                rhs = Path(self.src(f), self.tgt(g), (h,) if h in gen_set else ())
                rels.append((lhs, rhs))

        def normalize(p: Path) -> Path:
            m = self.compose_path(p.src, p.word)
            return Path(p.src, p.tgt, () if self.is_identity(m) else (m,))

        pres = PresentedCategory(graph, rels, normalizer=normalize, name=self.name)
        pres.table = self
        return pres

    def morphism_of(self, p: Path):
        """The morphism denoted by a word over the non-identity morphisms."""
        return self.compose_path(p.src, p.word)

    @classmethod
    def discrete(cls, objects, name=None) -> "FinCategory":
        objects = tuple(objects)
        ids = {o: ("id", o) for o in objects}
        return cls(objects, {ids[o]: (o, o) for o in objects}, ids,
                   {(ids[o], ids[o]): ids[o] for o in objects}, name=name)

    @classmethod
    def terminal(cls) -> "FinCategory":
        return cls.discrete(["*"], name="1")


def validate_fin_category(c: FinCategory) -> Report:
    """Check typing, units and associativity by exhaustive iteration."""
    rep = Report(subject=f"category {c.name or ''}".strip())
    objs = set(c.objects)
    for f, (s, t) in c.morphisms.items():
        rep.check("typing", s in objs and t in objs, (f,), "endpoint is not an object")
    for o in c.objects:
        i = c.identities.get(o)
        rep.check("identity", i is not None and c.morphisms.get(i) == (o, o), (o,),
                  "identity missing or mistyped")
    if not rep.ok:
        return rep
    composable = {(f, g) for f in c.morphisms for g in c.morphisms if c.tgt(f) == c.src(g)}
    for pair in c.composition:
        rep.check("composition-domain", pair in composable, pair, "composite of a non-composable pair")
    for f, g in sorted(composable, key=repr):
        h = c.composition.get((f, g))
        if h is None:
            rep.fail("composition-domain", (f, g), "composable pair has no composite")
            continue
        rep.check("typing", c.morphisms.get(h) == (c.src(f), c.tgt(g)), (f, g),
                  f"composite {h!r} has the wrong type")
    if not rep.ok:
        return rep
    for f, (s, t) in c.morphisms.items():
        rep.check("unit-left", c.composition[(c.identities[s], f)] == f, (f,),
                  f"id({s});{f} != {f}")
        rep.check("unit-right", c.composition[(f, c.identities[t])] == f, (f,),
                  f"{f};id({t}) != {f}")
    out = defaultdict(list)
    for f, (s, _) in c.morphisms.items():
        out[s].append(f)
    for f in c.morphisms:
        for g in out[c.tgt(f)]:
            fg = c.composition[(f, g)]
            for h in out[c.tgt(g)]:
                lhs = c.composition[(fg, h)]
                rhs = c.composition[(f, c.composition[(g, h)])]
                rep.check("associativity", lhs == rhs, (f, g, h), f"{lhs!r} != {rhs!r}")
    return rep


# ------------------------------------------------- presented categories


@dataclass(frozen=True)
class HomClasses:
    """Congruence classes of a bounded hom, one canonical word each."""

    reps: tuple
    exhausted: bool
    bound: int | None

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)


class PresentedCategory:
    """A category given by a graph of generators and relations between paths.

    ``normalizer``, when given, must send every path to a normal form that is
    fixed by the normalizer and shared by all equal paths.  It then overrides
    congruence closure.  ``bound`` is the default length bound used for
    closure-based equality.
    """

    def __init__(self, graph: FinGraph, relations: Iterable = (),
                 normalizer: Callable[[Path], Path] | None = None,
                 bound=None, name: str | None = None):
        self.graph = graph
        rels = []
        for i, rel in enumerate(relations):
            lhs, rhs = rel
            for side in (lhs, rhs):
                if not isinstance(side, Path):
                    raise TypeError(f"relation {i}: sides must be Path values")
                chk = path_from_word(graph, side.word, side.src)
                if chk.tgt != side.tgt:
                    raise ValueError(f"relation {i}: path {side} has wrong target")
            if (lhs.src, lhs.tgt) != (rhs.src, rhs.tgt):
                raise ValueError(f"relation {i}: {lhs} and {rhs} are not parallel")
            rels.append((lhs, rhs))
        self.relations = tuple(rels)
        self.normalizer = normalizer
        self.bound = as_bound(bound)
        self.name = name
        self._closures: dict[int, _Closure] = {}

    def __repr__(self):
        name = f" {self.name}" if self.name else ""
        return (f"<PresentedCategory{name}: {len(self.objects)} objects, "
                f"{len(self.graph.edges)} generators, {len(self.relations)} relations>")

    @property
    def objects(self) -> tuple:
        return self.graph.objects

    @property
    def generators(self) -> tuple:
        return tuple(lab for lab, _, _ in self.graph.edges)

    def path(self, word, src=None) -> Path:
        return path_from_word(self.graph, word, src)

    def identity(self, obj) -> Path:
        return path_from_word(self.graph, (), obj)

    def gen_path(self, g) -> Path:
        return Path(self.graph.src(g), self.graph.tgt(g), (g,))

    def sort_key(self, p: Path):
        order = self.graph.order
        return (len(p.word), tuple(order[g] for g in p.word))

    # -- word enumeration

    def words_from(self, a, max_len: int) -> Iterator[Path]:
        """All paths out of ``a`` of length ≤ max_len, in shortlex order."""
        level = [Path(a, a, ())]
        yield level[0]
        for _ in range(max_len):
            nxt = []
            for p in level:
                for g in self.graph.out_edges(p.tgt):
                    q = Path(p.src, self.graph.tgt(g), p.word + (g,))
                    nxt.append(q)
                    yield q
            level = nxt
            if not level:
                return

    def words(self, a, b, max_len: int) -> Iterator[Path]:
        for p in self.words_from(a, max_len):
            if p.tgt == b:
                yield p

    # -- equality

    def closure(self, bound) -> "_Closure":
        k = as_bound(bound)
        if k not in self._closures:
            self._closures[k] = _Closure(self, k)
        return self._closures[k]

    def _bound_for(self, bound) -> int:
        k = as_bound(bound) if bound is not None else self.bound
        if k is None:
            raise ValueError("no length bound given and none attached to the presentation")
        return k

    def normalize(self, p: Path) -> Path:
        if self.normalizer is None:
            raise ValueError("presentation has no normalizer")
        return self.normalizer(p)

    def equal(self, u: Path, v: Path, bound=None) -> bool:
        if (u.src, u.tgt) != (v.src, v.tgt):
            return False
        if self.normalizer is not None:
            return self.normalizer(u) == self.normalizer(v)
        return self.closure(self._bound_for(bound)).equal(u, v)

    def canonical(self, p: Path, bound=None) -> Path:
        if self.normalizer is not None:
            return self.normalizer(p)
        return self.closure(self._bound_for(bound)).representative(p)

    def hom(self, a, b, bound=None) -> HomClasses:
        """Classes of words ``a -> b`` of length ≤ bound, canonical words sorted shortlex."""
        k = self._bound_for(bound)
        if self.normalizer is not None:
            forms = {self.normalizer(p) for p in self.words(a, b, k)}
            return HomClasses(tuple(sorted(forms, key=self.sort_key)), False, k)
        return self.closure(k).hom(a, b)

    def with_relations(self, extra: Iterable, bound=None, name=None) -> "PresentedCategory":
        return PresentedCategory(self.graph, self.relations + tuple(extra), None,
                                 bound if bound is not None else self.bound,
                                 name or self.name)


class _Closure:
    """Union-find congruence over all words of length ≤ bound."""

    def __init__(self, pres: PresentedCategory, bound: int):
        self.pres = pres
        self.bound = bound
        words: list[Path] = []
        for a in pres.objects:
            for p in pres.words_from(a, bound):
                words.append(p)
                if len(words) > WORD_LIMIT:
                    raise SizeLimitExceeded(f"more than {WORD_LIMIT} words at bound {bound}")
        self.words = words
        self.index = {(p.src, p.word): i for i, p in enumerate(words)}
        parent = list(range(len(words)))

        def find(i):
            root = i
            while parent[root] != root:
                root = parent[root]
            while parent[i] != root:
                parent[i], i = root, parent[i]
            return root

        by_first = defaultdict(list)
        by_obj = defaultdict(list)
        for lhs, rhs in pres.relations:
            for l, r in ((lhs, rhs), (rhs, lhs)):
                if l.word:
                    by_first[l.word[0]].append((l.word, r.word))
                else:
                    by_obj[l.src].append(r.word)
        escaped = set()
        tgt = pres.graph.tgt
        for i, p in enumerate(words):
            w = p.word
            obj = p.src
            for pos in range(len(w) + 1):
                rewrites = []
                if pos < len(w):
                    for l, r in by_first.get(w[pos], ()):
                        if w[pos:pos + len(l)] == l:
                            rewrites.append(w[:pos] + r + w[pos + len(l):])
                for r in by_obj.get(obj, ()):
                    rewrites.append(w[:pos] + r + w[pos:])
                for nw in rewrites:
                    if len(nw) > bound:
                        escaped.add(i)
                        continue
                    j = self.index[(p.src, nw)]
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        if ri < rj:
                            parent[rj] = ri
                        else:
                            parent[ri] = rj
                if pos < len(w):
                    obj = tgt(w[pos])
        self.root = [find(i) for i in range(len(words))]
        self.escaping_classes = {self.root[i] for i in escaped}

    def _id(self, p: Path) -> int:
        if len(p.word) > self.bound:
            raise BoundExhausted(f"word of length {len(p.word)} exceeds bound {self.bound}")
        return self.index[(p.src, p.word)]

    def equal(self, u: Path, v: Path) -> bool:
        return self.root[self._id(u)] == self.root[self._id(v)]

    def representative(self, p: Path) -> Path:
        return self.words[self.root[self._id(p)]]

    def class_escapes(self, p: Path) -> bool:
        return self.root[self._id(p)] in self.escaping_classes

    def hom(self, a, b) -> HomClasses:
        roots = sorted({self.root[i] for i, p in enumerate(self.words)
                        if p.src == a and p.tgt == b})
        exhausted = any(r in self.escaping_classes for r in roots)
        return HomClasses(tuple(self.words[r] for r in roots), exhausted, self.bound)


def free_category(g: FinGraph, name=None) -> PresentedCategory:
    """Morphisms are the directed paths of ``g``; equality is word identity."""
    return PresentedCategory(g, (), normalizer=lambda p: p, name=name)


def quotient_category(p: PresentedCategory, extra_relations: Iterable, bound) -> PresentedCategory:
    """Add relations; equality of the result is bounded congruence closure.

    The returned presentation carries ``bound`` so that ``equal`` is the
    decision procedure.  Queries on longer words raise :class:`BoundExhausted`.
    """
    return p.with_relations(extra_relations, bound=as_bound(bound))


def hom_enumerate(p: PresentedCategory, a, b, bound) -> HomClasses:
    return p.hom(a, b, bound)


def hom_profile(p: PresentedCategory, bound) -> dict:
    """Class counts of every bounded hom."""
    return {(a, b): len(p.hom(a, b, bound)) for a in p.objects for b in p.objects}


# ------------------------------------------------------------- functors


class Functor:
    """A functor between finite categories, given on all morphisms."""

    def __init__(self, dom: FinCategory, cod: FinCategory, obj_map: Mapping, mor_map: Mapping):
        self.dom = dom
        self.cod = cod
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)

    def __call__(self, f):
        return self.mor_map[f]

    def on_object(self, o):
        return self.obj_map[o]

    @cached_property
    def _key(self):
        return (tuple(self.obj_map[o] for o in self.dom.objects),
                tuple(self.mor_map[f] for f in self.dom.morphisms))

    def __eq__(self, other):
        return (isinstance(other, Functor) and self._key == other._key
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Functor({self.obj_map!r}, {self.mor_map!r})"

    def then(self, other: "Functor") -> "Functor":
        return Functor(self.dom, other.cod,
                       {o: other.obj_map[v] for o, v in self.obj_map.items()},
                       {f: other.mor_map[v] for f, v in self.mor_map.items()})

    def check(self) -> Report:
        rep = Report(subject="functor")
        D, C = self.dom, self.cod
        for f, (s, t) in D.morphisms.items():
            img = self.mor_map.get(f)
            rep.check("typing", img in C.morphisms and C.morphisms[img] == (self.obj_map[s], self.obj_map[t]),
                      (f,), "image has wrong type")
        if not rep.ok:
            return rep
        for o in D.objects:
            rep.check("identity", self.mor_map[D.identities[o]] == C.identities[self.obj_map[o]], (o,))
        for (f, g), h in D.composition.items():
            rep.check("composition", C.then(self.mor_map[f], self.mor_map[g]) == self.mor_map[h], (f, g))
        return rep

    @classmethod
    def identity(cls, c: FinCategory) -> "Functor":
        return cls(c, c, {o: o for o in c.objects}, {f: f for f in c.morphisms})


class PresentationMap:
    """A functor out of a presented category, given on generators.

    Images are paths when the codomain is presented and morphism labels when
    it is a :class:`FinCategory`.
    """

    def __init__(self, dom: PresentedCategory, cod, obj_map: Mapping, gen_map: Mapping):
        self.dom = dom
        self.cod = cod
        self.obj_map = dict(obj_map)
        self.gen_map = dict(gen_map)

    def __call__(self, p: Path):
        if isinstance(self.cod, FinCategory):
            return self.cod.compose_path(self.obj_map[p.src], (self.gen_map[g] for g in p.word))
        out = self.cod.identity(self.obj_map[p.src])
        for g in p.word:
            out = out.then(self.gen_map[g])
        return out

    def check(self, bound=None) -> Report:
        rep = Report(subject="presented functor")
        cod = self.cod
        for lab, s, t in self.dom.graph.edges:
            img = self.gen_map.get(lab)
            if isinstance(cod, FinCategory):
                ok = img in cod.morphisms and cod.morphisms[img] == (self.obj_map[s], self.obj_map[t])
            else:
                ok = isinstance(img, Path) and (img.src, img.tgt) == (self.obj_map[s], self.obj_map[t])
            rep.check("typing", ok, (lab,))
        if not rep.ok:
            return rep
        for lhs, rhs in self.dom.relations:
            a, b = self(lhs), self(rhs)
            same = a == b if isinstance(cod, FinCategory) else cod.equal(a, b, bound)
            rep.check("relation", same, (str(lhs), str(rhs)))
        return rep

    @classmethod
    def inclusion_of_objects(cls, dom: PresentedCategory, cod, obj_map=None) -> "PresentationMap":
        """The functor out of a generator-free (discrete) presentation."""
        if dom.graph.edges:
            raise ValueError("domain has generators")
        return cls(dom, cod, obj_map or {o: o for o in dom.objects}, {})


def functors_from_presented(p: PresentedCategory, target: FinCategory,
                            obj_maps: Iterable[Mapping] | None = None) -> Iterator[PresentationMap]:
    """Enumerate all functors ``p -> target`` by backtracking on generator images."""
    gens = list(p.graph.edges)
    rel_ready = defaultdict(list)
    position = {lab: i for i, (lab, _, _) in enumerate(gens)}
    for lhs, rhs in p.relations:
        last = max((position[g] for g in lhs.word + rhs.word), default=-1)
        rel_ready[last].append((lhs, rhs))
    if obj_maps is None:
        obj_maps = (dict(zip(p.objects, img))
                    for img in itertools.product(target.objects, repeat=len(p.objects)))

    def value(om, gm, path):
        return target.compose_path(om[path.src], (gm[g] for g in path.word))

    for om in obj_maps:
        if any(value(om, {}, lhs) != value(om, {}, rhs) for lhs, rhs in rel_ready[-1]):
            continue
        choices = [target.hom(om[s], om[t]) for _, s, t in gens]
        gm: dict = {}

        def rec(i):
            if i == len(gens):
                yield PresentationMap(p, target, om, dict(gm))
                return
            lab = gens[i][0]
            for f in choices[i]:
                gm[lab] = f
                if all(value(om, gm, l) == value(om, gm, r) for l, r in rel_ready[i]):
                    yield from rec(i + 1)
            gm.pop(lab, None)

        yield from rec(0)


def functors_between(c: FinCategory, d: FinCategory) -> Iterator[Functor]:
    pres = c.presentation
    for pm in functors_from_presented(pres, d):
        mor = {f: pm(Path(c.src(f), c.tgt(f), () if c.is_identity(f) else (f,)))
               for f in c.morphisms}
        yield Functor(c, d, pm.obj_map, mor)


def find_isomorphism(c: FinCategory, d: FinCategory, max_objects: int = 6) -> Functor | None:
    """Search for an isomorphism by bijections; both sides need ≤ max_objects objects."""
    if len(c.objects) != len(d.objects) or len(c.morphisms) != len(d.morphisms):
        return None
    if len(c.objects) > max_objects:
        raise SizeLimitExceeded(f"isomorphism search is limited to {max_objects} objects")
    for perm in itertools.permutations(d.objects):
        om = dict(zip(c.objects, perm))
        if any(len(c.hom(a, b)) != len(d.hom(om[a], om[b])) for a in c.objects for b in c.objects):
            continue
        for pm in functors_from_presented(c.presentation, d, [om]):
            mor = {f: pm(Path(c.src(f), c.tgt(f), () if c.is_identity(f) else (f,)))
                   for f in c.morphisms}
            if len(set(mor.values())) == len(mor):
                return Functor(c, d, om, mor)
    return None


def bounded_isomorphic(p: PresentedCategory, q: PresentedCategory, bound,
                       max_objects: int = 6) -> dict | None:
    """Object bijection matching every bounded hom count, or None."""
    if len(p.objects) != len(q.objects):
        return None
    if len(p.objects) > max_objects:
        raise SizeLimitExceeded(f"isomorphism search is limited to {max_objects} objects")
    hp, hq = hom_profile(p, bound), hom_profile(q, bound)
    for perm in itertools.permutations(q.objects):
        om = dict(zip(p.objects, perm))
        if all(hp[(a, b)] == hq[(om[a], om[b])] for a in p.objects for b in p.objects):
            return om
    return None


# ------------------------------------------------------------- products


def product_category(cs: Sequence[FinCategory], name=None) -> tuple[FinCategory, list[Functor]]:
    """Cartesian product with its projections; labels are tuples."""
    cs = list(cs)
    objects = list(itertools.product(*[c.objects for c in cs]))
    morphisms = {}
    for fs in itertools.product(*[list(c.morphisms) for c in cs]):
        morphisms[fs] = (tuple(c.src(f) for c, f in zip(cs, fs)),
                         tuple(c.tgt(f) for c, f in zip(cs, fs)))
    identities = {o: tuple(c.identities[x] for c, x in zip(cs, o)) for o in objects}
    comp = {}
    for fs, (_, t) in morphisms.items():
        for gs, (s2, _) in morphisms.items():
            if s2 == t:
                comp[(fs, gs)] = tuple(c.composition[(f, g)] for c, f, g in zip(cs, fs, gs))
    prod = FinCategory(objects, morphisms, identities, comp, name=name)
    projections = [Functor(prod, c, {o: o[i] for o in objects}, {f: f[i] for f in morphisms})
                   for i, c in enumerate(cs)]
    return prod, projections


# ---------------------------------------------------------- funny tensor


@dataclass(frozen=True)
class Move:
    """A generator of a tensor that moves coordinate ``index`` only.

    ``coords`` holds objects in the fixed positions and the moving
    generator at ``index``; printed as ``(a,f)``.
    """

    index: int
    coords: tuple

    @property
    def gen(self):
        return self.coords[self.index]

    def context(self, obj):
        return self.coords[:self.index] + (obj,) + self.coords[self.index + 1:]

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def lift_path(j: int, ctx: tuple, p: Path) -> Path:
    """The path of moves in coordinate ``j`` with the other coordinates ``ctx``."""
    put = lambda x: ctx[:j] + (x,) + ctx[j + 1:]
    return Path(put(p.src), put(p.tgt), tuple(Move(j, put(g)) for g in p.word))


def _contexts(factors, j):
    others = [f.objects if i != j else (None,) for i, f in enumerate(factors)]
    return list(itertools.product(*others))


def funny_tensor(factors: Sequence[PresentedCategory], name=None) -> PresentedCategory:
    """n-ary funny tensor: objects are tuples, morphisms alternate between factors.

    If every factor has a normalizer the result does too: maximal blocks of
    moves in one coordinate are normalized in that factor until stable.
    """
    factors = list(factors)
    objects = list(itertools.product(*[f.objects for f in factors]))
    edges, rels = [], []
    for j, fac in enumerate(factors):
        ctxs = _contexts(factors, j)
        for lab, s, t in fac.graph.edges:
            for ctx in ctxs:
                m = Move(j, ctx[:j] + (lab,) + ctx[j + 1:])
                edges.append((m, m.context(s), m.context(t)))
        for lhs, rhs in fac.relations:
            for ctx in ctxs:
                rels.append((lift_path(j, ctx, lhs), lift_path(j, ctx, rhs)))
    graph = FinGraph(objects, edges)
    normalizer = None
    if all(f.normalizer is not None for f in factors):
        normalizer = _funny_normalizer(factors)
    out = PresentedCategory(graph, rels, normalizer=normalizer, name=name)
    out.factors = tuple(factors)
    return out


def _funny_normalizer(factors):
    def normalize(p: Path) -> Path:
        word = list(p.word)
        while True:
            out, obj, i, changed = [], p.src, 0, False
            while i < len(word):
                j = word[i].index
                k = i
                while k < len(word) and word[k].index == j:
                    k += 1
                block = word[i:k]
                fac = factors[j]
                fp = Path(obj[j], fac.graph.tgt(block[-1].gen), tuple(m.gen for m in block))
                nf = fac.normalize(fp)
                lifted = lift_path(j, obj, nf).word
                if lifted != tuple(block):
                    changed = True
                out.extend(lifted)
                obj = obj[:j] + (fp.tgt,) + obj[j + 1:]
                i = k
            word = out
            if not changed:
                return Path(p.src, p.tgt, tuple(word))

    return normalize


def discrete_presentation(objects, name=None) -> PresentedCategory:
    return free_category(FinGraph.discrete(objects), name=name)


# --------------------------------------------------------------- pushouts


@dataclass
class Pushout:
    category: PresentedCategory
    inl: PresentationMap
    inr: PresentationMap


def pushout_cat(left: PresentationMap, right: PresentationMap, bound=None) -> Pushout:
    """Pushout of presented categories along functors with a common domain.

    Objects are glued by union-find; generators are the disjoint union of the
    codomain generators (tagged only where labels clash); relations are the
    codomain relations plus ``left(d) = right(d)`` for each generator ``d``.
    """
    if left.dom is not right.dom and (left.dom.graph != right.dom.graph):
        raise ValueError("left and right must share their domain")
    P, Q, D = left.cod, right.cod, left.dom
    tagged = [("L", x) for x in P.objects] + [("R", y) for y in Q.objects]
    parent = {t: t for t in tagged}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for d in D.objects:
        a, b = find(("L", left.obj_map[d])), find(("R", right.obj_map[d]))
        if a != b:
            parent[b] = a
    names, used = {}, set()
    for t in tagged:
        r = find(t)
        if r not in names:
            label = t[1] if t[1] not in used else t
            names[r] = label
            used.add(label)
    obj_of = {t: names[find(t)] for t in tagged}
    objects = list(dict.fromkeys(obj_of[t] for t in tagged))

    clash = set(P.generators) & set(Q.generators)
    lgen = {g: (("L", g) if g in clash else g) for g in P.generators}
    rgen = {g: (("R", g) if g in clash else g) for g in Q.generators}
    edges = [(lgen[g], obj_of[("L", s)], obj_of[("L", t)]) for g, s, t in P.graph.edges]
    edges += [(rgen[g], obj_of[("R", s)], obj_of[("R", t)]) for g, s, t in Q.graph.edges]
    graph = FinGraph(objects, edges)

    def tr(side, ren, p: Path) -> Path:
        return Path(obj_of[(side, p.src)], obj_of[(side, p.tgt)], tuple(ren[g] for g in p.word))

    rels = [(tr("L", lgen, l), tr("L", lgen, r)) for l, r in P.relations]
    rels += [(tr("R", rgen, l), tr("R", rgen, r)) for l, r in Q.relations]
    for g in D.generators:
        rels.append((tr("L", lgen, left(D.gen_path(g))), tr("R", rgen, right(D.gen_path(g)))))
    cat = PresentedCategory(graph, rels, bound=bound, name="pushout")
    inl = PresentationMap(P, cat, {x: obj_of[("L", x)] for x in P.objects},
                          {g: Path(obj_of[("L", s)], obj_of[("L", t)], (lgen[g],)) for g, s, t in P.graph.edges})
    inr = PresentationMap(Q, cat, {y: obj_of[("R", y)] for y in Q.objects},
                          {g: Path(obj_of[("R", s)], obj_of[("R", t)], (rgen[g],)) for g, s, t in Q.graph.edges})
    return Pushout(cat, inl, inr)


def verify_pushout(po: Pushout, left: PresentationMap, right: PresentationMap,
                   targets: Iterable[FinCategory]) -> Report:
    """Check the universal property against every cocone into each target."""
    rep = Report(subject="pushout universal property")
    D = left.dom
    for k, T in enumerate(targets):
        cocones = set()
        for h in functors_from_presented(left.cod, T):
            for g in functors_from_presented(right.cod, T):
                if all(h.obj_map[left.obj_map[d]] == g.obj_map[right.obj_map[d]] for d in D.objects) and \
                        all(h(left(D.gen_path(x))) == g(right(D.gen_path(x))) for x in D.generators):
                    cocones.add((_pm_key(h), _pm_key(g)))
        induced = []
        for u in functors_from_presented(po.category, T):
            induced.append((_pm_key(_compose_pm(po.inl, u)), _pm_key(_compose_pm(po.inr, u))))
        rep.check("existence", cocones <= set(induced), (k,), "a cocone does not factor")
        rep.check("uniqueness", len(induced) == len(set(induced)), (k,), "a cocone factors twice")
        rep.check("cocone", set(induced) <= cocones, (k,), "a factorization is not a cocone")
    return rep


def _compose_pm(first: PresentationMap, second: PresentationMap) -> PresentationMap:
    return PresentationMap(first.dom, second.cod,
                           {o: second.obj_map[v] for o, v in first.obj_map.items()},
                           {g: second(first.gen_map[g]) for g in first.gen_map})


def _pm_key(pm: PresentationMap):
    return (tuple(pm.obj_map[o] for o in pm.dom.objects),
            tuple(pm.gen_map[g] for g in pm.dom.generators))


# -------------------------------------------------- finite presentations


def to_fin_category(p: PresentedCategory, bound) -> FinCategory:
    """Tabulate a presented category whose homs are finite.

    Morphism labels are canonical paths.  Every class must be represented by
    a word of length at most ``bound // 2`` so composites stay decidable.
    """
    k = as_bound(bound)
    reps = {}
    for a in p.objects:
        for b in p.objects:
            hc = p.hom(a, b, k)
            for r in hc:
                if 2 * len(r) > k:
                    raise BoundExhausted(f"representative {r} too long for bound {k}")
            reps[(a, b)] = list(hc)
    morphisms = {r: key for key, rs in reps.items() for r in rs}
    identities = {a: p.canonical(p.identity(a), k) for a in p.objects}
    comp = {}
    for f, (s, t) in morphisms.items():
        for g, (s2, t2) in morphisms.items():
            if s2 == t:
                comp[(f, g)] = p.canonical(f.then(g), k)
    return FinCategory(p.objects, morphisms, identities, comp, name=p.name)
