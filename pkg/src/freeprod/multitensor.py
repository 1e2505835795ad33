"""Non-symmetric operads of finite sets, their multitensors, and E-categories.

Operads are truncated at a maximum arity; substitution is only required
(and only checked) when the result stays within it.  An E-category gives,
for every operad element of arity n and composable sequence of n
morphisms, a composite; arity 0 supplies identities.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, Sequence

from .fincat import FinCategory, FinGraph, Path, free_category
from .report import Report

# ------------------------------------------------------------------ operads


@dataclass
class SetOperad:
    """Finite sets ``E[n]`` for ``n <= max_arity``, a unit and substitution."""

    E: dict  # n -> tuple of elements
    unit: Any
    substitute: Callable  # (e, (e_1..e_n)) -> element of arity sum k_i
    max_arity: int
    name: str = "E"

    def arity(self, e) -> int:
        return self._arity[e]

    def __post_init__(self):
        self._arity = {}
        for n, es in self.E.items():
            for e in es:
                self._arity[e] = n

    def elements(self, n: int) -> tuple:
        return self.E.get(n, ())

    def validate(self) -> Report:
        rep = Report(subject=f"operad {self.name}")
        N = self.max_arity
        rep.check("unit-arity", self.unit in self.elements(1), ())
        for n in range(N + 1):
            for e in self.elements(n):
                rep.check("right-unit", self.substitute(e, (self.unit,) * n) == e, (e,))
                rep.check("left-unit", self.substitute(self.unit, (e,)) == e, (e,))
        for n in range(N + 1):
            for e in self.elements(n):
                for ks in _compositions_upto(n, N):
                    for es in itertools.product(*[self.elements(k) for k in ks]):
                        inner = self.substitute(e, es)
                        rep.check("typing", self.arity(inner) == sum(ks), (e, es))
                        for ls in _nested(ks, N):
                            for ess in itertools.product(*[self.elements(l) for l in ls]):
                                lhs = self.substitute(inner, ess)
                                offs = list(itertools.accumulate([0] + list(ks)))
                                rhs = self.substitute(e, tuple(self.substitute(es[i], ess[offs[i]:offs[i + 1]])
                                                               for i in range(n)))
                                rep.check("associativity", lhs == rhs, (e, es, ess))
        return rep


def _compositions_upto(n: int, total: int):
    """Sequences of n non-negative arities whose sum is ≤ total."""
    if n == 0:
        yield ()
        return
    for k in range(total + 1):
        for rest in _compositions_upto(n - 1, total - k):
            yield (k,) + rest


def _nested(ks, total):
    return _compositions_upto(sum(ks), total)


def terminal_operad(max_arity: int = 3) -> SetOperad:
    """One operation in each arity; its E-categories are ordinary categories."""
    E = {n: (("*", n),) for n in range(max_arity + 1)}
    return SetOperad(E, ("*", 1), lambda e, es: ("*", sum(x[1] for x in es)), max_arity, "terminal")


# Two monoid structures sharing a unit.  Operations of arity n ≥ 2 are planar
# trees whose internal nodes carry a colour, have at least two children and
# differ in colour from their parent; "x" is the identity and "u" the unit.

LEAF, UNIT = "x", "u"


def _leaves(t) -> int:
    if t == LEAF:
        return 1
    if t == UNIT:
        return 0
    return sum(_leaves(c) for c in t[1])


def _normal(t):
    if t in (LEAF, UNIT):
        return t
    colour, children = t
    kids = []
    for c in children:
        c = _normal(c)
        if c == UNIT:
            continue
        if c != LEAF and c[0] == colour:
            kids.extend(c[1])
        else:
            kids.append(c)
    if not kids:
        return UNIT
    if len(kids) == 1:
        return kids[0]
    return (colour, tuple(kids))


def _graft(t, subs: list):
    """Replace leaves left to right by the trees in ``subs`` (consumed in place)."""
    if t == LEAF:
        return subs.pop(0)
    if t == UNIT:
        return UNIT
    return (t[0], tuple(_graft(c, subs) for c in t[1]))


def _trees(n: int, colours=("a", "b"), parent=None) -> list:
    """Normal trees with n leaves whose root colour differs from ``parent``."""
    if n == 0:
        return [UNIT] if parent is None else []
    if n == 1:
        return [LEAF]
    out = []
    for c in colours:
        if c == parent:
            continue
        for m in range(2, n + 1):
            for sizes in _splits(n, m):
                for kids in itertools.product(*[_trees(s, colours, c) for s in sizes]):
                    out.append((c, tuple(kids)))
    return out


def _splits(n, m):
    if m == 1:
        if n >= 1:
            yield (n,)
        return
    for k in range(1, n - m + 2):
        for rest in _splits(n - k, m - 1):
            yield (k,) + rest


def two_monoid_operad(max_arity: int = 3) -> SetOperad:
    """Operad whose algebras carry two monoid structures with a common unit (|E_2| = 2)."""
    E = {n: tuple(_trees(n)) for n in range(max_arity + 1)}

    def substitute(e, es):
        return _normal(_graft(e, list(es)))

    return SetOperad(E, LEAF, substitute, max_arity, "two-monoids")


def operad_mutation(O: SetOperad, key: tuple, value) -> SetOperad:
    base = O.substitute

    def substitute(e, es):
        if (e, tuple(es)) == key:
            return value
        return base(e, es)

    return SetOperad(dict(O.E), O.unit, substitute, O.max_arity, O.name + " (mutated)")


# -------------------------------------------------------------- multitensors


@dataclass
class MultitensorOnSet:
    """``E(X_1..X_n) = E_n x prod X_i`` with unit and substitution."""

    operad: SetOperad

    def apply(self, Xs: Sequence[tuple]) -> list:
        return [(e, xs) for e in self.operad.elements(len(Xs)) for xs in itertools.product(*Xs)]

    def iota(self, x):
        return (self.operad.unit, (x,))

    def sigma(self, outer) -> tuple:
        """``E(E(X_1..), .., E(..X_m)) -> E(X_1..X_m)``: substitute operations, concatenate points."""
        e, inners = outer
        es = tuple(i[0] for i in inners)
        xs = tuple(x for i in inners for x in i[1])
        return (self.operad.substitute(e, es), xs)

    def validate(self, sets: Sequence[tuple], max_arity: int = 2) -> Report:
        rep = Report(subject="multitensor")
        O = self.operad
        for X in sets:
            for x in X:
                rep.check("unit", self.sigma((O.unit, (self.iota(x),))) == self.iota(x), (x,))
        for n in range(max_arity + 1):
            for Xs in itertools.product(sets, repeat=n):
                for t in self.apply(list(Xs)):
                    rep.check("left-unit", self.sigma((O.unit, (t,))) == t, (t,))
                    rep.check("right-unit", self.sigma((t[0], tuple(self.iota(x) for x in t[1]))) == t, (t,))
        return rep

    def closedness_witness(self, Xs: Sequence[tuple], i: int, Y: tuple, Z: tuple) -> bool:
        """``E(.., Y + Z, ..) -> E(.., Y, ..) + E(.., Z, ..)`` is a bijection (coproduct distribution)."""
        tagged = tuple([("L", y) for y in Y] + [("R", z) for z in Z])
        left = self.apply(list(Xs[:i]) + [tagged] + list(Xs[i:]))
        ys = self.apply(list(Xs[:i]) + [Y] + list(Xs[i:]))
        zs = self.apply(list(Xs[:i]) + [Z] + list(Xs[i:]))
        target = [("L", t) for t in ys] + [("R", t) for t in zs]
        image = []
        for e, xs in left:
            tag, v = xs[i]
            image.append((tag, (e, xs[:i] + (v,) + xs[i + 1:])))
        return len(set(image)) == len(image) and set(image) == set(target)


def multitensor_from_operad(O: SetOperad) -> MultitensorOnSet:
    return MultitensorOnSet(O)


def operad_from_multitensor(M: MultitensorOnSet, max_arity: int | None = None) -> SetOperad:
    """``E_n = E(1, .., 1)`` with substitution read off ``sigma`` on singletons."""
    N = M.operad.max_arity if max_arity is None else max_arity
    one = ((),)
    E = {n: tuple(e for e, _ in M.apply([one] * n)) for n in range(N + 1)}
    unit = M.iota(())[0]

    def substitute(e, es):
        inners = tuple((x, ((),) * M.operad.arity(x)) for x in es)
        return M.sigma((e, inners))[0]

    return SetOperad(E, unit, substitute, N, M.operad.name)


def operads_equal(O: SetOperad, P: SetOperad) -> bool:
    if O.max_arity != P.max_arity or O.unit != P.unit:
        return False
    N = O.max_arity
    if any(set(O.elements(n)) != set(P.elements(n)) for n in range(N + 1)):
        return False
    for n in range(N + 1):
        for e in O.elements(n):
            for ks in _compositions_upto(n, N):
                for es in itertools.product(*[O.elements(k) for k in ks]):
                    if O.substitute(e, es) != P.substitute(e, es):
                        return False
    return True


# ------------------------------------------------------------ E-categories


class ECategory:
    """Objects, finite homs and a composite for each operation and composable sequence.

    ``compose(e, fs)`` takes ``e`` of arity ``len(fs)``; for arity 0 pass
    ``fs = ()`` together with ``obj``.  A table entry missing for a sequence
    beyond the operad truncation is reported as ``None``.
    """

    def __init__(self, objects, homs: Mapping, operad: SetOperad, table: Mapping, name: str = ""):
        self.objects = tuple(objects)
        self.homs = {k: tuple(v) for k, v in homs.items()}
        for a in self.objects:
            for b in self.objects:
                self.homs.setdefault((a, b), ())
        self.operad = operad
        self.table = dict(table)
        self.name = name
        self.typing = {}
        for (a, b), ms in self.homs.items():
            for m in ms:
                self.typing[m] = (a, b)

    def src(self, m):
        return self.typing[m][0]

    def tgt(self, m):
        return self.typing[m][1]

    def compose(self, e, fs: tuple, obj=None):
        key = (e, tuple(fs)) if fs else (e, (), obj)
        return self.table.get(key)

    def sequences(self, n: int, start=None) -> Iterable[tuple]:
        """Composable sequences of length n (with their start object for n = 0)."""
        if n == 0:
            for a in (self.objects if start is None else [start]):
                yield a, ()
            return

        def rec(obj, k):
            if k == 0:
                yield ()
                return
            for b in self.objects:
                for m in self.homs[(obj, b)]:
                    for rest in rec(b, k - 1):
                        yield (m,) + rest

        for a in (self.objects if start is None else [start]):
            for s in rec(a, n):
                yield a, s

    def copy(self) -> "ECategory":
        return ECategory(self.objects, self.homs, self.operad, self.table, self.name)


def ecategory_from_table(objects, homs, operad: SetOperad, compose: Callable, name="") -> ECategory:
    """Tabulate ``compose(e, fs, start)`` on every composable sequence within the truncation."""
    proto = ECategory(objects, homs, operad, {}, name)
    table = {}
    for n in range(operad.max_arity + 1):
        for e in operad.elements(n):
            for a, fs in proto.sequences(n):
                key = (e, fs) if fs else (e, (), a)
                table[key] = compose(e, fs, a)
    return ECategory(objects, homs, operad, table, name)


def validate_E_category(A: ECategory) -> Report:
    """Typing, unit and depth-two substitution instances within the truncation."""
    rep = Report(subject=f"E-category {A.name}".strip())
    O = A.operad
    N = O.max_arity
    for n in range(N + 1):
        for e in O.elements(n):
            for a, fs in A.sequences(n):
                v = A.compose(e, fs, a)
                b = A.tgt(fs[-1]) if fs else a
                rep.check("typing", v is not None and A.typing.get(v) == (a, b), (e, fs, a))
    if not rep.ok:
        return rep
    for (a, b), ms in A.homs.items():
        for m in ms:
            rep.check("unit", A.compose(O.unit, (m,)) == m, (m,))
    for n in range(N + 1):
        for e in O.elements(n):
            for ks in _compositions_upto(n, N):
                for es in itertools.product(*[O.elements(k) for k in ks]):
                    sub = O.substitute(e, es)
                    total = sum(ks)
                    for a, fs in A.sequences(total):
                        # split fs into blocks of sizes ks; empty blocks sit at the current object
                        parts, obj, pos = [], a, 0
                        for k in ks:
                            block = fs[pos:pos + k]
                            parts.append(A.compose(es[len(parts)], block, obj))
                            obj = A.tgt(block[-1]) if block else obj
                            pos += k
                        lhs = A.compose(e, tuple(parts), a)
                        rhs = A.compose(sub, fs, a)
                        rep.check("substitution", lhs == rhs, (e, es, fs, a))
    return rep


def ecategory_from_category(C: FinCategory, operad: SetOperad | None = None) -> ECategory:
    """An ordinary category over the terminal operad."""
    O = operad or terminal_operad()
    homs = {(a, b): C.hom(a, b) for a in C.objects for b in C.objects}
    return ecategory_from_table(C.objects, homs, O, lambda e, fs, a: C.compose_path(a, fs), C.name or "")


def category_from_ecategory(A: ECategory) -> FinCategory:
    O = A.operad
    e0, e2 = O.elements(0)[0], O.elements(2)[0]
    mors = {m: A.typing[m] for m in A.typing}
    ids = {a: A.compose(e0, (), a) for a in A.objects}
    comp = {(f, g): A.compose(e2, (f, g)) for f in mors for g in mors if A.tgt(f) == A.src(g)}
    return FinCategory(A.objects, mors, ids, comp, name=A.name)


def free_ecategory(graph: FinGraph, operad: SetOperad) -> ECategory:
    """Morphisms are ``(operation, path)`` with the operation's arity the path length, truncated at the operad's arity."""
    N = operad.max_arity
    P = free_category(graph)
    homs = {}
    for a in graph.objects:
        for b in graph.objects:
            homs[(a, b)] = tuple((e, p) for p in P.words(a, b, N) for e in operad.elements(len(p.word)))
    homs = {k: tuple(dict.fromkeys(v)) for k, v in homs.items()}

    def compose(e, fs, a):
        if not fs:
            return (operad.substitute(e, ()), Path(a, a, ()))
        word = tuple(x for f in fs for x in f[1].word)
        if len(word) > N:
            return None
        return (operad.substitute(e, tuple(f[0] for f in fs)), Path(a, fs[-1][1].tgt, word))

    return _partial_table(graph.objects, homs, operad, compose, "free")


def _partial_table(objects, homs, operad, compose, name):
    proto = ECategory(objects, homs, operad, {}, name)
    table = {}
    for n in range(operad.max_arity + 1):
        for e in operad.elements(n):
            for a, fs in proto.sequences(n):
                v = compose(e, fs, a)
                if v is not None:
                    table[(e, fs) if fs else (e, (), a)] = v
    out = ECategory(objects, homs, operad, table, name)
    out.partial = True
    return out


def validate_partial_E_category(A: ECategory) -> Report:
    """As :func:`validate_E_category`, skipping instances whose composites are undefined."""
    rep = Report(subject=f"E-category {A.name}".strip())
    O = A.operad
    N = O.max_arity
    for key, v in A.table.items():
        e, fs = key[0], key[1]
        a = key[2] if len(key) == 3 else A.src(fs[0])
        b = A.tgt(fs[-1]) if fs else a
        rep.check("typing", A.typing.get(v) == (a, b), key)
    for ms in A.homs.values():
        for m in ms:
            u = A.compose(O.unit, (m,))
            if u is not None:
                rep.check("unit", u == m, (m,))
    for n in range(N + 1):
        for e in O.elements(n):
            for ks in _compositions_upto(n, N):
                for es in itertools.product(*[O.elements(k) for k in ks]):
                    sub = O.substitute(e, es)
                    for a, fs in A.sequences(sum(ks)):
                        parts, obj, pos = [], a, 0
                        for k in ks:
                            block = fs[pos:pos + k]
                            parts.append(A.compose(es[len(parts)], block, obj))
                            obj = A.tgt(block[-1]) if block else obj
                            pos += k
                        if any(p is None for p in parts):
                            continue
                        lhs = A.compose(e, tuple(parts), a)
                        rhs = A.compose(sub, fs, a)
                        if lhs is None or rhs is None:
                            continue
                        rep.check("substitution", lhs == rhs, (e, es, fs, a))
    return rep


def two_monoid_ecategory() -> ECategory:
    """One object; truncated addition and max on {0,1,2} share the unit 0."""
    O = two_monoid_operad()
    ops = {"a": lambda x, y: min(2, x + y), "b": max}

    def evaluate(t, vals: list):
        if t == LEAF:
            return vals.pop(0)
        if t == UNIT:
            return 0
        colour, kids = t
        acc = 0
        for c in kids:
            acc = ops[colour](acc, evaluate(c, vals))
        return acc

    homs = {("*", "*"): (0, 1, 2)}
    return ecategory_from_table(["*"], homs, O, lambda e, fs, a: evaluate(e, list(fs)), "two-monoids")


# ------------------------------------------------------------ E-functors


@dataclass
class EFunctor:
    dom: ECategory
    cod: ECategory
    obj_map: dict
    mor_map: dict

    def __call__(self, m):
        return self.mor_map[m]

    def check(self) -> Report:
        rep = Report(subject="E-functor")
        A, B = self.dom, self.cod
        for m, (a, b) in A.typing.items():
            rep.check("typing", B.typing.get(self.mor_map.get(m)) == (self.obj_map[a], self.obj_map[b]), (m,))
        if not rep.ok:
            return rep
        for key, v in A.table.items():
            e, fs = key[0], key[1]
            obj = key[2] if len(key) == 3 else None
            img = B.compose(e, tuple(self.mor_map[f] for f in fs), self.obj_map[obj] if obj is not None else None)
            rep.check("composition", img == self.mor_map[v], key)
        return rep

    def then(self, other: "EFunctor") -> "EFunctor":
        return EFunctor(self.dom, other.cod, {o: other.obj_map[v] for o, v in self.obj_map.items()},
                        {m: other.mor_map[v] for m, v in self.mor_map.items()})

    @property
    def key(self):
        return (tuple(sorted(self.obj_map.items(), key=repr)), tuple(sorted(self.mor_map.items(), key=repr)))


def efunctors(A: ECategory, B: ECategory, obj_maps: Iterable[Mapping] | None = None) -> list[EFunctor]:
    """All E-functors, by backtracking over hom maps and checking the table."""
    if obj_maps is None:
        obj_maps = (dict(zip(A.objects, imgs)) for imgs in itertools.product(B.objects, repeat=len(A.objects)))
    out = []
    mors = list(A.typing)
    for om in obj_maps:
        choices = [B.homs[(om[A.src(m)], om[A.tgt(m)])] for m in mors]
        for imgs in itertools.product(*choices):
            F = EFunctor(A, B, dict(om), dict(zip(mors, imgs)))
            if F.check().ok:
                out.append(F)
    return out


@dataclass
class Coequalizer:
    category: ECategory
    quotient: EFunctor
    homwise_sufficient: bool
    report: Report


def coequalize_E_categories(f: EFunctor, g: EFunctor) -> Coequalizer:
    """Identity-on-objects coequalizer: quotient each hom, then close under composition.

    The hom-wise quotient of the parallel pair is taken first; if composition
    does not descend to it, the relation is enlarged to the least congruence
    and ``homwise_sufficient`` is False.
    """
    B = f.cod
    if any(f.obj_map[o] != o or g.obj_map[o] != o for o in f.dom.objects):
        raise ValueError("parallel E-functors must be identity on objects")
    parent = {m: m for m in B.typing}

    def find(m):
        while parent[m] != m:
            parent[m] = parent[parent[m]]
            m = parent[m]
        return m

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        order = {m: i for i, m in enumerate(B.typing)}
        if order[rx] < order[ry]:
            parent[ry] = rx
        else:
            parent[rx] = ry
        return True

    for m in f.dom.typing:
        union(f(m), g(m))
    homwise = dict((m, find(m)) for m in B.typing)
    changed = True
    while changed:
        changed = False
        groups = {}
        for key, v in B.table.items():
            fs = key[1]
            cls_key = (key[0], tuple(find(x) for x in fs)) + ((key[2],) if len(key) == 3 else ())
            if cls_key in groups:
                changed |= union(groups[cls_key], v)
            else:
                groups[cls_key] = v
    classes = {m: find(m) for m in B.typing}
    sufficient = classes == homwise
    homs = {k: tuple(dict.fromkeys(classes[m] for m in ms)) for k, ms in B.homs.items()}
    table = {}
    for key, v in B.table.items():
        fs = tuple(classes[x] for x in key[1])
        table[(key[0], fs) + ((key[2],) if len(key) == 3 else ())] = classes[v]
    C = ECategory(B.objects, homs, B.operad, table, name=f"{B.name}/~")
    h = EFunctor(B, C, {o: o for o in B.objects}, classes)
    rep = validate_E_category(C) if not getattr(B, "partial", False) else validate_partial_E_category(C)
    rep.merge(h.check(), prefix="quotient:")
    rep.notes["homwise_sufficient"] = sufficient
    return Coequalizer(C, h, sufficient, rep)


def check_coequalizer_universal(co: Coequalizer, f: EFunctor, g: EFunctor,
                                targets: Sequence[ECategory]) -> Report:
    """Every E-functor k with kf = kg factors uniquely through the quotient."""
    rep = Report(subject="coequalizer universal property")
    B, C, h = f.cod, co.category, co.quotient
    for t, D in enumerate(targets):
        for k in efunctors(B, D):
            if f.then(k).key != g.then(k).key:
                continue
            facs = [kp for kp in efunctors(C, D, [k.obj_map]) if h.then(kp).key == k.key]
            rep.check("unique-factorization", len(facs) == 1, (t, k.key), f"{len(facs)} factorizations")
        for kp in efunctors(C, D):
            k = h.then(kp)
            rep.check("cocone", f.then(k).key == g.then(k).key, (t, kp.key))
    return rep


# --------------------------------------------------- path decomposition


def path_multitensor_link(graphs: Sequence[FinGraph], bound: int = 3,
                          morphisms: Sequence[tuple] = ()) -> Report:
    """Paths split as a coproduct over object sequences of products of edge sets.

    ``morphisms`` holds ``(X, Y, h)`` with ``h`` a dict of object and edge
    maps; the hom map of ``T h`` must send the summand of a sequence to the
    summand of its image sequence by the product of the edge maps.
    """
    rep = Report(subject="path decomposition")
    for gi, X in enumerate(graphs):
        TX = free_category(X)
        for a in X.objects:
            for b in X.objects:
                paths = [p for p in TX.words(a, b, bound)]
                summands = []
                for n in range(bound + 1):
                    for mids in itertools.product(X.objects, repeat=max(n - 1, 0)):
                        seq = (a,) + mids + (b,) if n > 0 else (a,)
                        if n == 0 and a != b:
                            continue
                        factors = [X.hom(seq[i], seq[i + 1]) for i in range(n)]
                        for es in itertools.product(*factors):
                            summands.append((seq, es))
                images = [Path(a, b, es) for _, es in summands]
                rep.check("coproduct-cocone", len(set(images)) == len(images) and set(images) == set(paths),
                          (gi, a, b), f"{len(images)} summand elements vs {len(paths)} paths")
    for X, Y, h in morphisms:
        TX = free_category(X)
        for a in X.objects:
            for p in TX.words_from(a, bound):
                seq = (p.src,) + tuple(X.tgt(e) for e in p.word)
                image_seq = tuple(h["objects"][x] for x in seq)
                via_summand = (image_seq, tuple(h["edges"][e] for e in p.word))
                Tp = Path(h["objects"][p.src], h["objects"][p.tgt], tuple(h["edges"][e] for e in p.word))
                rebuilt = Path(image_seq[0], image_seq[-1], via_summand[1])
                rep.check("hom-map", Tp == rebuilt and tuple([Tp.src] + [Y.tgt(e) for e in Tp.word]) == image_seq,
                          (str(p),))
    return rep
