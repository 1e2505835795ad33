"""Monads over Set, their algebras, and tensors and homs of algebras.

Two families ship.  Finite Set-monads (the R-module monad of a finite
commutative ring, and the identity monad) act on finite sets given as
tuples; an element of ``T X`` is a tuple aligned with ``T.carrier(X)``.
The category monad acts on finite graphs; its algebras are categories and
its tensor is built as a presented category equal up to a length bound.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from .errors import SizeLimitExceeded
from .fincat import (FinCategory, FinGraph, Move, Path, PresentedCategory, free_category, functors_between,
                     functors_from_presented, lift_path)
from .multicat import SymMulticategory
from .report import Report
from .vgraph import SetMap

CARRIER_LIMIT = 1_000_000
SAMPLE_NOTE = "sampled: elements of support at most 2"
ENTRY_BUDGET = 2_000_000

# ------------------------------------------------------------------ rings


@dataclass(frozen=True)
class FiniteCommRing:
    elements: tuple
    add: Mapping
    mul: Mapping
    zero: Any
    one: Any
    name: str = "R"

    def plus(self, a, b):
        return self.add[(a, b)]

    def times(self, a, b):
        return self.mul[(a, b)]

    def neg(self, a):
        return next(b for b in self.elements if self.add[(a, b)] == self.zero)

    def sum(self, xs: Iterable):
        acc = self.zero
        for x in xs:
            acc = self.add[(acc, x)]
        return acc

    def __hash__(self):
        return hash((self.name, self.elements))

    def validate(self) -> Report:
        rep = Report(subject=f"commutative ring {self.name}")
        E = self.elements
        for a in E:
            rep.check("additive-identity", self.plus(a, self.zero) == a, (a,))
            rep.check("multiplicative-identity", self.times(a, self.one) == a, (a,))
            rep.check("additive-inverse", any(self.plus(a, b) == self.zero for b in E), (a,))
            for b in E:
                rep.check("closure", self.plus(a, b) in E and self.times(a, b) in E, (a, b))
                rep.check("additive-commutativity", self.plus(a, b) == self.plus(b, a), (a, b))
                rep.check("multiplicative-commutativity", self.times(a, b) == self.times(b, a), (a, b))
                for c in E:
                    rep.check("additive-associativity",
                              self.plus(self.plus(a, b), c) == self.plus(a, self.plus(b, c)), (a, b, c))
                    rep.check("multiplicative-associativity",
                              self.times(self.times(a, b), c) == self.times(a, self.times(b, c)), (a, b, c))
                    rep.check("distributivity", self.times(a, self.plus(b, c)) ==
                              self.plus(self.times(a, b), self.times(a, c)), (a, b, c))
        return rep


def zmod(n: int) -> FiniteCommRing:
    E = tuple(range(n))
    return FiniteCommRing(E, {(a, b): (a + b) % n for a in E for b in E},
                          {(a, b): (a * b) % n for a in E for b in E}, 0, 1 % n, name=f"Z/{n}")


F2 = zmod(2)


# ------------------------------------------------------------ Set monads


class SetMonad:
    """A monad on finite sets with a symmetric monoidal coherence ``phi``."""

    name = "T"

    def carrier(self, X: tuple) -> tuple:
        raise NotImplementedError

    def unit(self, X: tuple, x):
        raise NotImplementedError

    def mult(self, X: tuple, Xi):
        raise NotImplementedError

    def fmap(self, f: SetMap, xi):
        raise NotImplementedError

    def phi(self, Xs: Sequence[tuple], xis: Sequence):
        raise NotImplementedError

    def carrier_size(self, X: tuple) -> int:
        return len(self.carrier(X))


class RModuleMonad(SetMonad):
    """Formal R-linear combinations; multiplication substitutes combinations."""

    def __init__(self, R: FiniteCommRing):
        self.R = R
        self.name = f"{R.name}-linear combinations"
        self._carriers = {}

    def carrier_size(self, X):
        return len(self.R.elements) ** len(X)

    def carrier(self, X):
        X = tuple(X)
        if X not in self._carriers:
            if self.carrier_size(X) > CARRIER_LIMIT:
                raise SizeLimitExceeded(f"T X has {self.carrier_size(X)} elements")
            self._carriers[X] = tuple(itertools.product(self.R.elements, repeat=len(X)))
        return self._carriers[X]

    def unit(self, X, x):
        R = self.R
        return tuple(R.one if y == x else R.zero for y in X)

    def mult(self, X, Xi):
        R = self.R
        TX = self.carrier(X)
        out = [R.zero] * len(X)
        for coeff, xi in zip(Xi, TX):
            if coeff == R.zero:
                continue
            for k, c in enumerate(xi):
                out[k] = R.plus(out[k], R.times(coeff, c))
        return tuple(out)

    def fmap(self, f: SetMap, xi):
        R = self.R
        pos = {y: k for k, y in enumerate(f.cod)}
        out = [R.zero] * len(f.cod)
        for x, c in zip(f.dom, xi):
            k = pos[f(x)]
            out[k] = R.plus(out[k], c)
        return tuple(out)

    def phi(self, Xs, xis):
        R = self.R
        out = []
        for coeffs in itertools.product(*xis):
            acc = R.one
            for c in coeffs:
                acc = R.times(acc, c)
            out.append(acc)
        return tuple(out)

    # linear-algebra helpers used by the tensor
    def add_vec(self, u, v):
        return tuple(self.R.plus(a, b) for a, b in zip(u, v))

    def scale_vec(self, c, u):
        return tuple(self.R.times(c, a) for a in u)


def rmodule_monad(R: FiniteCommRing) -> RModuleMonad:
    return RModuleMonad(R)


class IdentityMonad(SetMonad):
    name = "identity"

    def carrier(self, X):
        return tuple(X)

    def unit(self, X, x):
        return x

    def mult(self, X, Xi):
        return Xi

    def fmap(self, f, xi):
        return f(xi)

    def phi(self, Xs, xis):
        return tuple(xis)


def product_set(Xs: Sequence[tuple]) -> tuple:
    return tuple(itertools.product(*Xs))


def _sample_family(T: SetMonad, X: tuple, limit: int):
    """All of ``T X`` when small, else elements supported on at most two points.

    The family holds at most ``limit`` vectors and ``ENTRY_BUDGET`` entries
    in total; beyond that the supports are a fixed pseudo-random selection
    (seed 0).
    """
    if T.carrier_size(X) <= limit:
        return T.carrier(X), False
    inner = T
    while isinstance(inner, MutatedSetMonad):
        inner = inner.base
    if not isinstance(inner, RModuleMonad):
        raise SizeLimitExceeded("no sampling scheme for this monad")
    R = inner.R
    n = len(X)
    nz = [c for c in R.elements if c != R.zero]
    cap = max(len(nz) ** 2 + 1, min(limit, ENTRY_BUDGET // max(n, 1)))
    rng = random.Random(0)
    singles = list(range(n))
    if len(singles) * len(nz) > cap // 2:
        singles = sorted(rng.sample(singles, max(1, cap // (2 * len(nz)))))
    n_pairs = max(1, (cap // 2) // len(nz) ** 2)
    if n * (n - 1) // 2 <= n_pairs:
        pairs = list(itertools.combinations(range(n), 2))
    else:
        pairs = sorted({tuple(sorted(rng.sample(range(n), 2))) for _ in range(n_pairs)})
    out = [tuple([R.zero] * n)]
    for i in singles:
        for c in nz:
            v = [R.zero] * n
            v[i] = c
            out.append(tuple(v))
    for i, j in pairs:
        for c, d in itertools.product(nz, repeat=2):
            v = [R.zero] * n
            v[i], v[j] = c, d
            out.append(tuple(v))
    return tuple(out), True


def validate_set_monad(T: SetMonad, sets: Sequence[tuple], maps: Sequence[SetMap] = (),
                       limit: int = 5_000) -> Report:
    """Monad, naturality and monoidal-coherence laws on the given sets and maps.

    Laws quantifying over a carrier larger than ``limit`` are checked on
    the elements supported on at most two points; the report notes it.
    """
    rep = Report(subject=f"monad {T.name}")
    sampled = []
    for X in sets:
        TX = T.carrier(X)
        for x in X:
            rep.check("unit-type", T.unit(X, x) in set(TX), (X, x))
        for xi in TX:
            rep.check("left-unit", T.mult(X, T.unit(TX, xi)) == xi, (X, xi))
            rep.check("right-unit", T.mult(X, T.fmap(_unit_map(T, X), xi)) == xi, (X, xi))
        TTX = T.carrier(TX)
        mu = _mult_map(T, X)
        for Xi, v in zip(TTX, mu.images):
            rep.check("mult-type", v in set(TX), (X, Xi))
        fam, sampled_here = _sample_family(T, TTX, limit)
        if sampled_here:
            sampled.append(("associativity", X))
        for Th in fam:
            lhs = T.mult(X, T.mult(TX, Th))
            rhs = T.mult(X, T.fmap(mu, Th))
            rep.check("associativity", lhs == rhs, (X, Th))
        ident = SetMap(X, X, X)
        for xi in TX:
            rep.check("functor-identity", T.fmap(ident, xi) == xi, (X, xi))
    for f in maps:
        TX, TY = T.carrier(f.dom), T.carrier(f.cod)
        for x in f.dom:
            rep.check("unit-naturality", T.fmap(f, T.unit(f.dom, x)) == T.unit(f.cod, f(x)), (f, x))
        Tf = SetMap(TX, TY, tuple(T.fmap(f, xi) for xi in TX))
        TTX, s = _sample_family(T, TX, limit)
        if s:
            sampled.append(("mult-naturality", f.dom))
        for Xi in TTX:
            rep.check("mult-naturality", T.fmap(f, T.mult(f.dom, Xi)) == T.mult(f.cod, T.fmap(Tf, Xi)), (f, Xi))
        for g in maps:
            if g.dom == f.cod:
                fg = SetMap(f.dom, g.cod, tuple(g(f(x)) for x in f.dom))
                for xi in TX:
                    rep.check("functor-composition", T.fmap(g, T.fmap(f, xi)) == T.fmap(fg, xi), (f, g, xi))
    for X in sets:
        for Y in sets:
            P = product_set([X, Y])
            for x in X:
                for y in Y:
                    rep.check("phi-unit", T.phi([X, Y], [T.unit(X, x), T.unit(Y, y)]) == T.unit(P, (x, y)),
                              (X, Y, x, y))
            fam_x, sx = _sample_family(T, T.carrier(X), 64)
            fam_y, sy = _sample_family(T, T.carrier(Y), 64)
            if sx or sy:
                sampled.append(("phi-multiplication", (X, Y)))
            TP = T.carrier(P)
            phi_map = lambda pair, X=X, Y=Y: T.phi([X, Y], list(pair))
            for Xi in fam_x:
                for Yi in fam_y:
                    # phi (mu x mu) = mu T(phi) phi
                    lhs = T.phi([X, Y], [T.mult(X, Xi), T.mult(Y, Yi)])
                    inner = T.phi([T.carrier(X), T.carrier(Y)], [Xi, Yi])
                    pairs = product_set([T.carrier(X), T.carrier(Y)])
                    tphi = SetMap(pairs, TP, tuple(phi_map(p) for p in pairs))
                    rhs = T.mult(P, T.fmap(tphi, inner))
                    rep.check("phi-multiplication", lhs == rhs, (X, Y, Xi, Yi))
    one = ((),)
    rep.check("phi-nullary", T.phi([], []) == T.unit(one, ()), ())
    if sampled:
        rep.notes["sampled"] = [f"{law} on {X}" for law, X in sampled]
    return rep


def _unit_map(T, X):
    return SetMap(X, T.carrier(X), tuple(T.unit(X, x) for x in X))


def _mult_map(T, X):
    TTX = T.carrier(T.carrier(X))
    return SetMap(TTX, T.carrier(X), tuple(T.mult(X, Xi) for Xi in TTX))


class MutatedSetMonad(SetMonad):
    """A monad with one entry of unit, mult, fmap or phi overridden."""

    def __init__(self, base: SetMonad, op: str, key: tuple, value):
        self.base, self.op, self.key, self.value = base, op, key, value
        self.name = f"{base.name} (mutated {op})"

    def carrier(self, X):
        return self.base.carrier(X)

    def carrier_size(self, X):
        return self.base.carrier_size(X)

    def unit(self, X, x):
        if self.op == "unit" and (tuple(X), x) == self.key:
            return self.value
        return self.base.unit(X, x)

    def mult(self, X, Xi):
        if self.op == "mult" and (tuple(X), Xi) == self.key:
            return self.value
        return self.base.mult(X, Xi)

    def fmap(self, f, xi):
        if self.op == "fmap" and (f, xi) == self.key:
            return self.value
        return self.base.fmap(f, xi)

    def phi(self, Xs, xis):
        if self.op == "phi" and (tuple(map(tuple, Xs)), tuple(xis)) == self.key:
            return self.value
        return self.base.phi(Xs, xis)


# --------------------------------------------------------------- algebras


@dataclass
class TAlgebra:
    """A carrier with an action ``T carrier -> carrier`` (a callable on elements)."""

    monad: SetMonad
    carrier: tuple
    action: Callable
    name: str = ""

    def act(self, xi):
        return self.action(xi)

    def validate(self, limit: int = 5_000) -> Report:
        T, X = self.monad, self.carrier
        rep = Report(subject=f"algebra {self.name}".strip())
        for x in X:
            rep.check("unit", self.act(T.unit(X, x)) == x, (x,))
        TX = T.carrier(X)
        a_map = SetMap(TX, X, tuple(self.act(xi) for xi in TX))
        for xi, v in zip(TX, a_map.images):
            rep.check("typing", v in set(X), (xi,))
        fam, sampled = _sample_family(T, TX, limit)
        if sampled:
            rep.notes["associativity"] = SAMPLE_NOTE
        for Xi in fam:
            rep.check("associativity", self.act(T.fmap(a_map, Xi)) == self.act(T.mult(X, Xi)), (Xi,))
        return rep

    def table(self) -> dict:
        return {xi: self.act(xi) for xi in self.monad.carrier(self.carrier)}


def free_algebra(T: SetMonad, X: tuple, name="") -> TAlgebra:
    return TAlgebra(T, T.carrier(X), lambda Xi: T.mult(X, Xi), name or f"T{len(X)}")


def module_algebra(R: FiniteCommRing, elements, add: Mapping, scale: Mapping, zero, name="") -> TAlgebra:
    """An R-module as an algebra: ``xi`` acts as the sum of ``xi(x) * x``."""
    elements = tuple(elements)
    T = rmodule_monad(R)

    def action(xi):
        acc = zero
        for c, x in zip(xi, elements):
            acc = add[(acc, scale[(c, x)])]
        return acc

    alg = TAlgebra(T, elements, action, name)
    alg.module = (add, scale, zero)
    return alg


def free_module(R: FiniteCommRing, m: int, name="") -> TAlgebra:
    """``R^m`` with coordinatewise operations."""
    E = tuple(itertools.product(R.elements, repeat=m))
    add = {(u, v): tuple(R.plus(a, b) for a, b in zip(u, v)) for u in E for v in E}
    scale = {(c, u): tuple(R.times(c, a) for a in u) for c in R.elements for u in E}
    return module_algebra(R, E, add, scale, tuple([R.zero] * m), name or f"{R.name}^{m}")


def module_ops_from_algebra(A: TAlgebra) -> tuple[dict, dict]:
    """Recover addition and scalar multiplication from an R-module monad algebra."""
    T, X = A.monad, A.carrier
    R = T.R
    add = {}
    for x in X:
        for y in X:
            v = T.add_vec(T.unit(X, x), T.unit(X, y))
            add[(x, y)] = A.act(v)
    scale = {(c, x): A.act(T.scale_vec(c, T.unit(X, x))) for c in R.elements for x in X}
    return add, scale


def validate_module(R: FiniteCommRing, elements, add: Mapping, scale: Mapping) -> Report:
    rep = Report(subject="module")
    E = tuple(elements)
    zeros = [z for z in E if all(add.get((z, x)) == x for x in E)]
    rep.check("zero", len(zeros) >= 1, ())
    z = zeros[0] if zeros else None
    for x in E:
        rep.check("inverse", any(add.get((x, y)) == z for y in E), (x,))
        rep.check("unit-scalar", scale.get((R.one, x)) == x, (x,))
        for y in E:
            rep.check("closure", add.get((x, y)) in E, (x, y))
            rep.check("commutativity", add.get((x, y)) == add.get((y, x)), (x, y))
            for w in E:
                rep.check("associativity", add.get((add.get((x, y)), w)) == add.get((x, add.get((y, w)))), (x, y, w))
    for a in R.elements:
        for x in E:
            rep.check("closure", scale.get((a, x)) in E, (a, x))
            for b in R.elements:
                rep.check("scalar-associativity", scale.get((R.times(a, b), x)) == scale.get((a, scale.get((b, x)))),
                          (a, b, x))
                rep.check("scalar-distributivity", scale.get((R.plus(a, b), x)) ==
                          add.get((scale.get((a, x)), scale.get((b, x)))), (a, b, x))
            for y in E:
                rep.check("vector-distributivity", scale.get((a, add.get((x, y)))) ==
                          add.get((scale.get((a, x)), scale.get((a, y)))), (a, x, y))
    return rep


# --------------------------------------------------------------- multimaps


@dataclass(frozen=True)
class SetMultimap:
    """A function out of a product of finite sets; ``table`` aligned with the product."""

    doms: tuple  # algebra names
    cod: Any
    table: tuple


def _apply(table_map: dict, xs):
    return table_map[tuple(xs)]


def is_multi_algebra_map(f: Callable, As: Sequence[TAlgebra], B: TAlgebra, limit: int = 200_000) -> bool:
    """``b T(f) phi = f (a_i)_i`` on every tuple of elements of the ``T X_i``."""
    T = B.monad
    Xs = [A.carrier for A in As]
    P = product_set(Xs)
    fmap_ = SetMap(P, B.carrier, tuple(f(*p) for p in P))
    fams = [T.carrier(X) for X in Xs]
    total = 1
    for fam in fams:
        total *= len(fam)
    if total > limit:
        raise SizeLimitExceeded(f"global multi-algebra check needs {total} evaluations")
    for xis in itertools.product(*fams):
        lhs = B.act(T.fmap(fmap_, T.phi(Xs, list(xis))))
        rhs = f(*[A.act(xi) for A, xi in zip(As, xis)])
        if lhs != rhs:
            return False
    return True


def is_algebra_map_in_variable(f: Callable, As: Sequence[TAlgebra], B: TAlgebra, j: int) -> bool:
    """For every choice of the other arguments, ``f`` is an algebra map in argument j."""
    T = B.monad
    Xj = As[j].carrier
    others = [A.carrier for k, A in enumerate(As) if k != j]
    for z in itertools.product(*others):
        put = lambda x: z[:j] + (x,) + z[j:]
        g = SetMap(Xj, B.carrier, tuple(f(*put(x)) for x in Xj))
        for xi in T.carrier(Xj):
            if B.act(T.fmap(g, xi)) != g(As[j].act(xi)):
                return False
    return True


def is_algebra_map_in_each_variable(f, As, B) -> bool:
    return all(is_algebra_map_in_variable(f, As, B, j) for j in range(len(As)))


def algebra_maps(A: TAlgebra, B: TAlgebra, limit: int = 200_000) -> list[SetMap]:
    """All algebra maps, by brute force over functions under a size limit."""
    n = len(B.carrier) ** len(A.carrier)
    if n > limit:
        raise SizeLimitExceeded(f"{n} candidate functions")
    T = A.monad
    TX = T.carrier(A.carrier)
    act_a = [A.act(xi) for xi in TX]
    out = []
    for imgs in itertools.product(B.carrier, repeat=len(A.carrier)):
        g = SetMap(A.carrier, B.carrier, imgs)
        if all(B.act(T.fmap(g, xi)) == g(a) for xi, a in zip(TX, act_a)):
            out.append(g)
    return out


def linear_maps(A: TAlgebra, B: TAlgebra) -> list[SetMap]:
    """Algebra maps between R-module algebras, by images of a generating set."""
    T = A.monad
    R = T.R
    add_a, scale_a = module_ops_from_algebra(A)
    add_b, scale_b = module_ops_from_algebra(B)
    zero_a = A.act(tuple([R.zero] * len(A.carrier)))
    zero_b = B.act(tuple([R.zero] * len(B.carrier)))
    gens, span = [], {zero_a}
    for x in A.carrier:
        if x in span:
            continue
        gens.append(x)
        span = {add_a[(s, scale_a[(c, x)])] for s in span for c in R.elements}
    out = []
    for imgs in itertools.product(B.carrier, repeat=len(gens)):
        val = {zero_a: zero_b}
        ok = True
        for g, gi in zip(gens, imgs):
            new = {}
            for s, v in val.items():
                for c in R.elements:
                    t = add_a[(s, scale_a[(c, g)])]
                    w = add_b[(v, scale_b[(c, gi)])]
                    if new.get(t, w) != w or val.get(t, w) != w:
                        ok = False
                    new[t] = w
            val.update(new)
            if not ok:
                break
        if ok and len(val) == len(A.carrier):
            m = SetMap(A.carrier, B.carrier, tuple(val[x] for x in A.carrier))
            out.append(m)
    return [m for m in out if all(B.act(T.fmap(m, xi)) == m(A.act(xi))
                                  for xi in _sample_family(T, A.carrier, 4096)[0])]


class EMMulticategory(SymMulticategory):
    """Multimaps are multi-T-algebra morphisms between named algebras."""

    def __init__(self, T: SetMonad, algebras: Mapping[str, TAlgebra], global_limit: int = 20_000):
        self.T = T
        self.algebras = dict(algebras)
        self.objects = tuple(self.algebras)
        self.name = f"EM({T.name})"
        self.global_limit = global_limit
        self._homs = {}

    def _points(self, xs):
        return product_set([self.algebras[x].carrier for x in xs])

    def hom(self, xs, y):
        key = (tuple(xs), y)
        if key not in self._homs:
            self._homs[key] = self._enumerate(tuple(xs), y)
        return self._homs[key]

    def _enumerate(self, xs, y):
        As = [self.algebras[x] for x in xs]
        B = self.algebras[y]
        P = self._points(xs)
        if not xs:
            cands = [(b,) for b in B.carrier]
        else:
            # slices in the first variable must be algebra maps
            first = algebra_maps(As[0], B)
            rest = product_set([A.carrier for A in As[1:]])
            if len(first) ** len(rest) > self.size_limit:
                raise SizeLimitExceeded("too many candidate multimaps")
            cands = []
            X0 = As[0].carrier
            for choice in itertools.product(first, repeat=len(rest)):
                val = {(x,) + z: g(x) for z, g in zip(rest, choice) for x in X0}
                cands.append(tuple(val[p] for p in P))
        out = []
        for table in cands:
            f = _table_fn(P, table)
            total = 1
            for A in As:
                total *= self.T.carrier_size(A.carrier)
            ok = (is_multi_algebra_map(f, As, B) if total <= self.global_limit
                  else is_algebra_map_in_each_variable(f, As, B))
            if ok:
                out.append(SetMultimap(tuple(xs), y, table))
        return out

    def dom(self, f):
        return f.doms

    def cod(self, f):
        return f.cod

    def identity(self, x):
        return SetMultimap((x,), x, tuple(self.algebras[x].carrier))

    def compose(self, g, fs):
        fs = list(fs)
        dom = tuple(x for f in fs for x in f.doms)
        offs = list(itertools.accumulate([0] + [len(f.doms) for f in fs]))
        gt = dict(zip(self._points(g.doms), g.table))
        fts = [dict(zip(self._points(f.doms), f.table)) for f in fs]
        table = tuple(gt[tuple(fts[i][w[offs[i]:offs[i + 1]]] for i in range(len(fs)))]
                      for w in self._points(dom))
        return SetMultimap(dom, g.cod, table)

    def act(self, f, sigma):
        n = len(f.doms)
        new = tuple(f.doms[s] for s in sigma)
        ft = dict(zip(self._points(f.doms), f.table))
        out = []
        for u in self._points(new):
            v = [None] * n
            for i in range(n):
                v[sigma[i]] = u[i]
            out.append(ft[tuple(v)])
        return SetMultimap(new, f.cod, tuple(out))

    def forgetful(self, f: SetMultimap) -> Callable:
        """``U^T`` on multimaps: the underlying multifunction."""
        return _table_fn(self._points(f.doms), f.table)


def _table_fn(P, table):
    d = dict(zip(P, table))
    return lambda *xs: d[tuple(xs)]


def em_multicategory(T: SetMonad, algebras: Mapping[str, TAlgebra]) -> EMMulticategory:
    return EMMulticategory(T, algebras)


# ------------------------------------------------------ homs and tensors


def functions(X: tuple, Y: tuple, limit: int = CARRIER_LIMIT) -> tuple:
    if len(Y) ** len(X) > limit:
        raise SizeLimitExceeded(f"{len(Y) ** len(X)} functions")
    return tuple(itertools.product(Y, repeat=len(X)))


def pointwise_hom_algebra(X: tuple, B: TAlgebra) -> TAlgebra:
    """``[X, Y]`` with action ``y . T(rev) . phi . (1 x eta)`` transposed."""
    T = B.monad
    X, Y = tuple(X), B.carrier
    H = functions(X, Y)
    HX = product_set([H, X])
    rev = SetMap(HX, Y, tuple(f[X.index(x)] for f, x in HX))

    def action(Xi):
        return tuple(B.act(T.fmap(rev, T.phi([H, X], [Xi, T.unit(X, x)]))) for x in X)

    return TAlgebra(T, H, action, name=f"[{len(X)},{B.name}]")


def t_hom_strength(T: SetMonad, X: tuple, Y: tuple) -> SetMap:
    """``T_{X,Y} : [X, Y] -> [TX, TY]``, a function sent to its image under T."""
    H = functions(X, Y)
    TX = T.carrier(X)
    imgs = []
    for f in H:
        g = SetMap(tuple(X), tuple(Y), f)
        imgs.append(tuple(T.fmap(g, xi) for xi in TX))
    return SetMap(H, None, tuple(imgs))


def hom_algebras(A: TAlgebra, B: TAlgebra) -> TAlgebra:
    """Equalizer of ``[a, 1]`` and ``[1, b] T_{X,Y}`` with the induced pointwise action."""
    T = A.monad
    X, Y = A.carrier, B.carrier
    TX = T.carrier(X)
    act_a = [A.act(xi) for xi in TX]
    pw = pointwise_hom_algebra(X, B)
    strength = t_hom_strength(T, X, Y)
    keep = []
    for f, Tf in zip(pw.carrier, strength.images):
        lhs = tuple(f[X.index(a)] for a in act_a)  # [a, 1] f = f . a
        rhs = tuple(B.act(v) for v in Tf)  # [1, b] T_{X,Y} f = b . Tf
        if lhs == rhs:
            keep.append(f)
    keep = tuple(keep)
    # phi(xi, eta x) pushed along evaluation is T(ev_x)(xi), so the restricted
    # pointwise action only needs the evaluation maps on the kept functions
    evals = [SetMap(keep, Y, tuple(f[k] for f in keep)) for k in range(len(X))]

    def action(Xi):
        return tuple(B.act(T.fmap(ev, Xi)) for ev in evals)

    if isinstance(T, IdentityMonad):
        return TAlgebra(T, keep, lambda f: f, name=f"[{A.name},{B.name}]")
    return TAlgebra(T, keep, action, name=f"[{A.name},{B.name}]")


@dataclass
class TensorResult:
    algebra: Any
    universal: Callable  # the universal multimap on carrier elements
    relation_count: int = 0
    reflexive_ok: bool = True
    exhausted: bool = False
    truncated: bool = False
    notes: dict = field(default_factory=dict)


def tensor_algebras(algebras: Sequence[TAlgebra]) -> TensorResult:
    """Coequalizer of ``T(prod a_i)`` and ``mu T(phi)`` computed in the category of algebras."""
    if not algebras:
        raise ValueError("use unit_algebra for the nullary tensor")
    T = algebras[0].monad
    if isinstance(T, IdentityMonad):
        P = product_set([A.carrier for A in algebras])
        return TensorResult(TAlgebra(T, P, lambda x: x, "product"), lambda *xs: tuple(xs))
    if not isinstance(T, RModuleMonad):
        raise NotImplementedError(f"no coequalizer routine for {T.name}")
    R = T.R
    Xs = [A.carrier for A in algebras]
    P = product_set(Xs)
    TP = T.carrier(P)
    gens = []
    reflex = True
    for s in itertools.product(*[T.carrier(X) for X in Xs]):
        d0 = T.unit(P, tuple(A.act(si) for A, si in zip(algebras, s)))
        d1 = T.phi(Xs, list(s))
        gens.append(T.add_vec(d0, T.scale_vec(R.neg(R.one), d1)))
    # reflexive pair: T(prod eta) is a common section of both maps
    for p in P[:16]:
        s = [T.unit(X, x) for X, x in zip(Xs, p)]
        reflex &= T.unit(P, tuple(A.act(si) for A, si in zip(algebras, s))) == T.phi(Xs, s) == T.unit(P, p)
    zero = tuple([R.zero] * len(P))
    S = {zero}
    for g in gens:
        if g in S:
            continue
        S = {T.add_vec(s, T.scale_vec(c, g)) for s in S for c in R.elements}
    cls = {}
    reps = []
    for v in TP:
        if v in cls:
            continue
        k = len(reps)
        reps.append(v)
        for s in S:
            cls[T.add_vec(v, s)] = k
    carrier = tuple(reps)

    def action(Xi):
        acc = zero
        for c, r in zip(Xi, carrier):
            if c != R.zero:
                acc = T.add_vec(acc, T.scale_vec(c, r))
        return reps[cls[acc]]

    Q = TAlgebra(T, carrier, action, name="(x)".join(A.name for A in algebras))

    def q(*xs):
        return reps[cls[T.unit(P, tuple(xs))]]

    return TensorResult(Q, q, relation_count=len(gens), reflexive_ok=reflex,
                        notes={"submodule_size": len(S)})


def unit_algebra(T: SetMonad) -> TAlgebra:
    """The nullary tensor: the free algebra on a point."""
    return free_algebra(T, ((),), name="unit")


# ----------------------------------------------------------- category monad


@dataclass
class CategoryMonad:
    """Free categories on finite graphs; paths are morphisms."""

    name: str = "category monad"

    def T(self, X: FinGraph) -> PresentedCategory:
        return free_category(X)

    def eta(self, X: FinGraph, e) -> Path:
        return Path(X.src(e), X.tgt(e), (e,))

    def mu(self, obj, paths: Sequence[Path]) -> Path:
        out = Path(obj, obj, ())
        for p in paths:
            out = out.then(p)
        return out

    def phi(self, j: int, ctx: tuple, p: Path) -> Path:
        """A path in factor j, other coordinates fixed, as a path of moves."""
        return lift_path(j, ctx, p)

    def T0(self) -> PresentedCategory:
        return free_category(FinGraph(("*",), ()))

    def validate(self, graphs: Sequence[FinGraph], bound: int = 3) -> Report:
        rep = Report(subject="category monad")
        for X in graphs:
            TX = self.T(X)
            for a in X.objects:
                for p in TX.words_from(a, bound):
                    rep.check("left-unit", self.mu(p.src, [self.eta(X, e) for e in p.word]) == p, (p,))
                    rep.check("right-unit", self.mu(p.src, [p]) == p, (p,))
                    for cut in range(len(p.word) + 1):
                        l, r = Path(p.src, _mid(X, p, cut), p.word[:cut]), Path(_mid(X, p, cut), p.tgt, p.word[cut:])
                        rep.check("associativity", self.mu(p.src, [self.mu(p.src, [l]), r]) ==
                                  self.mu(p.src, [l, self.mu(l.tgt, [r])]), (p, cut))
        return rep


def _mid(X, p, cut):
    return p.src if cut == 0 else X.tgt(p.word[cut - 1])


def category_monad() -> CategoryMonad:
    return CategoryMonad()


def is_terminal_category(p: PresentedCategory, bound: int) -> bool:
    return len(p.objects) == 1 and len(p.hom(p.objects[0], p.objects[0], bound)) == 1


class CatAlgebra:
    """A category as an algebra of the category monad (action = composition).

    Wraps a :class:`FinCategory` or a :class:`PresentedCategory` plus a bound;
    morphisms of the latter are canonical paths.
    """

    def __init__(self, cat, bound: int | None = None, name: str | None = None):
        self.cat = cat
        self.bound = bound
        self.name = name or getattr(cat, "name", None) or "A"
        self.finite = isinstance(cat, FinCategory)

    @property
    def objects(self):
        return self.cat.objects

    def morphisms(self) -> list:
        if self.finite:
            return list(self.cat.morphisms)
        return [r for a in self.objects for b in self.objects for r in self.cat.hom(a, b, self.bound)]

    def src(self, f):
        return self.cat.src(f) if self.finite else f.src

    def tgt(self, f):
        return self.cat.tgt(f) if self.finite else f.tgt

    def is_identity(self, f) -> bool:
        return self.cat.is_identity(f) if self.finite else f.is_identity

    def identity(self, a):
        return self.cat.identities[a] if self.finite else self.cat.canonical(self.cat.identity(a), self.bound)

    def then(self, f, g):
        """Composite, or None when it cannot be decided within the bound."""
        if self.finite:
            return self.cat.then(f, g)
        p = f.then(g)
        if len(p) > self.bound:
            return None
        return self.cat.canonical(p, self.bound)


def tensor_categories(cats: Sequence, bound: int, gen_bound: int | None = None) -> TensorResult:
    """The coequalizer tensor of categories as a presented category.

    Generators are ``(z|r)`` for non-identity morphisms ``r`` of one factor
    (``Move`` values); relations say ``(z|r)(z|s) = (z|r;s)``, with the right
    side empty when ``r;s`` is an identity.  Identity generators are
    eliminated up front.  For presented factors only morphisms with a
    representative of length ≤ ``gen_bound`` become generators, and a
    relation whose composite has no such representative is dropped
    (``truncated``).
    """
    algs = [c if isinstance(c, CatAlgebra) else CatAlgebra(c, gen_bound or bound) for c in cats]
    objects = list(itertools.product(*[A.objects for A in algs]))
    edges, rels = [], []
    truncated = False
    gen_sets = []
    for j, A in enumerate(algs):
        mors = [m for m in A.morphisms() if not A.is_identity(m)]
        gen_sets.append(set(mors))
        ctxs = list(itertools.product(*[B.objects if i != j else (None,) for i, B in enumerate(algs)]))
        for ctx in ctxs:
            for r in mors:
                mv = Move(j, ctx[:j] + (r,) + ctx[j + 1:])
                edges.append((mv, mv.context(A.src(r)), mv.context(A.tgt(r))))
        for r in mors:
            for s in mors:
                if A.tgt(r) != A.src(s):
                    continue
                c = A.then(r, s)
                if c is None or (not A.is_identity(c) and c not in gen_sets[j]):
                    truncated = True
                    continue
                for ctx in ctxs:
                    put = lambda x: ctx[:j] + (x,) + ctx[j + 1:]
                    a, b = put(A.src(r)), put(A.tgt(s))
                    lhs = Path(a, b, (Move(j, put(r)), Move(j, put(s))))
                    rhs = Path(a, b, () if A.is_identity(c) else (Move(j, put(c)),))
                    rels.append((lhs, rhs))
    graph = FinGraph(objects, edges)
    P = PresentedCategory(graph, rels, bound=bound, name="(x)".join(str(A.name) for A in algs))
    P.factors = tuple(algs)

    def q(j, ctx, r) -> Path:
        A = algs[j]
        put = lambda x: tuple(ctx[:j]) + (x,) + tuple(ctx[j:])
        if A.is_identity(r):
            o = put(A.src(r))
            return Path(o, o, ())
        return Path(put(A.src(r)), put(A.tgt(r)), (Move(j, put(r)),))

    return TensorResult(P, q, relation_count=len(rels), truncated=truncated,
                        notes={"generators": len(edges), "bound": bound})


def category_multimaps(As: Sequence[FinCategory], C: FinCategory) -> list:
    """Multimaps of the category-algebra multicategory: separately functorial data.

    Returned as ``(object_map, parts)`` with parts keyed by ``(i, z)``.
    """
    As = list(As)
    objs = list(itertools.product(*[A.objects for A in As]))
    out = []
    for imgs in itertools.product(C.objects, repeat=len(objs)):
        om = dict(zip(objs, imgs))
        slots = []
        for j, A in enumerate(As):
            for z in itertools.product(*[B.objects for i, B in enumerate(As) if i != j]):
                put = lambda o: z[:j] + (o,) + z[j:]
                fo = {o: om[put(o)] for o in A.objects}
                fs = []
                for pm in functors_from_presented(A.presentation, C, [fo]):
                    fs.append(pm)
                slots.append(((j, z), fs))
                if not fs:
                    break
            if slots and not slots[-1][1]:
                break
        if any(not fs for _, fs in slots):
            continue
        for choice in itertools.product(*[fs for _, fs in slots]):
            out.append((om, {key: pm for (key, _), pm in zip(slots, choice)}))
    return out


def hom_categories(A: FinCategory, B: FinCategory) -> FinCategory:
    """Internal hom for the funny tensor: functors and unnatural transformations.

    Objects are the graph morphisms equalized by ``[a, 1]`` and
    ``[1, b] T``, which are exactly the functors.  On edges both maps return
    the same components, so every family of components survives.
    """
    functors = list(functors_between(A, B))
    names = {F._key: F for F in functors}
    keys = list(names)
    mors, comp = {}, {}
    for k1 in keys:
        F = names[k1]
        for k2 in keys:
            G = names[k2]
            for comps in itertools.product(*[B.hom(F.obj_map[a], G.obj_map[a]) for a in A.objects]):
                mors[(k1, k2, comps)] = (k1, k2)
    ids = {k: (k, k, tuple(B.identities[names[k].obj_map[a]] for a in A.objects)) for k in keys}
    for m1, (s, t) in mors.items():
        for m2, (s2, t2) in mors.items():
            if t == s2:
                comp[(m1, m2)] = (s, t2, tuple(B.then(x, y) for x, y in zip(m1[2], m2[2])))
    out = FinCategory(keys, mors, ids, comp, name=f"[{A.name},{B.name}]")
    out.functors = names
    return out
