"""Small named categories and graphs used in examples and tests."""
from __future__ import annotations

import itertools

from .fincat import FinCategory, FinGraph, Path, PresentedCategory, free_category


def walking_arrow(a="0", b="1", f="f") -> FinCategory:
    ida, idb = f"id{a}", f"id{b}"
    comp = {(ida, ida): ida, (idb, idb): idb, (ida, f): f, (f, idb): f}
    return FinCategory([a, b], {ida: (a, a), idb: (b, b), f: (a, b)},
                       {a: ida, b: idb}, comp, name="2")


def arrow_graph(a="0", b="1", f="f") -> FinGraph:
    return FinGraph([a, b], [(f, a, b)])


def loop_graph(n_loops=1, obj="*") -> FinGraph:
    return FinGraph([obj], [(f"x{i}" if n_loops > 1 else "x", obj, obj) for i in range(n_loops)])


def monoid_category(elements, unit, mul, obj="*", name=None) -> FinCategory:
    """A one-object category from a monoid given by ``mul(x, y)`` (x then y)."""
    elements = list(elements)
    return FinCategory([obj], {e: (obj, obj) for e in elements}, {obj: unit},
                       {(x, y): mul(x, y) for x in elements for y in elements}, name=name)


def cyclic_group(n: int, obj="*") -> FinCategory:
    elems = [f"g{i}" if i else "e" for i in range(n)]
    idx = {e: i for i, e in enumerate(elems)}
    return monoid_category(elems, "e", lambda x, y: elems[(idx[x] + idx[y]) % n], obj, name=f"Z/{n}")


def involution(gen="a", obj="*") -> PresentedCategory:
    """One object, one generator ``a`` with ``a;a = id``; normal forms are ε and a."""
    g = FinGraph([obj], [(gen, obj, obj)])
    rel = (Path(obj, obj, (gen, gen)), Path(obj, obj, ()))

    def normalize(p):
        return Path(obj, obj, (gen,) * (len(p.word) % 2))

    return PresentedCategory(g, [rel], normalizer=normalize, name=f"<{gen}|{gen}{gen}=1>")


def endofunction_monoid(n: int, obj="*") -> FinCategory:
    """All functions on ``range(n)`` composed diagrammatically."""
    funcs = list(itertools.product(range(n), repeat=n))
    ident = tuple(range(n))
    return monoid_category(funcs, ident, lambda f, g: tuple(g[f[i]] for i in range(n)), obj,
                           name=f"End({n})")


def chain_category(n: int) -> FinCategory:
    """The poset 0 < 1 < ... < n-1 as a category; morphisms are pairs (i, j)."""
    objs = list(range(n))
    mors = {(i, j): (i, j) for i in objs for j in objs if i <= j}
    return FinCategory(objs, mors, {i: (i, i) for i in objs},
                       {((i, j), (j2, k)): (i, k) for (i, j) in mors for (j2, k) in mors if j == j2},
                       name=f"[{n}]")


def free_on(graph: FinGraph, name=None) -> PresentedCategory:
    return free_category(graph, name=name)
