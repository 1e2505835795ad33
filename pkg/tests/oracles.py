"""Independent brute-force oracles.

None of these import the package's algorithms; they recompute the same
quantities from first principles so tests compare two unrelated routes.
"""
from __future__ import annotations

import itertools

import numpy as np


# --------------------------------------------------------------- words


def reduced_alternating_words(k: int, letters=("a", "b")) -> set:
    """Distinct elements of Z/2 * Z/2 reachable by words of length ≤ k.

    Each letter is an involution, so a word reduces by cancelling equal
    neighbours with a stack.
    """
    out = set()
    for n in range(k + 1):
        for w in itertools.product(letters, repeat=n):
            stack = []
            for x in w:
                if stack and stack[-1] == x:
                    stack.pop()
                else:
                    stack.append(x)
            out.add(tuple(stack))
    return out


def funny_arrow_paths(n: int) -> set:
    """Paths (0,..,0) -> (1,..,1) in the n-fold funny tensor of the walking arrow.

    A path moves one coordinate at a time; with no relations beyond
    identities the distinct morphisms are the orders of the n moves.
    """
    return set(itertools.permutations(range(n)))


# ------------------------------------------------------------- graphs

# A graph here is (objects, edges) with edges a list of (label, src, tgt).


def small_graphs_up_to_iso(max_objects: int, max_edges: int, max_parallel: int | None = None) -> list:
    """One representative per isomorphism class of graphs with 1..max_objects objects.

    Edges form a multiset over ordered pairs (loops allowed); canonical form is
    the least sorted edge multiset over all relabellings of the objects.
    """
    out = []
    for n in range(1, max_objects + 1):
        objs = list(range(n))
        pairs = list(itertools.product(objs, repeat=2))
        seen = set()
        for m in range(max_edges + 1):
            for ms in itertools.combinations_with_replacement(pairs, m):
                if max_parallel is not None and any(ms.count(p) > max_parallel for p in set(ms)):
                    continue
                canon = min(tuple(sorted((pi[a], pi[b]) for a, b in ms))
                            for pi in itertools.permutations(objs))
                if canon in seen:
                    continue
                seen.add(canon)
                names = [f"v{i}" for i in objs]
                out.append((names, [(f"e{k}", names[a], names[b]) for k, (a, b) in enumerate(canon)]))
    return out


def brute_graph_morphisms(X, Y) -> int:
    xo, xe = X
    yo, ye = Y
    total = 0
    for om in itertools.product(yo, repeat=len(xo)):
        m = dict(zip(xo, om))
        n = 1
        for _, s, t in xe:
            n *= sum(1 for _, s2, t2 in ye if s2 == m[s] and t2 == m[t])
        total += n
    return total


def brute_free_product(X, Y):
    """Objects pairs; an edge moves one coordinate along an edge of that factor."""
    xo, xe = X
    yo, ye = Y
    objs = [(a, b) for a in xo for b in yo]
    edges = [(("L", e, b), (s, b), (t, b)) for e, s, t in xe for b in yo]
    edges += [(("R", a, e), (a, s), (a, t)) for e, s, t in ye for a in xo]
    return objs, edges


def brute_multimaps(X, Y, C) -> int:
    """Object map on pairs plus, for each fixed coordinate, an edge assignment."""
    xo, xe = X
    yo, ye = Y
    co, ce = C
    total = 0
    for om in itertools.product(co, repeat=len(xo) * len(yo)):
        m = dict(zip([(a, b) for a in xo for b in yo], om))
        n = 1
        for e, s, t in xe:
            for b in yo:
                n *= sum(1 for _, s2, t2 in ce if (s2, t2) == (m[(s, b)], m[(t, b)]))
        for e, s, t in ye:
            for a in xo:
                n *= sum(1 for _, s2, t2 in ce if (s2, t2) == (m[(a, s)], m[(a, t)]))
        total += n
    return total


def brute_hom_graph_morphisms(A, B, C) -> int:
    """|Mor(A, [B, C])| where [B, C] has graph morphisms as objects and
    transformations (edge families, no naturality) as edges.

    Objects of [B, C] sharing an object map have the same homs, so they are
    grouped with a multiplicity and the sum over object assignments of A is a
    tensor contraction.
    """
    bo, be = B
    co, ce = C
    ao, ae = A
    cnt = {(s, t): 0 for s in co for t in co}
    for _, s, t in ce:
        cnt[(s, t)] += 1
    omaps, weight = [], []
    for om in itertools.product(co, repeat=len(bo)):
        m = dict(zip(bo, om))
        w = 1
        for _, s, t in be:
            w *= cnt[(m[s], m[t])]
        if w:
            omaps.append(m)
            weight.append(w)
    K = len(omaps)
    if K == 0:
        return 0 if ao else 1
    H = np.array([[int(np.prod([cnt[(f[b], g[b])] for b in bo])) for g in omaps] for f in omaps], dtype=np.int64)
    letters = "abcdefghij"
    idx = {a: letters[i] for i, a in enumerate(ao)}
    subs = [idx[a] for a in ao] + [idx[s] + idx[t] for _, s, t in ae]
    ops = [np.array(weight, dtype=np.int64)] * len(ao) + [H] * len(ae)
    return int(np.einsum(",".join(subs) + "->", *ops))


def fiber_product_size(Q, R, f, g) -> int:
    return sum(1 for q in Q for r in R if f(q) == g(r))


# ------------------------------------------------------- linear algebra


def f2_vectors(m: int) -> np.ndarray:
    return np.array(list(itertools.product([0, 1], repeat=m)), dtype=np.int64).reshape(-1, m)


def count_bilinear_f2(m: int, n: int) -> int:
    """Number of F2-bilinear maps F2^m x F2^n -> F2 among all 2^(2^(m+n)) functions."""
    U, V = f2_vectors(m), f2_vectors(n)
    nu, nv = len(U), len(V)
    # every function is a 0/1 table of shape (nu, nv); enumerate them as integers
    N = nu * nv
    tables = ((np.arange(2 ** N, dtype=np.int64)[:, None] >> np.arange(N)) & 1).reshape(-1, nu, nv)
    idx_u = {tuple(u): i for i, u in enumerate(U)}
    idx_v = {tuple(v): i for i, v in enumerate(V)}
    ok = np.ones(len(tables), dtype=bool)
    for i, u in enumerate(U):
        for i2, u2 in enumerate(U):
            s = idx_u[tuple((u + u2) % 2)]
            ok &= ((tables[:, i, :] + tables[:, i2, :]) % 2 == tables[:, s, :]).all(axis=1)
    for j, v in enumerate(V):
        for j2, v2 in enumerate(V):
            s = idx_v[tuple((v + v2) % 2)]
            ok &= ((tables[:, :, j] + tables[:, :, j2]) % 2 == tables[:, :, s]).all(axis=1)
    return int(ok.sum())


def count_linear_f2(m: int, n: int) -> int:
    """F2-linear maps F2^m -> F2^n: all n x m matrices."""
    return 2 ** (m * n)


# ----------------------------------------------------------- categories


def brute_functor_count(C_objs, C_mors, C_comp, C_ids, D_objs, D_mors, D_comp, D_ids) -> int:
    """Functors between table-given categories: all assignments preserving identities and composition."""
    cm = list(C_mors)
    total = 0
    for om in itertools.product(D_objs, repeat=len(C_objs)):
        o = dict(zip(C_objs, om))
        choices = [[g for g, (s, t) in D_mors.items() if (s, t) == (o[C_mors[f][0]], o[C_mors[f][1]])] for f in cm]
        for imgs in itertools.product(*choices):
            F = dict(zip(cm, imgs))
            if any(F[C_ids[x]] != D_ids[o[x]] for x in C_objs):
                continue
            if all(D_comp[(F[f], F[g])] == F[h] for (f, g), h in C_comp.items()):
                total += 1
    return total
