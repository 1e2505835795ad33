# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
# ---

# %% [markdown]
# # Closed symmetric multicategories
#
# A monoidal category gives a multicategory whose multimaps are maps out of
# a tensor.  In a closed one every universal multimap is already strongly
# universal, i.e. universal in every context.

# %%
from freeprod.multicat import (UV_from_monoidal, closed_examples, find_closed_structure, is_strongly_universal,
                               is_universal)

for V in closed_examples():
    X = UV_from_monoidal(V)
    closed = find_closed_structure(X) is not None
    universal = [f for xs in X.sequences(2) for y in X.objects for f in X.hom(xs, y) if is_universal(X, f)]
    strong = all(is_strongly_universal(X, f, context_arity=2) for f in universal)
    print(f"{V.name:10} closed={closed} universal={len(universal):2} all strong={strong}")

# %% [markdown]
# Max on a three-element chain is monoidal but not closed.

# %%
from freeprod.multicat import thin_monoidal

V = thin_monoidal([0, 1, 2], lambda a, b: a <= b, max, 0, "max")
print(find_closed_structure(UV_from_monoidal(V)))
