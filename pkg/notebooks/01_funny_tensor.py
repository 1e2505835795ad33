# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
# ---

# %% [markdown]
# # The funny tensor of finitely presented categories
#
# Objects of A□B are pairs; a morphism is a word of moves, each move acting on
# one coordinate while the other stays fixed.  Nothing makes moves in different
# coordinates commute, so the two routes around a square stay distinct.

# %%
from freeprod.catalog import arrow_graph, free_on, involution, walking_arrow
from freeprod.comparison import pushout_formula_tensor
from freeprod.fincat import PresentedCategory, funny_tensor, product_category

A = free_on(arrow_graph())
P = funny_tensor([A, A])
diagonals = P.hom(("0", "0"), ("1", "1"), 4)
for p in diagonals:
    print(p)

# %% [markdown]
# The cartesian product has a single diagonal instead.

# %%
prod, _ = product_category([walking_arrow(), walking_arrow()])
print(len(diagonals), "funny diagonals vs", len(prod.hom(("0", "0"), ("1", "1"))), "in the product")

# %% [markdown]
# The same hom computed from a gluing of product categories agrees.

# %%
po = pushout_formula_tensor([walking_arrow(), walking_arrow()], 4)
print(len(po.hom(("0", "0"), ("1", "1"), 4)))

# %% [markdown]
# For one-object categories the funny tensor is the free product of monoids.
# Z/2 * Z/2 has 2k+1 elements of word length at most k.  Normal forms and a
# bounded congruence closure give the same counts.

# %%
Z = funny_tensor([involution(), involution()])
o = Z.objects[0]
closure = PresentedCategory(Z.graph, Z.relations)
for k in range(1, 6):
    words = list(Z.words(o, o, k))
    print(k, len({Z.normalize(w) for w in words}), len({closure.canonical(w, 2 * k + 2) for w in words}))
