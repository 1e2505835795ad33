# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
# ---

# %% [markdown]
# # Comparing the free and the cartesian product
#
# The category monad sends the empty graph to the terminal category, so there
# is an identity-on-objects comparison kappa from A□B to AxB.  It forgets the
# order of moves.

# %%
from freeprod.catalog import cyclic_group, walking_arrow
from freeprod.comparison import is_well_pointed, kappa, kappa_on_classes
from freeprod.monads import category_monad, tensor_categories

print("well pointed:", is_well_pointed(category_monad()))
t = tensor_categories([walking_arrow(), walking_arrow()], 4)
for path, image in kappa_on_classes(kappa(t), ("0", "0"), ("1", "1"), 4).items():
    print(path, "->", image)

# %% [markdown]
# On Z/2□Z/2 the words of length at most 6 land on all four elements of the
# Klein group.

# %%
t = tensor_categories([cyclic_group(2), cyclic_group(2)], 6)
o = t.algebra.objects[0]
images = kappa_on_classes(kappa(t), o, o, 6)
print(len(images), "classes onto", sorted(set(images.values())))

# %% [markdown]
# Naturality squares of the graph-level comparison are pullbacks, checked hom
# by hom as a bijection onto the fiber product.

# %%
from freeprod.comparison import check_cartesian_naturality, graph_morphisms, kappa_tilde_square
from freeprod.fincat import FinGraph

X = FinGraph(["0", "1"], [("f", "0", "1")])
L = FinGraph(["*"], [("l", "*", "*")])
squares = [kappa_tilde_square([X, X], [L, L], [h, k]) for h in graph_morphisms(X, L) for k in graph_morphisms(X, L)]
print(check_cartesian_naturality(squares).ok)
