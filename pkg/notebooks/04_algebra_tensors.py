# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
# ---

# %% [markdown]
# # Tensor products of monad algebras
#
# For a commutative monad the tensor of algebras is a coequalizer of free
# algebras.  Over the F2-module monad it recovers the usual tensor of vector
# spaces; over the category monad it recovers the funny tensor.

# %%
import numpy as np

from freeprod.monads import F2, EMMulticategory, free_module, rmodule_monad, tensor_algebras

sizes = np.zeros((2, 2), dtype=int)
for m in (1, 2):
    for n in (1, 2):
        sizes[m - 1, n - 1] = len(tensor_algebras([free_module(F2, m), free_module(F2, n)]).algebra.carrier)
print(sizes)

# %% [markdown]
# Maps out of the tensor into F2 are exactly the bilinear maps.

# %%
A, B, L = free_module(F2, 2), free_module(F2, 2), free_module(F2, 1)
em = EMMulticategory(rmodule_monad(F2), {"A": A, "B": B, "L": L})
print(len(em.hom(("A", "B"), "L")), "bilinear forms on F2^2 x F2^2")

# %%
from freeprod.catalog import walking_arrow
from freeprod.monads import tensor_categories

t = tensor_categories([walking_arrow(), walking_arrow()], 4)
print(len(t.algebra.hom(("0", "0"), ("1", "1"), 4)), "diagonals in the category tensor")
