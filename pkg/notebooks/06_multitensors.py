# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
# ---

# %% [markdown]
# # Operads, multitensors and E-categories
#
# A non-symmetric operad E of sets gives a multitensor X1..Xn |-> E_n x X1 x ... x Xn.
# Categories enriched in it carry one composite per operation.  The operad for
# two monoid structures with a shared unit has 1, 1, 2 and 6 operations in
# arities 0 to 3.

# %%
from freeprod.multitensor import (EFunctor, coequalize_E_categories, multitensor_from_operad,
                                  operad_from_multitensor, operads_equal, two_monoid_ecategory,
                                  two_monoid_operad, validate_E_category)

O = two_monoid_operad(3)
print([len(O.elements(n)) for n in range(4)], O.validate().ok)
print("round trip:", operads_equal(operad_from_multitensor(multitensor_from_operad(O)), O))

# %% [markdown]
# Truncated addition and max on {0,1,2} form an E-category with one object.
# Coequalizing the identity with the doubling map identifies 1 and 2.

# %%
A = two_monoid_ecategory()
print(validate_E_category(A).ok)
ident = EFunctor(A, A, {"*": "*"}, {0: 0, 1: 1, 2: 2})
double = EFunctor(A, A, {"*": "*"}, {0: 0, 1: 2, 2: 2})
co = coequalize_E_categories(ident, double)
print(co.category.homs[("*", "*")], co.report.ok)
