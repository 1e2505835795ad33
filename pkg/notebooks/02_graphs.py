# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
# ---

# %% [markdown]
# # Free products of enriched graphs
#
# For Set-graphs the free product X□Y has pairs as objects; its edges are an
# edge of X beside an object of Y or the other way round.  It represents
# multimaps and has a right adjoint [Y, -] whose edges are unnatural
# transformations.

# %%
from freeprod.vgraph import (VGraph, count_morphisms, count_morphisms_into_hom, count_multimaps,
                             free_product_graphs, graph_hom)

arrow = VGraph.from_edges(["a", "b"], [("x", "a", "b")], name="A")
loop = VGraph.from_edges(["*"], [("l", "*", "*")], name="L")
cycle = VGraph.from_edges(["p", "q"], [("u", "p", "q"), ("v", "q", "p")], name="C")
lollipop = VGraph.from_edges(["p", "q"], [("s", "p", "p"), ("u", "p", "q"), ("t", "q", "q")], name="P")
double = VGraph.from_edges(["*"], [("l", "*", "*"), ("m", "*", "*")], name="LL")

T, alpha = free_product_graphs([arrow, loop])
for (s, t), h in T.homs.items():
    if h:
        print(s, "->", t, h)

# %% [markdown]
# Three counts that must agree: morphisms out of the tensor, multimaps, and
# morphisms into the internal hom.  The tensor has loops, so targets need
# loops to receive anything.

# %%
for C in (arrow, loop, cycle, lollipop, double):
    print(C.name, count_morphisms(T, C), count_multimaps([arrow, loop], C),
          count_morphisms_into_hom(arrow, loop, C))

# %%
H = graph_hom(arrow, cycle)
print(len(H.objects), "objects,", H.edge_count(), "edges in [A, C]")
