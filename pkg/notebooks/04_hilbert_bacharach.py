# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Hilbert functions of node sets
#
# h_X(k) counts the independent conditions a finite set X imposes on forms of
# degree k.  For the nodes X of a cage split as X1 + X2 it satisfies
#
#     h_X(k) - h_X1(k) = |X2| - h_X2(d + e - 3 - k).

# %%
from cagezoo import hilbert, random_cage
from cagezoo.nodesets import NodeSet, full_grid
from cagezoo.theorems import bacharach, random_partition

# %%
cage = random_cage(4, 3, seed=5)
nodes = cage.all_nodes()
print("h_X(k), k = 0..6:", [hilbert(nodes, k) for k in range(7)])

# %% [markdown]
# The function climbs until it reaches |X| = 12 and then stays there.

# %%
X1 = random_partition(4, 3, seed=2)
rep = bacharach(cage, X1)
print("X1 =", sorted(X1.members))
print(" k  h_X  h_X1  lhs  rhs")
for r in rep.records:
    print(f"{r.k:2d} {r.h_X:4d} {r.h_X1:5d} {r.lhs:4d} {r.rhs:4d}")

# %% [markdown]
# With X2 a single node of a 3x3 cage and k = 3, the right side is 1 - 1 = 0:
# cubics through eight nodes automatically contain the ninth.

# %%
small = random_cage(3, 3, seed=0)
rest = NodeSet(3, 3, full_grid(3, 3).members - {(2, 2)})
print(bacharach(small, rest).records[3])
