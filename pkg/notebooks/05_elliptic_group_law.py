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
# # Chord and tangent addition
#
# On a smooth plane cubic with a chosen point e, p + q is the third point on
# the line through e and the third point of the chord pq.  The third point is
# read off exactly from the restriction of the cubic to the chord, so no roots
# are ever extracted.

# %%
from cagezoo import ProjPoint, evaluate
from cagezoo.theorems import INFINITY, ec_add, third_intersection, weierstrass

C = weierstrass(0, 17)  # y^2 z = x^3 + 17 z^3
P, Q = ProjPoint.affine(-2, 3), ProjPoint.affine(2, 5)
print(C)

# %%
r = third_intersection(C, P, Q)
print("third point of the chord:", r.affine_coords(), "on C:", evaluate(C, r) == 0)


def add(a, b):
    return ec_add(C, INFINITY, a, b)


# %%
multiples = [P]
for _ in range(4):
    multiples.append(add(multiples[-1], P))
for k, m in enumerate(multiples, 1):
    print(f"{k}P =", m.affine_coords())

# %% [markdown]
# Associativity is the nontrivial part of the group law.

# %%
a, b, c = multiples[1], Q, multiples[2]
print(add(add(a, b), c) == add(a, add(b, c)))
