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
# # Curves through most of the nodes
#
# Take a cage with d reds and e blues, and a set A of nodes whose per-blue-line
# counts are d, d, d-1, ..., d-e+2.  Every degree-d curve through A then passes
# through *all* the nodes, and the family of such curves has projective
# dimension (d-e+1)(d-e+2)/2.

# %%
from cagezoo import curves_through, evaluate, random_cage, random_supra_quasi
from cagezoo.nodesets import supra_triangular, triangular
from cagezoo.theorems import (
    expected_caged_nullity,
    pencil,
    reduce_caged_curve,
    verify_caged_dimension,
    verify_lower_bound,
    verify_ninth_node,
)

# %% [markdown]
# ## The cubic case
#
# For a 3x3 cage, any cubic through eight nodes goes through the ninth.

# %%
cage = random_cage(3, 3, seed=7)
report = verify_ninth_node(cage)
print("passed:", report.passed)
print("nullities:", [r.nullity for r in report.records])

# %% [markdown]
# The two-dimensional solution space is exactly the pencil spanned by the red
# product R and the blue product B.

# %%
basis = curves_through(cage.points(supra_triangular(3, 3)), 3).basis
for P in basis:
    lam, Q = reduce_caged_curve(cage, supra_triangular(3, 3), P)
    print(f"P = {lam} * R + B * ({Q})")
print(pencil(cage, 2, -5))

# %% [markdown]
# ## The dimension law

# %%
print(" d  e  nullity  expected")
for d in range(2, 7):
    for e in range(2, d + 1):
        rep = verify_caged_dimension(random_cage(d, e, seed=d * e), random_supra_quasi(d, e, seed=1))
        print(f"{d:2d} {e:2d} {rep.nullity:8d} {expected_caged_nullity(d, e):9d}  {rep.passed}")

# %% [markdown]
# ## Nothing of lower degree
#
# A quasi-triangular set (counts d, d-1, ..., d-e+1) admits no curve of degree
# below e.

# %%
cage = random_cage(5, 4, seed=3)
print(verify_lower_bound(cage, triangular(5, 4)))

# %% [markdown]
# ## Cardinality alone is not enough
#
# In a 4x4 cage a quartic can contain 13 nodes and still miss the others,
# when those 13 do not have the supra-quasi-triangular shape.

# %%
from cagezoo.theorems import remark_counterexample

C, rep = remark_counterexample(random_cage(4, 4, seed=2))
print("vanishes on the 13 kept nodes:", rep.vanishes_on_kept)
print("value at p_42:", rep.value_at_p42)
print("kept set is supra-quasi-triangular:", rep.kept_is_supra_quasi)
