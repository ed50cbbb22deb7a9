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
# # Cages and their nodes
#
# A cage is d "red" lines and e "blue" lines in general position.  Every red
# line meets every blue line in a node, giving d*e nodes.  All arithmetic here
# is exact over the rationals.

# %%
from pathlib import Path

from cagezoo import ProjPoint, grid_cage, random_cage
from cagezoo.render import cage_scene, render_svg

figures = Path("figures")
figures.mkdir(exist_ok=True)

# %% [markdown]
# Lines are stored as linear forms with the first nonzero coefficient scaled
# to 1, and points likewise, so equality is plain field comparison.

# %%
cage = random_cage(3, 3, seed=1)
for i, R in enumerate(cage.reds, 1):
    print(f"R{i}: {R.form}")
for j, B in enumerate(cage.blues, 1):
    print(f"B{j}: {B.form}")

# %%
for i in range(1, 4):
    print([str(cage.node(i, j)) for j in range(1, 4)])

# %% [markdown]
# Grid cages are handy for pictures: horizontal reds y = m and vertical blues
# x = n, so node p_ij sits at (n_j, m_i).

# %%
grid = grid_cage((0, 1, 2), (0, 1, 2))
print(grid.node(2, 3), grid.node(2, 3).affine_coords())
assert grid.node(2, 3) == ProjPoint.affine(2, 1)

# %%
(figures / "grid_cage.svg").write_text(render_svg(cage_scene(grid)))
(figures / "random_cage.svg").write_text(render_svg(cage_scene(cage)))
print("wrote", sorted(p.name for p in figures.glob("*cage.svg")))
