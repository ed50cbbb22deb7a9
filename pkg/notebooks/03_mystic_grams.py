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
# # Mystic 2d-grams
#
# Inscribe a 2d-gon in a conic and colour its edges alternately red and blue.
# The edges form a d x d cage; 2d of its nodes are the polygon's vertices and
# the other d^2 - 2d "new" nodes lie on a curve of degree d - 2.  For d = 3
# this is Pascal's line.

# %%
from fractions import Fraction
from pathlib import Path

from cagezoo import UNIT_CIRCLE, ProjPoint, collinear, conic_point
from cagezoo.render import gram_scene, render_svg
from cagezoo.theorems import mystic_gram, octagram_dual

figures = Path("figures")
figures.mkdir(exist_ok=True)
base = ProjPoint(1, 0, 1)


def polygon(params):
    return [conic_point(UNIT_CIRCLE, base, Fraction(t)) for t in params]


# %% [markdown]
# Points on the unit circle come from chords of rational slope through (1, 0).

# %%
hexagon = polygon([0, 1, -1, 2, -2, 3])
for p in hexagon:
    print(p.affine_coords())

# %%
hexagram = mystic_gram(UNIT_CIRCLE, hexagon)
print("Pascal line:", hexagram.qstar)
print("new nodes collinear:", collinear(hexagram.new_nodes))
(figures / "hexagram.svg").write_text(render_svg(gram_scene(hexagram, UNIT_CIRCLE)))

# %% [markdown]
# ## Octagram and decagram

# %%
octagram = mystic_gram(UNIT_CIRCLE, polygon([0, 1, -1, 2, -2, 3, -3, 4]))
print("conic through 8 new nodes:", octagram.qstar, "unique:", octagram.unique)
decagram = mystic_gram(UNIT_CIRCLE, polygon([0, 1, -1, 2, -2, 3, -3, 4, -4, 5]))
print("cubic through", len(decagram.new_nodes), "new nodes:", decagram.qstar)
(figures / "octagram.svg").write_text(render_svg(gram_scene(octagram, UNIT_CIRCLE)))

# %% [markdown]
# ## Duality for octagrams
#
# The eight new nodes form a new bicoloured octagon inscribed in Q*.  Running
# the construction on it returns the original circle.

# %%
dual = octagram_dual(UNIT_CIRCLE, polygon([0, 1, -1, 2, -2, 3, -3, 4]))
print("cycle lengths:", [len(c) for c in dual.dual_polygons])
back = mystic_gram(dual.conic, [list(c) for c in dual.dual_polygons])
print("back to the circle:", back.qstar, back.qstar.is_proportional(UNIT_CIRCLE))
