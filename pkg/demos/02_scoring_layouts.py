# %% [markdown]
# # Scoring a layout
#
# The score adds three terms: shelf coverage `f = b / 5`, a navigability
# bonus or penalty `a`, and a shelf-contact term `r`. Navigability comes from
# an A* search between entrance and exit plus a check that every shelf
# touches the corridor region reachable from the entrance.

# %%
from floorplan_ga import BlockGene, GridMap, astar, navigability, rasterize
from floorplan_ga.fitness import score_grid

empty = GridMap.empty()
print(score_grid(empty, (0, 0), (9, 9)))

# %% [markdown]
# Five separated two-cell shelves: ten shelf cells, five contacts, all reachable.

# %%
genes = [BlockGene(True, x, 2, 2) for x in (1, 3, 5, 7)] + [BlockGene(True, 1, 6, 2)]
grid = rasterize(genes)
print(score_grid(grid, (0, 0), (9, 9)))
path = astar(grid, (0, 0), (9, 9))
print("A* cost:", path.cost)

# %% [markdown]
# A ring of shelves with one shelf sealed inside it: the entrance still
# reaches the exit, but the inner shelf is unreachable, so the layout loses
# the navigability bonus.

# %%
ring = [BlockGene(False, 2, 2, 5), BlockGene(False, 2, 6, 5),
        BlockGene(True, 2, 2, 5), BlockGene(True, 6, 2, 5), BlockGene(True, 4, 4, 1)]
grid = rasterize(ring)
report = navigability(grid, (0, 0), (9, 9))
print(report)
print(score_grid(grid, (0, 0), (9, 9)))

# %% [markdown]
# The coverage term dominates: a fully packed floor out-scores any navigable
# layout even after paying the 0.55 navigability swing.

# %%
full = rasterize([BlockGene(False, 0, y, 10) for y in range(10)])
comb = rasterize([BlockGene(False, 1, y, 9) for y in (1, 2, 4, 5, 7, 8)])
print("packed:", score_grid(full, (0, 0), (9, 9)).total)
print("comb:  ", score_grid(comb, (0, 0), (9, 9)).total)
