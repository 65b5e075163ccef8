# %% [markdown]
# # Chromosomes and occupancy grids
#
# A layout is a list of shelf genes `(is_vertical, x, y, length)`. Rasterizing
# the list gives a 0/1 grid: 1 for shelf, 0 for corridor.

# %%
import numpy as np

from floorplan_ga import BlockGene, RunConfig, ascii_render, occupied_count, random_gene, rasterize

gene = BlockGene(True, 6, 7, 3)
grid = rasterize([gene], 10, 10)
print(ascii_render(grid))
print("shelf cells:", grid.shelf_cells())

# %% [markdown]
# Blocks that run past the edge are clipped, and overlapping blocks simply
# merge, so the shelf count can be smaller than the summed lengths.

# %%
genes = [BlockGene(False, 8, 0, 5), BlockGene(True, 2, 2, 3), BlockGene(False, 0, 3, 3)]
grid = rasterize(genes)
print(ascii_render(grid))
print("summed lengths:", sum(g.length for g in genes), "occupied:", occupied_count(grid))

# %% [markdown]
# Random genes drawn from a seeded generator are reproducible.

# %%
cfg = RunConfig()
rng = np.random.default_rng(0)
layout = [random_gene(cfg, rng) for _ in range(cfg.num_blocks)]
for g in layout:
    print(g)
print(ascii_render(rasterize(layout)))
