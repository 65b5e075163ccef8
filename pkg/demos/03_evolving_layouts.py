# %% [markdown]
# # Evolving layouts
#
# A default run: 100 individuals of 10 blocks, 100 generations, roulette
# selection, two-point crossover over whole genes, single-field mutation and
# one elite. The run writes a stats CSV, a fitness chart and SVG snapshots of
# the best layout at generations 0, 50 and 100.

# %%
from pathlib import Path

from floorplan_ga import RunConfig, ascii_render, fitness_chart_svg, rasterize, run, stats_csv, svg_render

out = Path("demo_output")
out.mkdir(exist_ok=True)

config = RunConfig(rng_seed=42)
population, history = run(config)

for rec in history[::25]:
    print(f"gen {rec.generation:3d}  best {rec.best:6.2f}  mean {rec.mean:6.2f}  min {rec.min:6.2f}")

# %%
(out / "stats.csv").write_text(stats_csv(history))
(out / "fitness.svg").write_text(fitness_chart_svg(history))
for g in (0, 50, 100):
    grid = rasterize(history[g].best_individual)
    (out / f"gen_{g}.svg").write_text(svg_render(grid))
    print(f"generation {g}:\n{ascii_render(grid)}")

# %%
best = population.best()
print(best.fitness)
