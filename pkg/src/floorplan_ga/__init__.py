"""Genetic-algorithm floor planning for market shelf layouts on a 2-D grid."""

from .core import BlockGene, GridMap, Individual, RunConfig, occupied_count, random_gene, rasterize
from .engine import GenerationStats, Population, init_population, roulette_select, run, step
from .fitness import FitnessBreakdown, evaluate
from .pathfind import NavigabilityReport, PathResult, astar, navigability
from .render import RenderSpec, ascii_render, fitness_chart_svg, parse_ascii, stats_csv, svg_render

__all__ = [
    "BlockGene", "GridMap", "Individual", "RunConfig", "occupied_count", "random_gene", "rasterize",
    "GenerationStats", "Population", "init_population", "roulette_select", "run", "step",
    "FitnessBreakdown", "evaluate",
    "NavigabilityReport", "PathResult", "astar", "navigability",
    "RenderSpec", "ascii_render", "fitness_chart_svg", "parse_ascii", "stats_csv", "svg_render",
]
