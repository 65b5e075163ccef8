"""Composite layout score ``total = f + a + r``.

* ``f = b / 5.0`` with ``b`` the number of shelf cells,
* ``a = +0.05`` when the layout is navigable, ``-0.5`` otherwise,
* ``r = 0.05 * n`` for ``n >= 5`` and ``0.05 / n`` below that, where ``n``
  counts 4-adjacent shelf-cell pairs. ``r(0)`` is pinned to ``0.05``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from .core import BlockGene, Cell, GridMap, Individual, RunConfig, occupied_count, rasterize
from .pathfind import navigability

NAVIGABLE_BONUS = 0.05
BLOCKED_PENALTY = -0.5


@dataclass(frozen=True)
class FitnessBreakdown:
    b: int
    s: bool
    n: int
    f: float
    a: float
    r: float
    total: float


def neighbor_count(grid: GridMap) -> int:
    """Number of unordered 4-adjacent pairs of shelf cells."""
    c = grid.cells
    horizontal = np.count_nonzero(c[:, 1:] & c[:, :-1])
    vertical = np.count_nonzero(c[1:, :] & c[:-1, :])
    return int(horizontal + vertical)


def r_term(n: int, mode: str = "paper") -> float:
    if n < 0:
        raise ValueError("neighbour count must be non-negative")
    if n >= 5:
        return 0.05 * n if mode == "paper" else -0.05 * n
    if n == 0:
        return 0.05
    return 0.05 / n


def a_term(s: bool) -> float:
    return NAVIGABLE_BONUS if s else BLOCKED_PENALTY


def score_grid(grid: GridMap, entrance: Cell, exit: Cell, r_mode: str = "paper") -> FitnessBreakdown:
    b = occupied_count(grid)
    s = navigability(grid, entrance, exit).s
    n = neighbor_count(grid)
    f = b / 5.0
    a = a_term(s)
    r = r_term(n, r_mode)
    return FitnessBreakdown(b, s, n, f, a, r, f + a + r)


@lru_cache(maxsize=65536)
def _score_genes(genes: Tuple[BlockGene, ...], width: int, height: int,
                 entrance: Cell, exit: Cell, r_mode: str) -> FitnessBreakdown:
    return score_grid(rasterize(genes, width, height), entrance, exit, r_mode)


def evaluate(individual: Individual, config: RunConfig) -> FitnessBreakdown:
    """Score ``individual`` under ``config`` and cache the result on it."""
    breakdown = _score_genes(individual.genes, config.grid_width, config.grid_height,
                             config.entrance, config.exit, config.r_mode)
    individual.fitness = breakdown
    return breakdown
