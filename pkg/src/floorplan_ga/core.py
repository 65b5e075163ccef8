"""Domain types and rasterization of shelf chromosomes onto an occupancy grid.

Coordinates are ``(x, y)`` with ``x`` the column and ``y`` the row, origin at
the top-left cell. A vertical block grows towards increasing ``y``, a
horizontal block towards increasing ``x``. Cells that fall off the grid are
dropped, so every gene tuple rasterizes to something valid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, NamedTuple, Optional, Sequence, Tuple

import numpy as np

if TYPE_CHECKING:
    from .fitness import FitnessBreakdown

Cell = Tuple[int, int]

R_MODES = ("paper", "inverted")


class BlockGene(NamedTuple):
    """One shelf: ``(is_vertical, x, y, length)``."""

    is_vertical: bool
    x: int
    y: int
    length: int


@dataclass(eq=False)
class GridMap:
    """Binary occupancy grid, ``cells[y, x] == 1`` for shelf cells."""

    cells: np.ndarray

    def __post_init__(self):
        self.cells = np.asarray(self.cells, dtype=np.uint8)
        if self.cells.ndim != 2:
            raise ValueError("grid cells must be a 2-D array")
        if self.cells.size and self.cells.max() > 1:
            raise ValueError("grid cells must be 0 or 1")

    @classmethod
    def empty(cls, width: int = 10, height: int = 10) -> "GridMap":
        return cls(np.zeros((height, width), dtype=np.uint8))

    @property
    def width(self) -> int:
        return self.cells.shape[1]

    @property
    def height(self) -> int:
        return self.cells.shape[0]

    def __getitem__(self, cell: Cell) -> int:
        x, y = cell
        return int(self.cells[y, x])

    def in_bounds(self, cell: Cell) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def shelf_cells(self) -> list[Cell]:
        ys, xs = np.nonzero(self.cells)
        return [(int(x), int(y)) for y, x in zip(ys, xs)]

    def __eq__(self, other):
        if not isinstance(other, GridMap):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)

    def __repr__(self):
        return f"GridMap({self.width}x{self.height}, occupied={occupied_count(self)})"


@dataclass(frozen=True)
class RunConfig:
    grid_width: int = 10
    grid_height: int = 10
    num_blocks: int = 10
    population_size: int = 100
    generations: int = 100
    crossover_prob: float = 0.9
    mutation_prob: float = 0.05
    elite_count: int = 1
    entrance: Cell = (0, 0)
    # None resolves to the bottom-right corner.
    exit: Optional[Cell] = None
    rng_seed: int = 0
    # None resolves to grid_height.
    max_block_length: Optional[int] = None
    r_mode: str = "paper"

    def __post_init__(self):
        object.__setattr__(self, "entrance", tuple(self.entrance))
        if self.exit is None:
            object.__setattr__(self, "exit", (self.grid_width - 1, self.grid_height - 1))
        else:
            object.__setattr__(self, "exit", tuple(self.exit))
        if self.max_block_length is None:
            object.__setattr__(self, "max_block_length", self.grid_height)

    def validate(self) -> "RunConfig":
        """Raise ``ValueError`` on the first broken constraint, else return self."""
        if self.grid_width < 1 or self.grid_height < 1:
            raise ValueError("grid dimensions must be positive")
        if self.num_blocks < 1:
            raise ValueError("num_blocks must be >= 1")
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.generations < 0:
            raise ValueError("generations must be >= 0")
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ValueError("crossover_prob must lie in [0, 1]")
        if not 0.0 <= self.mutation_prob <= 1.0:
            raise ValueError("mutation_prob must lie in [0, 1]")
        if not 0 <= self.elite_count < self.population_size:
            raise ValueError("elite_count must satisfy 0 <= elite_count < population_size")
        if not 1 <= self.max_block_length <= max(self.grid_width, self.grid_height):
            raise ValueError("max_block_length must lie in [1, max(grid_width, grid_height)]")
        for name in ("entrance", "exit"):
            cell = getattr(self, name)
            if len(cell) != 2 or not (0 <= cell[0] < self.grid_width and 0 <= cell[1] < self.grid_height):
                raise ValueError(f"{name} {cell} lies outside the grid")
        if self.entrance == self.exit:
            raise ValueError("entrance and exit must differ")
        if self.r_mode not in R_MODES:
            raise ValueError(f"r_mode must be one of {R_MODES}")
        return self


@dataclass
class Individual:
    genes: Tuple[BlockGene, ...]
    fitness: Optional["FitnessBreakdown"] = field(default=None, compare=False)

    def __post_init__(self):
        self.genes = tuple(BlockGene(*g) for g in self.genes)

    @property
    def total(self) -> float:
        if self.fitness is None:
            raise ValueError("individual has not been evaluated")
        return self.fitness.total


def validate_gene(gene: BlockGene, width: int, height: int) -> None:
    if not (0 <= gene.x < width and 0 <= gene.y < height):
        raise ValueError(f"gene anchor ({gene.x}, {gene.y}) outside {width}x{height} grid")
    if not 1 <= gene.length <= max(width, height):
        raise ValueError(f"gene length {gene.length} out of range")


def random_gene(config: RunConfig, rng: np.random.Generator) -> BlockGene:
    """Draw orientation, anchor and length uniformly, in that order."""
    is_vertical = bool(rng.integers(2))
    x = int(rng.integers(config.grid_width))
    y = int(rng.integers(config.grid_height))
    length = int(rng.integers(1, config.max_block_length + 1))
    return BlockGene(is_vertical, x, y, length)


def rasterize(genes: Iterable[BlockGene], width: int = 10, height: int = 10) -> GridMap:
    cells = np.zeros((height, width), dtype=np.uint8)
    for is_vertical, x, y, length in genes:
        if is_vertical:
            cells[y:y + length, x] = 1
        else:
            cells[y, x:x + length] = 1
    return GridMap(cells)


def occupied_count(grid: GridMap) -> int:
    return int(np.count_nonzero(grid.cells))


def genes_from_tuples(rows: Sequence[Sequence[int]]) -> Tuple[BlockGene, ...]:
    """Build genes from plain 4-tuples such as ``(1, 6, 7, 3)``."""
    return tuple(BlockGene(bool(v), int(x), int(y), int(n)) for v, x, y, n in rows)
