"""Generational GA over shelf chromosomes.

All random draws come from one ``numpy.random.Generator`` in a fixed order
(selection, crossover decision, cut points, mutation), so a run is a pure
function of its :class:`~floorplan_ga.core.RunConfig`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core import BlockGene, Individual, RunConfig, random_gene
from .fitness import evaluate

SELECTION_EPS = 1e-6
GENE_FIELDS = ("is_vertical", "x", "y", "length")


@dataclass
class Population:
    individuals: List[Individual]
    generation: int = 0

    def __len__(self):
        return len(self.individuals)

    def totals(self) -> List[float]:
        return [ind.total for ind in self.individuals]

    def best(self) -> Individual:
        return max(self.individuals, key=lambda ind: ind.total)


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    best: float
    mean: float
    min: float
    best_individual: Tuple[BlockGene, ...] = ()


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def init_population(config: RunConfig, rng: np.random.Generator) -> Population:
    individuals = []
    for _ in range(config.population_size):
        ind = Individual(tuple(random_gene(config, rng) for _ in range(config.num_blocks)))
        evaluate(ind, config)
        individuals.append(ind)
    return Population(individuals, 0)


def selection_weights(totals: Sequence[float], eps: float = SELECTION_EPS) -> np.ndarray:
    """Shift totals so the weakest individual keeps a tiny positive weight."""
    totals = np.asarray(totals, dtype=float)
    return totals - totals.min() + eps


def roulette_index(weights: Sequence[float], rng: np.random.Generator) -> int:
    """Index drawn with probability ``weights[i] / sum(weights)``."""
    cumulative = np.cumsum(weights)
    if len(cumulative) == 0:
        raise ValueError("cannot select from an empty population")
    spin = rng.random() * cumulative[-1]
    return min(int(np.searchsorted(cumulative, spin, side="right")), len(cumulative) - 1)


def roulette_select(population: Population | Sequence[Individual], rng: np.random.Generator) -> Individual:
    individuals = population.individuals if isinstance(population, Population) else list(population)
    if not individuals:
        raise ValueError("cannot select from an empty population")
    weights = selection_weights([ind.total for ind in individuals])
    return individuals[roulette_index(weights, rng)]


def two_point_crossover(parent_a: Individual, parent_b: Individual, rng: np.random.Generator,
                        cuts: Optional[Tuple[int, int]] = None) -> Tuple[Individual, Individual]:
    """Swap the whole-gene segment ``[i, j)`` between two parents.

    ``cuts`` overrides the random draw; otherwise ``0 <= i < j <= len(genes)``
    is chosen uniformly over all such pairs.
    """
    a, b = parent_a.genes, parent_b.genes
    if len(a) != len(b):
        raise ValueError(f"gene count mismatch: {len(a)} vs {len(b)}")
    if cuts is None:
        i, j = sorted(int(c) for c in rng.choice(len(a) + 1, size=2, replace=False))
    else:
        i, j = cuts
        if not 0 <= i < j <= len(a):
            raise ValueError(f"invalid cut points {cuts}")
    child_a = Individual(a[:i] + b[i:j] + a[j:])
    child_b = Individual(b[:i] + a[i:j] + b[j:])
    return child_a, child_b


def mutate_with_record(individual: Individual, config: RunConfig,
                       rng: np.random.Generator) -> Tuple[Individual, List[Optional[str]]]:
    """Mutate and report which field was redrawn for each gene (``None`` if untouched)."""
    genes = []
    record: List[Optional[str]] = []
    for gene in individual.genes:
        if rng.random() >= config.mutation_prob:
            genes.append(gene)
            record.append(None)
            continue
        which = GENE_FIELDS[int(rng.integers(4))]
        if which == "is_vertical":
            gene = gene._replace(is_vertical=not gene.is_vertical)
        elif which == "x":
            gene = gene._replace(x=int(rng.integers(config.grid_width)))
        elif which == "y":
            gene = gene._replace(y=int(rng.integers(config.grid_height)))
        else:
            gene = gene._replace(length=int(rng.integers(1, config.max_block_length + 1)))
        genes.append(gene)
        record.append(which)
    return Individual(tuple(genes)), record


def mutate(individual: Individual, config: RunConfig, rng: np.random.Generator) -> Individual:
    return mutate_with_record(individual, config, rng)[0]


def generation_stats(population: Population) -> GenerationStats:
    totals = population.totals()
    best, worst = max(totals), min(totals)
    # fsum rounding can leave the mean an ulp outside [min, best].
    mean = min(max(math.fsum(totals) / len(totals), worst), best)
    return GenerationStats(population.generation, best, mean, worst,
                           population.best().genes)


def step(population: Population, config: RunConfig,
         rng: np.random.Generator) -> Tuple[Population, GenerationStats]:
    individuals = population.individuals
    totals = population.totals()
    order = sorted(range(len(individuals)), key=lambda i: -totals[i])
    next_gen = [individuals[i] for i in order[:config.elite_count]]

    weights = selection_weights(totals)
    needed = len(individuals) - len(next_gen)
    offspring: List[Individual] = []
    while len(offspring) < needed:
        parent_a = individuals[roulette_index(weights, rng)]
        parent_b = individuals[roulette_index(weights, rng)]
        if rng.random() < config.crossover_prob:
            child_a, child_b = two_point_crossover(parent_a, parent_b, rng)
        else:
            child_a, child_b = Individual(parent_a.genes), Individual(parent_b.genes)
        offspring.append(mutate(child_a, config, rng))
        offspring.append(mutate(child_b, config, rng))
    del offspring[needed:]

    for child in offspring:
        evaluate(child, config)
    new_population = Population(next_gen + offspring, population.generation + 1)
    return new_population, generation_stats(new_population)


def run(config: RunConfig) -> Tuple[Population, List[GenerationStats]]:
    config.validate()
    rng = make_rng(config.rng_seed)
    population = init_population(config, rng)
    history = [generation_stats(population)]
    for _ in range(config.generations):
        population, stats = step(population, config, rng)
        history.append(stats)
    return population, history
