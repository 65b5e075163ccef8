import numpy as np
import pytest
from hypothesis import given, strategies as st

from floorplan_ga.core import (BlockGene, GridMap, Individual, RunConfig, genes_from_tuples,
                               occupied_count, random_gene, rasterize)

from oracles import covered_cells
from strategies import gene_strategy


def test_worked_example_gene_is_vertical_three_cells_at_6_7():
    grid = rasterize(genes_from_tuples([(1, 6, 7, 3)]), 10, 10)
    assert grid.shelf_cells() == [(6, 7), (6, 8), (6, 9)]


def test_empty_gene_list_rasterizes_to_zero_grid():
    assert rasterize([], 10, 10) == GridMap.empty(10, 10)


def test_horizontal_gene_truncated_at_right_edge():
    grid = rasterize([BlockGene(False, 8, 0, 5)], 10, 10)
    assert grid.shelf_cells() == [(8, 0), (9, 0)]


def test_occupied_count_simple_cases():
    assert occupied_count(GridMap.empty()) == 0
    assert occupied_count(rasterize([BlockGene(True, 2, 2, 3)])) == 3


def test_occupied_count_with_one_shared_cell():
    genes = [BlockGene(True, 2, 2, 3), BlockGene(False, 0, 3, 3)]
    # (2,2) (2,3) (2,4) and (0,3) (1,3) (2,3): (2,3) is shared
    by_hand = {(2, 2), (2, 3), (2, 4), (0, 3), (1, 3)}
    assert len(by_hand) == 5
    assert occupied_count(rasterize(genes)) == 5
    assert set(rasterize(genes).shelf_cells()) == by_hand


def test_random_gene_deterministic_for_seed():
    cfg = RunConfig()
    assert random_gene(cfg, np.random.default_rng(7)) == random_gene(cfg, np.random.default_rng(7))


def test_random_gene_bounds_and_orientation_balance():
    cfg = RunConfig()
    rng = np.random.default_rng(123)
    genes = [random_gene(cfg, rng) for _ in range(10_000)]
    assert all(0 <= g.x < 10 and 0 <= g.y < 10 and 1 <= g.length <= 10 for g in genes)
    vertical = sum(g.is_vertical for g in genes) / len(genes)
    assert 0.47 <= vertical <= 0.53


def test_max_block_length_caps_length():
    cfg = RunConfig(max_block_length=3)
    rng = np.random.default_rng(0)
    assert {random_gene(cfg, rng).length for _ in range(500)} == {1, 2, 3}


@pytest.mark.parametrize("kwargs", [
    dict(population_size=1),
    dict(elite_count=100),
    dict(entrance=(9, 9)),
    dict(exit=(10, 0)),
    dict(crossover_prob=1.5),
    dict(mutation_prob=-0.1),
    dict(r_mode="flipped"),
    dict(num_blocks=0),
    dict(max_block_length=11),
])
def test_invalid_configs_rejected(kwargs):
    with pytest.raises(ValueError):
        RunConfig(**kwargs).validate()


def test_default_config_resolves_exit_and_length_cap():
    cfg = RunConfig(grid_width=6, grid_height=4).validate()
    assert cfg.exit == (5, 3)
    assert cfg.max_block_length == 4


def test_individual_total_requires_evaluation():
    with pytest.raises(ValueError):
        Individual(genes_from_tuples([(1, 0, 0, 1)])).total


@given(st.lists(gene_strategy(), max_size=15))
def test_rasterize_matches_cell_set_oracle(genes):
    assert set(rasterize(genes).shelf_cells()) == covered_cells(genes, 10, 10)


@given(st.lists(gene_strategy(), max_size=15))
def test_occupied_count_bounded_by_total_length(genes):
    assert occupied_count(rasterize(genes)) <= sum(g.length for g in genes)


@given(st.lists(gene_strategy(), max_size=12), gene_strategy())
def test_adding_gene_never_decreases_occupancy(genes, extra):
    assert occupied_count(rasterize(genes + [extra])) >= occupied_count(rasterize(genes))


@given(st.lists(gene_strategy(), max_size=12), st.randoms(use_true_random=False))
def test_rasterize_is_order_independent(genes, rnd):
    shuffled = list(genes)
    rnd.shuffle(shuffled)
    assert rasterize(shuffled) == rasterize(genes)
    assert rasterize(genes) == rasterize(genes)
