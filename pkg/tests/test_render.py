import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import given

from floorplan_ga.core import BlockGene, GridMap, RunConfig, occupied_count, rasterize
from floorplan_ga.engine import GenerationStats, run
from floorplan_ga.render import (GridParseError, RenderSpec, ascii_render, fitness_chart_svg, parse_ascii,
                                 parse_stats_csv, stats_csv, svg_render)

from strategies import grids, random_grid

SVG_NS = "{http://www.w3.org/2000/svg}"


def _polyline_ys(svg, name):
    root = ET.fromstring(svg)
    line = next(el for el in root.iter(SVG_NS + "polyline") if el.get("id") == name)
    return [float(p.split(",")[1]) for p in line.get("points").split()]


def test_ascii_zero_grid():
    assert ascii_render(GridMap.empty(2, 2)) == "0 0\n0 0\n"


def test_ascii_worked_gene():
    lines = ascii_render(rasterize([BlockGene(True, 6, 7, 3)])).splitlines()
    for y, line in enumerate(lines):
        row = line.split(" ")
        assert len(row) == 10
        assert row == ["1" if (y >= 7 and x == 6) else "0" for x in range(10)]


@given(grids())
def test_ascii_round_trip(grid):
    assert parse_ascii(ascii_render(grid)) == grid


@pytest.mark.parametrize("text, line, column", [
    ("0 1\n0 2\n", 2, 3),
    ("0 1\n0\n", 2, 2),
    ("", 0, 0),
    ("\n\n", 0, 0),
    ("0 x 1\n", 1, 3),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(GridParseError) as err:
        parse_ascii(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_svg_default_size_and_rect_count():
    grid = rasterize([BlockGene(True, 6, 7, 3), BlockGene(False, 1, 1, 4)])
    svg = svg_render(grid)
    root = ET.fromstring(svg)
    assert root.get("width") == "500" and root.get("height") == "500"
    rects = list(root.iter(SVG_NS + "rect"))
    assert len(rects) == occupied_count(grid) == 7
    positions = {(int(r.get("x")), int(r.get("y"))) for r in rects}
    assert positions == {(50 * x, 50 * y) for x, y in grid.shelf_cells()}


def test_svg_empty_grid_has_no_rects():
    svg = svg_render(GridMap.empty(), RenderSpec(show_grid_lines=False))
    assert len(list(ET.fromstring(svg).iter(SVG_NS + "rect"))) == 0


def test_svg_cell_px_scales_canvas():
    root = ET.fromstring(svg_render(GridMap.empty(4, 3), RenderSpec(cell_px=7)))
    assert (root.get("width"), root.get("height")) == ("28", "21")


def test_render_spec_rejects_zero_px():
    with pytest.raises(ValueError):
        RenderSpec(cell_px=0)


def test_svg_is_byte_stable():
    grid = random_grid(np.random.default_rng(5))
    assert svg_render(grid) == svg_render(GridMap(grid.cells.copy()))


def test_stats_csv_single_record():
    text = stats_csv([GenerationStats(0, 1.5, 1.0, 0.2)])
    assert text == "generation,best,mean,min\n0,1.5,1.0,0.2\n"


def test_stats_csv_empty_is_error():
    with pytest.raises(ValueError):
        stats_csv([])


def test_stats_csv_round_trip():
    _, hist = run(RunConfig(generations=20, population_size=30, rng_seed=9))
    text = stats_csv(hist)
    assert len(text.splitlines()) == len(hist) + 1
    back = parse_stats_csv(text)
    for a, b in zip(hist, back):
        assert a.generation == b.generation
        assert abs(a.best - b.best) <= 1e-12
        assert abs(a.mean - b.mean) <= 1e-12
        assert abs(a.min - b.min) <= 1e-12


def test_chart_needs_two_records():
    with pytest.raises(ValueError):
        fitness_chart_svg([GenerationStats(0, 1.0, 1.0, 1.0)])


def test_chart_constant_run_is_flat():
    stats = [GenerationStats(g, 2.0, 2.0, 2.0) for g in range(5)]
    svg = fitness_chart_svg(stats)
    for name in ("best", "mean", "min"):
        assert len(set(_polyline_ys(svg, name))) == 1


def test_chart_monotone_best_maps_to_decreasing_pixels():
    stats = [GenerationStats(g, 1.0 + g, 0.5 + g / 2, 0.0) for g in range(10)]
    ys = _polyline_ys(fitness_chart_svg(stats), "best")
    assert all(b < a for a, b in zip(ys, ys[1:]))


def test_chart_has_axis_labels():
    svg = fitness_chart_svg([GenerationStats(0, 1.0, 0.5, 0.0), GenerationStats(1, 2.0, 1.0, 0.5)])
    assert re.search(r">generation</text>", svg) and re.search(r">fitness</text>", svg)
    ET.fromstring(svg)


def test_chart_of_default_run_plots_nondecreasing_best():
    _, hist = run(RunConfig(rng_seed=17))
    ys = _polyline_ys(fitness_chart_svg(hist), "best")
    assert len(ys) == 101
    assert all(b <= a for a, b in zip(ys, ys[1:]))
