"""Command-line entry point: ``floorplan-ga {run,evaluate,render}``.

Exit codes: 0 success, 1 runtime or I/O failure, 2 usage or parse failure.
Settings resolve as built-in defaults < ``--config`` JSON file < flags.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from .core import R_MODES, Individual, RunConfig, rasterize
from .engine import run
from .fitness import FitnessBreakdown, score_grid
from .pathfind import NavigabilityReport, navigability
from .render import GridParseError, RenderSpec, ascii_render, fitness_chart_svg, parse_ascii, stats_csv, svg_render

FORMATS = ("ascii", "svg", "csv", "chart")

# flag dest -> RunConfig field
_CONFIG_FLAGS = {
    "grid_w": "grid_width",
    "grid_h": "grid_height",
    "blocks": "num_blocks",
    "pop": "population_size",
    "generations": "generations",
    "cx_prob": "crossover_prob",
    "mut_prob": "mutation_prob",
    "elite": "elite_count",
    "seed": "rng_seed",
    "entrance": "entrance",
    "exit": "exit",
    "r_mode": "r_mode",
    "max_length": "max_block_length",
}


class CliError(Exception):
    """Runtime failure reported with exit code 1."""


def _cell(text: str):
    try:
        x, y = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}")
    return (x, y)


def _formats(text: str):
    chosen = tuple(f.strip() for f in text.split(",") if f.strip())
    bad = [f for f in chosen if f not in FORMATS]
    if bad or not chosen:
        raise argparse.ArgumentTypeError(f"formats must be a subset of {','.join(FORMATS)}")
    return chosen


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _add_scoring_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--entrance", type=_cell, help="entrance cell x,y (default 0,0)")
    p.add_argument("--exit", type=_cell, help="exit cell x,y (default bottom-right)")
    p.add_argument("--r-mode", choices=R_MODES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="floorplan-ga", description="Evolve market shelf layouts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="evolve layouts and write snapshots and reports")
    p_run.add_argument("--config", type=Path, help="JSON file of RunConfig fields")
    p_run.add_argument("--grid-w", type=int)
    p_run.add_argument("--grid-h", type=int)
    p_run.add_argument("--blocks", type=int)
    p_run.add_argument("--pop", type=int)
    p_run.add_argument("--generations", type=int)
    p_run.add_argument("--cx-prob", type=float)
    p_run.add_argument("--mut-prob", type=float)
    p_run.add_argument("--elite", type=int)
    p_run.add_argument("--seed", type=int)
    p_run.add_argument("--max-length", type=int, help="longest block a gene may draw")
    _add_scoring_flags(p_run)
    p_run.add_argument("--out-dir", type=Path, default=Path("out"))
    p_run.add_argument("--snapshot-every", type=_non_negative, default=0,
                       help="snapshot cadence in generations; 0 writes only the first and last")
    p_run.add_argument("--top-k", type=_positive, default=1, help="distinct final layouts to write")
    p_run.add_argument("--formats", type=_formats, default=FORMATS)
    p_run.add_argument("--force", action="store_true", help="overwrite existing files")

    p_eval = sub.add_parser("evaluate", help="score an ASCII layout file")
    p_eval.add_argument("layout", type=Path)
    _add_scoring_flags(p_eval)
    p_eval.add_argument("--json", action="store_true", help="print machine-readable JSON")

    p_render = sub.add_parser("render", help="render an ASCII layout file to SVG")
    p_render.add_argument("layout", type=Path)
    p_render.add_argument("-o", "--output", type=Path, help="output path (default <out-dir>/<layout>.svg)")
    p_render.add_argument("--out-dir", type=Path, default=Path("."))
    p_render.add_argument("--cell-px", type=_positive, default=RenderSpec.cell_px)
    p_render.add_argument("--no-grid-lines", action="store_true")
    p_render.add_argument("--force", action="store_true")
    return parser


def resolve_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    values: Dict[str, object] = {}
    config_path = getattr(args, "config", None)
    if config_path is not None:
        try:
            loaded = json.loads(config_path.read_text())
        except OSError as exc:
            raise CliError(f"cannot read config {config_path}: {exc}")
        except json.JSONDecodeError as exc:
            parser.error(f"invalid JSON in {config_path}: {exc}")
        known = {f.name for f in dataclasses.fields(RunConfig)}
        unknown = set(loaded) - known
        if unknown:
            parser.error(f"unknown config keys: {', '.join(sorted(unknown))}")
        values.update(loaded)
    for dest, name in _CONFIG_FLAGS.items():
        value = getattr(args, dest, None)
        if value is not None:
            values[name] = value
    try:
        return RunConfig(**values).validate()
    except (TypeError, ValueError) as exc:
        parser.error(str(exc))


def format_report(breakdown: FitnessBreakdown, report: NavigabilityReport) -> str:
    lines = [f"{name}={_fmt_value(getattr(breakdown, name))}" for name in ("b", "s", "n", "f", "a", "r", "total")]
    lines.append(f"entrance_exit_connected={_fmt_value(report.entrance_exit_connected)}")
    cells = " ".join(f"{x},{y}" for x, y in report.unreachable_shelf_cells)
    lines.append(f"unreachable_shelf_cells={cells}")
    return "\n".join(lines) + "\n"


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _write_files(out_dir: Path, files: Dict[str, str], force: bool) -> None:
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        clashes = sorted(name for name in files if (out_dir / name).exists())
        if clashes and not force:
            raise CliError(f"refusing to overwrite {', '.join(clashes)} in {out_dir} (use --force)")
        for name, text in files.items():
            with open(out_dir / name, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write to {out_dir}: {exc}")


def _layout_files(stem: str, grid, formats, spec: RenderSpec) -> Dict[str, str]:
    files = {}
    if "ascii" in formats:
        files[f"{stem}.txt"] = ascii_render(grid)
    if "svg" in formats:
        files[f"{stem}.svg"] = svg_render(grid, spec)
    return files


def snapshot_generations(generations: int, every: int) -> List[int]:
    marks = {0, generations}
    if every:
        marks.update(range(0, generations + 1, every))
    return sorted(marks)


def top_k_distinct(individuals: List[Individual], k: int, width: int, height: int) -> List[Individual]:
    ranked = sorted(individuals, key=lambda ind: -ind.total)
    picked, seen = [], set()
    for ind in ranked:
        key = rasterize(ind.genes, width, height).cells.tobytes()
        if key not in seen:
            seen.add(key)
            picked.append(ind)
            if len(picked) == k:
                break
    return picked


def cmd_run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    config = resolve_config(args, parser)
    population, history = run(config)
    spec = RenderSpec()
    w, h = config.grid_width, config.grid_height
    files: Dict[str, str] = {}
    if "csv" in args.formats:
        files["stats.csv"] = stats_csv(history)
    if "chart" in args.formats and len(history) >= 2:
        files["fitness.svg"] = fitness_chart_svg(history, spec)
    for g in snapshot_generations(config.generations, args.snapshot_every):
        files.update(_layout_files(f"gen_{g}", rasterize(history[g].best_individual, w, h), args.formats, spec))

    best = top_k_distinct(population.individuals, args.top_k, w, h)
    files.update(_layout_files("final_best", rasterize(best[0].genes, w, h), args.formats, spec))
    if args.top_k > 1:
        for rank, ind in enumerate(best, start=1):
            files.update(_layout_files(f"final_rank_{rank}", rasterize(ind.genes, w, h), args.formats, spec))
    _write_files(args.out_dir, files, args.force)

    grid = rasterize(best[0].genes, w, h)
    sys.stdout.write(f"generation={config.generations}\n")
    sys.stdout.write(format_report(best[0].fitness, navigability(grid, config.entrance, config.exit)))
    return 0


def _read_layout(path: Path, parser: argparse.ArgumentParser):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    try:
        return parse_ascii(text)
    except GridParseError as exc:
        parser.error(f"{path}: {exc}")


def _scoring_cells(args, grid, parser):
    entrance = args.entrance or (0, 0)
    exit = args.exit or (grid.width - 1, grid.height - 1)
    for name, cell in (("entrance", entrance), ("exit", exit)):
        if not grid.in_bounds(cell):
            parser.error(f"{name} {cell} lies outside the {grid.width}x{grid.height} layout")
    if entrance == exit:
        parser.error("entrance and exit must differ")
    return entrance, exit


def cmd_evaluate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    grid = _read_layout(args.layout, parser)
    entrance, exit = _scoring_cells(args, grid, parser)
    breakdown = score_grid(grid, entrance, exit, args.r_mode or "paper")
    report = navigability(grid, entrance, exit)
    if args.json:
        payload = {"fitness": dataclasses.asdict(breakdown), "navigability": dataclasses.asdict(report)}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(format_report(breakdown, report))
    return 0


def cmd_render(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    grid = _read_layout(args.layout, parser)
    spec = RenderSpec(cell_px=args.cell_px, show_grid_lines=not args.no_grid_lines)
    target = args.output or args.out_dir / (args.layout.stem + ".svg")
    _write_files(target.parent, {target.name: svg_render(grid, spec)}, args.force)
    sys.stdout.write(f"{target}\n")
    return 0


COMMANDS = {"run": cmd_run, "evaluate": cmd_evaluate, "render": cmd_render}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except CliError as exc:
        sys.stderr.write(f"floorplan-ga: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
