import time
from types import SimpleNamespace

import pytest

from floorplan_ga.core import RunConfig
from floorplan_ga.engine import run

SEEDS = range(20)


def pytest_configure(config):
    config.acceptance_lines = []


@pytest.fixture(scope="session")
def default_runs():
    """Twenty default-configuration runs, shared across slow tests."""
    t0 = time.perf_counter()
    runs = {seed: run(RunConfig(rng_seed=seed)) for seed in SEEDS}
    return SimpleNamespace(runs=runs, elapsed=time.perf_counter() - t0)


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for the terminal summary, then assert."""
    def check(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        request.config.acceptance_lines.append(line)
        print(line)
        assert ok, line
    return check


def pytest_terminal_summary(terminalreporter, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in config.acceptance_lines:
            terminalreporter.write_line(line)
