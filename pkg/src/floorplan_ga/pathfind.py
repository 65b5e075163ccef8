"""Corridor search on occupancy grids.

Movement is 4-connected over corridor (0) cells. :func:`astar` is the search
used for scoring; :func:`bfs_shortest_path` is a deliberately separate
breadth-first search kept as a reference for testing it.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional

from .core import Cell, GridMap

_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class PathResult:
    found: bool
    path: List[Cell] = field(default_factory=list)
    cost: int = -1


@dataclass(frozen=True)
class NavigabilityReport:
    s: bool
    entrance_exit_connected: bool
    unreachable_shelf_cells: List[Cell] = field(default_factory=list)


def _check_bounds(grid: GridMap, *cells: Cell) -> None:
    for cell in cells:
        if not grid.in_bounds(cell):
            raise ValueError(f"cell {cell} outside {grid.width}x{grid.height} grid")


def manhattan(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def astar(grid: GridMap, start: Cell, goal: Cell) -> PathResult:
    """Shortest corridor path from ``start`` to ``goal``.

    Open-list ties on f are broken towards the larger g, then by row-major
    cell index, so the returned path is fully deterministic.
    """
    start, goal = tuple(start), tuple(goal)
    _check_bounds(grid, start, goal)
    w, h = grid.width, grid.height
    blocked = grid.cells.ravel().tolist()
    s_idx = start[1] * w + start[0]
    g_idx = goal[1] * w + goal[0]
    if blocked[s_idx] or blocked[g_idx]:
        return PathResult(False)

    gx, gy = goal
    best_g = {s_idx: 0}
    parent = {s_idx: -1}
    closed = set()
    h0 = manhattan(start, goal)
    # (f, -g, row-major index)
    heap = [(h0, 0, s_idx)]
    while heap:
        _, neg_g, idx = heapq.heappop(heap)
        if idx in closed:
            continue
        if idx == g_idx:
            path = []
            while idx != -1:
                path.append((idx % w, idx // w))
                idx = parent[idx]
            path.reverse()
            return PathResult(True, path, -neg_g)
        closed.add(idx)
        x, y = idx % w, idx // w
        g = -neg_g + 1
        for dx, dy in _STEPS:
            nx, ny = x + dx, y + dy
            if 0 <= nx < w and 0 <= ny < h:
                n_idx = ny * w + nx
                if blocked[n_idx] or n_idx in closed:
                    continue
                if g < best_g.get(n_idx, g + 1):
                    best_g[n_idx] = g
                    parent[n_idx] = idx
                    heapq.heappush(heap, (g + abs(nx - gx) + abs(ny - gy), -g, n_idx))
    return PathResult(False)


def bfs_shortest_path(grid: GridMap, start: Cell, goal: Cell) -> Optional[int]:
    """Step count of a shortest corridor path, or ``None`` if none exists."""
    start, goal = tuple(start), tuple(goal)
    _check_bounds(grid, start, goal)
    if grid[start] or grid[goal]:
        return None
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cell = queue.popleft()
        if cell == goal:
            return dist[cell]
        for dx, dy in _STEPS:
            nxt = (cell[0] + dx, cell[1] + dy)
            if nxt not in dist and grid.in_bounds(nxt) and not grid[nxt]:
                dist[nxt] = dist[cell] + 1
                queue.append(nxt)
    return None


def corridor_component(grid: GridMap, start: Cell) -> set:
    """Corridor cells 4-connected to ``start`` (empty if ``start`` is a shelf)."""
    w, h = grid.width, grid.height
    blocked = grid.cells.ravel().tolist()
    s_idx = start[1] * w + start[0]
    if blocked[s_idx]:
        return set()
    seen = {s_idx}
    stack = [s_idx]
    while stack:
        idx = stack.pop()
        x, y = idx % w, idx // w
        if x > 0 and not blocked[idx - 1] and idx - 1 not in seen:
            seen.add(idx - 1)
            stack.append(idx - 1)
        if x < w - 1 and not blocked[idx + 1] and idx + 1 not in seen:
            seen.add(idx + 1)
            stack.append(idx + 1)
        if y > 0 and not blocked[idx - w] and idx - w not in seen:
            seen.add(idx - w)
            stack.append(idx - w)
        if y < h - 1 and not blocked[idx + w] and idx + w not in seen:
            seen.add(idx + w)
            stack.append(idx + w)
    return {(i % w, i // w) for i in seen}


def navigability(grid: GridMap, entrance: Cell, exit: Cell) -> NavigabilityReport:
    """Entrance-to-exit connectivity plus access to every shelf cell.

    A shelf cell counts as reachable when a 4-neighbour lies in the corridor
    region connected to the entrance.
    """
    entrance, exit = tuple(entrance), tuple(exit)
    _check_bounds(grid, entrance, exit)
    region = corridor_component(grid, entrance)
    # Exit outside the entrance region means A* cannot succeed; skip the search.
    connected = exit in region and astar(grid, entrance, exit).found
    unreachable = []
    for x, y in grid.shelf_cells():
        if not any((x + dx, y + dy) in region for dx, dy in _STEPS):
            unreachable.append((x, y))
    return NavigabilityReport(connected and not unreachable, connected, unreachable)
