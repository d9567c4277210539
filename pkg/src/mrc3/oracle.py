"""Exhaustive ground truth for small instances.

All searches build covers the same way: the lowest unused vertex anchors a
new cycle, the cycle grows one vertex at a time, and it may close once it
has three vertices and its second vertex is smaller than its last (which
fixes the orientation). Each 2-factor is therefore produced exactly once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .graph_core import (BLUE, RED, ColoredCompleteGraph, CycleCover, InputError,
                         SimpleGraph, induced_subgraph)
from .reload import ReloadCostMatrix

ENUMERATION_CAP = 12
SINGLE_COLOR_CAP = 15


@dataclass(frozen=True)
class OracleResult:
    optimal_cost: Optional[int]      # None when no cover exists
    witness: Optional[CycleCover]
    explored: int


def _oracle_cap() -> int:
    from .mcca import oracle_cap

    return oracle_cap()


def enumerate_two_factors(n: int, allowed: Optional[Callable[[int, int], bool]] = None
                          ) -> Iterator[CycleCover]:
    """Every partition of 0..n-1 into cycles of length >= 3, canonical, once each."""
    if not 3 <= n <= max(ENUMERATION_CAP, _oracle_cap()):
        raise InputError(f"two-factor enumeration supports 3 <= n <= {ENUMERATION_CAP}")
    ok = allowed or (lambda u, v: True)
    used = [False] * n
    cycles: list[tuple[int, ...]] = []

    def next_cycle():
        try:
            a = used.index(False)
        except ValueError:
            yield CycleCover(cycles)
            return
        used[a] = True
        yield from grow([a])
        used[a] = False

    def grow(path):
        last = path[-1]
        if len(path) >= 3 and path[1] < last and ok(last, path[0]):
            cycles.append(tuple(path))
            yield from next_cycle()
            cycles.pop()
        for w in range(n):
            if not used[w] and ok(last, w):
                used[w] = True
                path.append(w)
                yield from grow(path)
                path.pop()
                used[w] = False

    yield from next_cycle()


def _branch_and_bound(n: int, color: Callable[[int, int], int], rho, allowed) -> OracleResult:
    """Minimum total junction cost over all 2-factors using only allowed pairs."""
    best = math.inf
    best_cycles: Optional[list[tuple[int, ...]]] = None
    explored = 0
    used = [False] * n
    cycles: list[tuple[int, ...]] = []

    def next_cycle(cost):
        nonlocal best, best_cycles, explored
        try:
            a = used.index(False)
        except ValueError:
            explored += 1
            if cost < best:
                best, best_cycles = cost, list(cycles)
            return
        used[a] = True
        grow([a], cost)
        used[a] = False

    def grow(path, cost):
        last = path[-1]
        if len(path) >= 3 and path[1] < last and allowed(last, path[0]):
            c_in, c_close, c_first = color(path[-2], last), color(last, path[0]), color(path[0], path[1])
            closed = cost + rho[c_in][c_close] + rho[c_close][c_first]
            if closed < best:
                cycles.append(tuple(path))
                next_cycle(closed)
                cycles.pop()
        steps = []
        for w in range(n):
            if not used[w] and allowed(last, w):
                inc = rho[color(path[-2], last)][color(last, w)] if len(path) >= 2 else 0
                if cost + inc < best:
                    steps.append((inc, w))
        steps.sort()
        for inc, w in steps:
            if cost + inc >= best:
                break
            used[w] = True
            path.append(w)
            grow(path, cost + inc)
            path.pop()
            used[w] = False

    next_cycle(0)
    if best_cycles is None:
        return OracleResult(None, None, explored)
    return OracleResult(int(best), CycleCover(best_cycles).canonical(), explored)


def solve_exact(g: ColoredCompleteGraph, m: ReloadCostMatrix) -> OracleResult:
    """Optimal MinRC3 value on K_n by exhaustive branch and bound."""
    cap = _oracle_cap()
    if g.n > cap:
        raise InputError(f"exact solver is capped at n <= {cap} (set MRC3_ORACLE_CAP)")
    if g.n < 3:
        raise InputError("need at least 3 vertices")
    chi = g.chi.tolist()
    return _branch_and_bound(g.n, lambda u, v: chi[u][v], m.rho, lambda u, v: True)


def solve_exact_general(graph: SimpleGraph, colors, m: ReloadCostMatrix) -> OracleResult:
    """Optimal MinRC3 value on an arbitrary graph; ``optimal_cost`` is None if no cover exists.

    ``colors`` is an n x n integer table read only on edges of ``graph``.
    """
    cap = _oracle_cap()
    if graph.n > cap:
        raise InputError(f"exact solver is capped at n <= {cap} (set MRC3_ORACLE_CAP)")
    if graph.n < 3:
        return OracleResult(None, None, 0)
    adj = graph.adj.tolist()
    tab = [list(map(int, row)) for row in colors]
    return _branch_and_bound(graph.n, lambda u, v: tab[u][v], m.rho, lambda u, v: adj[u][v])


def find_two_factor(g: SimpleGraph) -> Optional[CycleCover]:
    """Backtracking search for a spanning 2-regular subgraph of a simple graph."""
    n = g.n
    if n < 3:
        return None
    nbrs = g.nbrs
    unused = set(range(n))
    cycles: list[list[int]] = []

    def viable(path) -> bool:
        ends = {path[0], path[-1]}
        pool = unused | ends
        for u in unused:
            if len(nbrs[u] & pool) < 2:
                return False
        if len(path) >= 2 and not (nbrs[path[-1]] & (unused | {path[0]})):
            return False
        return True

    def next_cycle() -> bool:
        if not unused:
            return True
        a = min(unused)
        unused.discard(a)
        if grow([a]):
            return True
        unused.add(a)
        return False

    def grow(path) -> bool:
        last = path[-1]
        if len(path) >= 3 and path[1] < last and path[0] in nbrs[last]:
            cycles.append(list(path))
            if next_cycle():
                return True
            cycles.pop()
        for w in sorted(nbrs[last] & unused):
            unused.discard(w)
            path.append(w)
            if viable(path) and grow(path):
                return True
            path.pop()
            unused.add(w)
        return False

    return CycleCover(cycles).canonical() if next_cycle() else None


def exhaustive_monochromatic_exists(g: ColoredCompleteGraph
                                    ) -> tuple[bool, Optional[CycleCover], Optional[int]]:
    """Does some color class have a 2-factor? Returns (exists, witness, color)."""
    if g.n > SINGLE_COLOR_CAP:
        raise InputError(f"single-color search is capped at n <= {SINGLE_COLOR_CAP}")
    for c in (RED, BLUE):
        cover = find_two_factor(induced_subgraph(g, c))
        if cover is not None:
            return True, cover, c
    return False, None, None


def exhaustive_hamiltonian_cycle(g: SimpleGraph) -> Optional[list[int]]:
    """Plain backtracking Hamiltonian cycle search from vertex 0."""
    n = g.n
    if n < 3:
        return None
    nbrs = [sorted(s) for s in g.nbrs]
    on = [False] * n
    on[0] = True
    path = [0]

    def go() -> bool:
        last = path[-1]
        if len(path) == n:
            return g.adj[last, 0] and path[1] < last
        for w in nbrs[last]:
            if not on[w]:
                on[w] = True
                path.append(w)
                if go():
                    return True
                path.pop()
                on[w] = False
        return False

    return list(path) if go() else None
