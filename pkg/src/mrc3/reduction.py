"""Completion of a general MinRC3 instance to a complete-graph instance.

Each non-edge becomes an edge with a fresh color whose reload cost to every
other color is ``big_m``. Any cover that uses a fresh edge pays at least
``2 * big_m``, so with ``big_m > n * max(rho)`` the optimum is unchanged
whenever the original instance has a cover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph_core import ColoredCompleteGraph, InputError, SimpleGraph
from .oracle import solve_exact, solve_exact_general
from .reload import ReloadCostMatrix


@dataclass(frozen=True, eq=False)
class GeneralInstance:
    graph: SimpleGraph
    edge_colors: np.ndarray = field(repr=False)   # n x n, -1 on non-edges
    rho: ReloadCostMatrix

    def __post_init__(self):
        c = np.array(self.edge_colors, dtype=np.int32)
        n = self.graph.n
        if c.shape != (n, n) or not np.array_equal(c, c.T):
            raise InputError("edge color table must be a symmetric n x n matrix")
        c[~self.graph.adj] = -1
        used = c[self.graph.adj]
        if used.size and (used.min() < 0 or used.max() >= self.rho.k):
            raise InputError("every edge needs a color covered by the reload matrix")
        c.setflags(write=False)
        object.__setattr__(self, "edge_colors", c)

    @classmethod
    def from_colored_edges(cls, n: int, colored_edges, rho: ReloadCostMatrix) -> "GeneralInstance":
        tab = np.full((n, n), -1, dtype=np.int32)
        for u, v, c in colored_edges:
            tab[u, v] = tab[v, u] = c
        return cls(SimpleGraph(n, tab >= 0), tab, rho)

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True, eq=False)
class Reduced:
    graph: ColoredCompleteGraph
    rho: ReloadCostMatrix
    fresh: dict[int, tuple[int, int]]   # fresh color -> the non-edge it sits on


def min_big_m(inst: GeneralInstance) -> int:
    return inst.n * inst.rho.max_cost() + 1


def reduce_to_complete(inst: GeneralInstance, big_m: Optional[int] = None) -> Reduced:
    """Complete ``inst`` with one fresh color per non-edge, in lexicographic order."""
    n, k = inst.n, inst.rho.k
    floor = min_big_m(inst)
    if big_m is None:
        big_m = floor
    if big_m < floor:
        raise InputError(f"big_m must exceed n * max(rho) = {floor - 1}")
    chi = inst.edge_colors.copy()
    fresh: dict[int, tuple[int, int]] = {}
    nxt = k
    for u in range(n):
        for v in range(u + 1, n):
            if not inst.graph.adj[u, v]:
                chi[u, v] = chi[v, u] = nxt
                fresh[nxt] = (u, v)
                nxt += 1
    total = nxt
    rho = [[big_m] * total for _ in range(total)]
    for a in range(total):
        rho[a][a] = 0
    for a in range(k):
        for b in range(k):
            rho[a][b] = inst.rho.rho[a][b]
    m = ReloadCostMatrix(tuple(map(tuple, rho)), permissive=inst.rho.permissive)
    return Reduced(ColoredCompleteGraph(n, chi, total), m, fresh)


def opt_preserved(inst: GeneralInstance, big_m: Optional[int] = None) -> bool:
    """Compare exact optima before and after completion.

    For an instance with no cover, checks that the completed optimum is at
    least ``big_m`` instead.
    """
    big_m = min_big_m(inst) if big_m is None else big_m
    red = reduce_to_complete(inst, big_m)
    before = solve_exact_general(inst.graph, inst.edge_colors, inst.rho).optimal_cost
    after = solve_exact(red.graph, red.rho).optimal_cost
    if before is None:
        return after is not None and after >= big_m
    return before == after
