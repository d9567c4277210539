"""Reload cost functions and the cost of paths, cycles and covers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .graph_core import ColoredCompleteGraph, CycleCover, InputError, validate_cover


@dataclass(frozen=True)
class ReloadCostMatrix:
    """``rho[a][b]`` is the cost of passing from an edge colored ``a`` to one colored ``b``.

    Zero diagonal is always required. Off-diagonal entries must be positive
    unless the matrix was built with ``permissive=True``.
    """

    rho: tuple[tuple[int, ...], ...]
    permissive: bool = False

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rho)
        object.__setattr__(self, "rho", rows)
        k = len(rows)
        for a, row in enumerate(rows):
            if len(row) != k:
                raise InputError("reload cost matrix must be square")
            for b, x in enumerate(row):
                if x < 0:
                    raise InputError(f"negative reload cost rho({a},{b})={x}")
                if a == b and x != 0:
                    raise InputError(f"rho({a},{a}) must be 0")
                if a != b and x == 0 and not self.permissive:
                    raise InputError(f"rho({a},{b}) must be positive")

    @classmethod
    def uniform(cls, k: int = 2, cost: int = 1) -> "ReloadCostMatrix":
        return cls(tuple(tuple(0 if a == b else cost for b in range(k)) for a in range(k)))

    @property
    def k(self) -> int:
        return len(self.rho)

    def __call__(self, a: int, b: int) -> int:
        return self.rho[a][b]

    def max_cost(self) -> int:
        return max((x for row in self.rho for x in row), default=0)


def is_symmetric(m: ReloadCostMatrix) -> bool:
    return all(m.rho[a][b] == m.rho[b][a] for a in range(m.k) for b in range(a))


def satisfies_triangle(m: ReloadCostMatrix) -> bool:
    r = m.rho
    return all(r[a][c] <= r[a][b] + r[b][c] for a, b, c in product(range(m.k), repeat=3))


def _check_rho_covers(g: ColoredCompleteGraph, m: ReloadCostMatrix) -> None:
    if m.k < g.k:
        raise InputError(f"reload matrix has {m.k} colors, graph uses {g.k}")


def path_cost(g: ColoredCompleteGraph, m: ReloadCostMatrix, path: Sequence[int]) -> int:
    """Sum of reload costs at the internal vertices of ``path``."""
    _check_rho_covers(g, m)
    if len(path) < 2:
        raise InputError("a path needs at least 2 vertices")
    cols = []
    for u, v in zip(path, path[1:]):
        if u == v:
            raise InputError(f"repeated consecutive vertex {u}")
        cols.append(g.color(u, v))
    return sum(m.rho[a][b] for a, b in zip(cols, cols[1:]))


def cycle_cost(g: ColoredCompleteGraph, m: ReloadCostMatrix, cycle: Sequence[int]) -> int:
    """Path cost of the closed walk plus the junction at the closing vertex."""
    _check_rho_covers(g, m)
    if len(cycle) < 3:
        raise InputError("a cycle needs at least 3 vertices")
    L = len(cycle)
    cols = []
    for i in range(L):
        u, v = cycle[i], cycle[(i + 1) % L]
        if u == v:
            raise InputError(f"repeated consecutive vertex {u}")
        cols.append(g.color(u, v))
    return sum(m.rho[cols[i - 1]][cols[i]] for i in range(L))


def cover_cost(g: ColoredCompleteGraph, m: ReloadCostMatrix, cover) -> int:
    ok, why = validate_cover(g.n, cover)
    if not ok:
        raise InputError(f"invalid cover: {why}")
    cycles = cover.cycles if isinstance(cover, CycleCover) else cover
    return sum(cycle_cost(g, m, c) for c in cycles)
