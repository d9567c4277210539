"""Dense edge-colored complete graphs, simple graphs and cycle covers.

Vertices are always ``0..n-1``. Colors are small integers; the two colors
used by the core algorithms are ``RED = 0`` and ``BLUE = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

RED = 0
BLUE = 1
NO_COLOR = -1


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class InfeasibleError(ValueError):
    """The requested object provably does not exist."""


def color_name(c: int) -> str:
    if c == RED:
        return "red"
    if c == BLUE:
        return "blue"
    return f"c{c}"


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Undirected simple graph stored as a symmetric boolean matrix."""

    n: int
    adj: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.array(self.adj, dtype=bool)
        if a.shape != (self.n, self.n):
            raise InputError(f"adjacency must be {self.n}x{self.n}, got {a.shape}")
        if a.diagonal().any():
            raise InputError("self-loops are not allowed")
        if not np.array_equal(a, a.T):
            raise InputError("adjacency must be symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at {u}")
            a[u, v] = a[v, u] = True
        return cls(n, a)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, ~np.eye(n, dtype=bool))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, np.zeros((n, n), dtype=bool))

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    __hash__ = None

    @cached_property
    def nbrs(self) -> list[frozenset[int]]:
        """Neighbor sets, computed once per graph."""
        return [frozenset(np.flatnonzero(row).tolist()) for row in self.adj]

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def complement(self) -> "SimpleGraph":
        a = ~self.adj
        np.fill_diagonal(a, False)
        return SimpleGraph(self.n, a)

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Subgraph on ``vertices``; new vertex i is ``vertices[i]``."""
        idx = np.asarray(vertices, dtype=int)
        return SimpleGraph(len(idx), self.adj[np.ix_(idx, idx)])

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components (sorted lists) of the graph minus ``removed``."""
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.nbrs[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
                        comp.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def articulation_points(self) -> list[int]:
        """Cut vertices in increasing order (iterative Hopcroft-Tarjan)."""
        n = self.n
        disc = [-1] * n
        low = [0] * n
        cut = set()
        timer = 0
        nbrs = [sorted(s) for s in self.nbrs]
        for root in range(n):
            if disc[root] != -1:
                continue
            disc[root] = low[root] = timer
            timer += 1
            root_children = 0
            stack = [(root, -1, iter(nbrs[root]))]
            while stack:
                u, parent, it = stack[-1]
                advanced = False
                for w in it:
                    if disc[w] == -1:
                        disc[w] = low[w] = timer
                        timer += 1
                        if u == root:
                            root_children += 1
                        stack.append((w, u, iter(nbrs[w])))
                        advanced = True
                        break
                    if w != parent:
                        low[u] = min(low[u], disc[w])
                if advanced:
                    continue
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[u])
                    if parent != root and low[u] >= disc[parent]:
                        cut.add(parent)
            if root_children > 1:
                cut.add(root)
        return sorted(cut)

    def is_two_connected(self) -> bool:
        return self.n >= 3 and self.is_connected() and not self.articulation_points()


@dataclass(frozen=True, eq=False)
class ColoredCompleteGraph:
    """Complete graph K_n with a total edge coloring ``chi`` over ``k`` colors.

    ``chi`` is a symmetric integer matrix; the diagonal holds ``NO_COLOR``.
    """

    n: int
    chi: np.ndarray = field(repr=False)
    k: int = 2

    def __post_init__(self):
        c = np.array(self.chi, dtype=np.int32)
        if c.shape != (self.n, self.n):
            raise InputError(f"color matrix must be {self.n}x{self.n}, got {c.shape}")
        np.fill_diagonal(c, NO_COLOR)
        if not np.array_equal(c, c.T):
            raise InputError("color matrix must be symmetric")
        off = c[~np.eye(self.n, dtype=bool)]
        if off.size and (off.min() < 0 or off.max() >= self.k):
            raise InputError(f"edge colors must lie in [0, {self.k})")
        c.setflags(write=False)
        object.__setattr__(self, "chi", c)

    @classmethod
    def from_color_edges(cls, n: int, color_edges: Iterable[tuple[int, int]],
                         color: int = RED, other: int = BLUE, k: int = 2) -> "ColoredCompleteGraph":
        """Edges listed get ``color``, every other pair gets ``other``."""
        c = np.full((n, n), other, dtype=np.int32)
        for u, v in color_edges:
            c[u, v] = c[v, u] = color
        return cls(n, c, k)

    @classmethod
    def monochromatic(cls, n: int, color: int = RED, k: int = 2) -> "ColoredCompleteGraph":
        return cls(n, np.full((n, n), color, dtype=np.int32), k)

    def __eq__(self, other):
        if not isinstance(other, ColoredCompleteGraph):
            return NotImplemented
        return self.n == other.n and self.k == other.k and np.array_equal(self.chi, other.chi)

    __hash__ = None

    def color(self, u: int, v: int) -> int:
        return int(self.chi[u, v])

    def colors_used(self) -> set[int]:
        return set(np.unique(self.chi[~np.eye(self.n, dtype=bool)]).tolist())

    def swap_colors(self) -> "ColoredCompleteGraph":
        """Exchange red and blue (two-colorings only)."""
        c = np.where(self.chi >= 0, 1 - self.chi, NO_COLOR)
        return ColoredCompleteGraph(self.n, c, self.k)

    def relabel(self, perm: Sequence[int]) -> "ColoredCompleteGraph":
        """Vertex ``v`` of the result is vertex ``perm[v]`` of ``self``."""
        p = np.asarray(perm, dtype=int)
        return ColoredCompleteGraph(self.n, self.chi[np.ix_(p, p)], self.k)


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise InputError(f"vertex {v} out of range for order {n}")


def _check_color(k: int, c: int) -> None:
    if not 0 <= c < k:
        raise InputError(f"color {c} out of range for {k} colors")


def color_degree(g: ColoredCompleteGraph, v: int, c: int) -> int:
    """Number of edges at ``v`` colored ``c``."""
    _check_vertex(g.n, v)
    _check_color(g.k, c)
    return int(np.count_nonzero(g.chi[v] == c))


def induced_subgraph(g: ColoredCompleteGraph, c: int) -> SimpleGraph:
    """Spanning subgraph formed by the edges of color ``c``."""
    _check_color(g.k, c)
    return SimpleGraph(g.n, g.chi == c)


@dataclass(frozen=True)
class CycleCover:
    """Vertex-disjoint cycles, each an open vertex sequence closed implicitly."""

    cycles: tuple[tuple[int, ...], ...]

    def __init__(self, cycles: Iterable[Iterable[int]]):
        object.__setattr__(self, "cycles", tuple(tuple(int(v) for v in c) for c in cycles))

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    @property
    def sizes(self) -> list[int]:
        return sorted(len(c) for c in self.cycles)

    def canonical(self) -> "CycleCover":
        return CycleCover(sorted(canonical_cycle(c) for c in self.cycles))


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the minimum vertex is first and orient so that c[1] < c[-1]."""
    c = list(cycle)
    if not c:
        return ()
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def validate_cover(n: int, cover) -> tuple[bool, str]:
    """Check the cycle-cover invariants against order ``n``.

    Returns ``(ok, diagnostic)``; the diagnostic names the first violation
    or is ``"ok"``.
    """
    cycles = cover.cycles if isinstance(cover, CycleCover) else [tuple(c) for c in cover]
    seen: set[int] = set()
    for cyc in cycles:
        if len(cyc) < 3:
            return False, "cycle shorter than 3"
        for v in cyc:
            if not 0 <= v < n:
                return False, f"vertex {v} out of range"
        if len(set(cyc)) != len(cyc):
            return False, "vertex repeated within a cycle"
        if seen.intersection(cyc):
            return False, "not vertex-disjoint"
        seen.update(cyc)
    if len(seen) != n:
        return False, "does not cover all vertices"
    return True, "ok"


def is_monochromatic(g: ColoredCompleteGraph, cover) -> list[Optional[int]]:
    """Per cycle: its single color, or ``None`` if the cycle mixes colors."""
    ok, why = validate_cover(g.n, cover)
    if not ok:
        raise InputError(f"invalid cover: {why}")
    out = []
    for cyc in (cover.cycles if isinstance(cover, CycleCover) else cover):
        cols = {g.color(u, v) for u, v in cycle_edges(cyc)}
        out.append(cols.pop() if len(cols) == 1 else None)
    return out


def single_color(g: ColoredCompleteGraph, cover) -> Optional[int]:
    """The one color shared by every edge of the cover, if there is one."""
    cols = is_monochromatic(g, cover)
    if cols and all(c is not None and c == cols[0] for c in cols):
        return cols[0]
    return None
