"""Monochromatic cycle covers of 2-edge-colored complete graphs.

``mcca`` tries red, then blue. For each color class G_i it runs the
Dirac test, the closure test, the floor(n/2) test (complete bipartite or
extension construction) and the cut-vertex constructions, returning the
first cover found. Every cover it returns uses one color only.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .coloring import require_two_colors
from .graph_core import (BLUE, RED, ColoredCompleteGraph, CycleCover, SimpleGraph,
                         induced_subgraph, validate_cover)
from .hamiltonicity import (closure, closure_hamiltonian, dirac_hamiltonian,
                            extension_dirac_hamiltonian, is_hamiltonian_cycle)
from .reload import ReloadCostMatrix, cover_cost


class Branch(enum.Enum):
    DIRAC = "DiracBranch"
    CLOSURE = "ClosureBranch"
    BIPARTITE_COMPLEMENT = "BipartiteComplementBranch"
    EXTENSION = "ExtensionBranch"
    CUT_VERTEX_UNEQUAL = "CutVertexUnequalBranch"
    CUT_VERTEX_EQUAL = "CutVertexEqualBranch"
    NONE = "NoneBranch"


@dataclass(frozen=True)
class ColorStats:
    color: int
    min_degree: int
    max_degree: int
    two_connected: bool


@dataclass
class MccaTrace:
    stats: list[ColorStats] = field(default_factory=list)
    tried: list[tuple[int, list[Branch]]] = field(default_factory=list)
    branch: Branch = Branch.NONE
    color: Optional[int] = None

    def is_case_2b(self, n: int) -> bool:
        """Both color classes 2-connected with degrees (n-3)/2 .. (n+1)/2."""
        if n % 2 == 0 or len(self.stats) != 2:
            return False
        k = n // 2
        return all(s.two_connected and s.min_degree == k - 1 and s.max_degree == k + 1
                   for s in self.stats)


def _lift(cycle, labels):
    return [labels[v] for v in cycle]


def _color_attempt(gi: SimpleGraph, n: int, attempted: list[Branch]):
    """One pass of the per-color case analysis; returns (cycles, branch, cover color flip)."""
    delta = gi.min_degree
    k = n // 2

    if 2 * delta >= n:
        attempted.append(Branch.DIRAC)
        c = dirac_hamiltonian(gi)
        if c is not None:
            return [c], Branch.DIRAC, False

    if closure(gi).is_complete():
        attempted.append(Branch.CLOSURE)
        c = closure_hamiltonian(gi)
        if c is not None:
            return [c], Branch.CLOSURE, False

    if delta == k:
        parts = _complete_bipartite_parts(gi)
        if parts is not None:
            attempted.append(Branch.BIPARTITE_COMPLEMENT)
            # each side is a clique in the other color
            c1, c2 = parts
            if len(c1) + len(c2) == n and len(c1) >= 3 and len(c2) >= 3:
                return [c1, c2], Branch.BIPARTITE_COMPLEMENT, True
        else:
            attempted.append(Branch.EXTENSION)
            try:
                c = extension_dirac_hamiltonian(gi)
            except ValueError:
                c = None
            if c is not None:
                return [c], Branch.EXTENSION, False

    cuts = gi.articulation_points()
    if cuts and k >= 4:
        x = cuts[0]
        comps = gi.components(removed=[x])
        if len(comps) == 2:
            a, b = sorted(comps, key=len)
            if len(b) > len(a):
                attempted.append(Branch.CUT_VERTEX_UNEQUAL)
                c1 = sorted(a + [x])
                c2 = dirac_hamiltonian(gi.induced(b))
                if c2 is not None and len(c1) >= 3 and is_hamiltonian_cycle(gi.induced(c1), list(range(len(c1)))):
                    return [c1, _lift(c2, b)], Branch.CUT_VERTEX_UNEQUAL, False
            else:
                attempted.append(Branch.CUT_VERTEX_EQUAL)
                na = len(gi.nbrs[x] & set(a))
                nb = len(gi.nbrs[x] & set(b))
                if nb > na or (nb == na and min(b) < min(a)):
                    a, b = b, a
                ha = dirac_hamiltonian(gi.induced(a))
                hb = dirac_hamiltonian(gi.induced(b))
                if ha is not None and hb is not None:
                    p = _lift(ha, a)
                    for j in range(len(p)):
                        y1, y2 = p[j], p[(j + 1) % len(p)]
                        if gi.adj[x, y1] and gi.adj[x, y2]:
                            c1 = p[:j + 1] + [x] + p[j + 1:]
                            return [c1, _lift(hb, b)], Branch.CUT_VERTEX_EQUAL, False
    return None, None, False


def _complete_bipartite_parts(g: SimpleGraph):
    """If g is K_{ceil(n/2), floor(n/2)}: (vertices of degree ceil, vertices of degree floor)."""
    n = g.n
    big, small = n - n // 2, n // 2
    if g.edge_count != big * small:
        return None
    if big == small:
        c1 = sorted(g.nbrs[0])
        c2 = sorted(set(range(n)) - set(c1))
    else:
        deg = g.degrees
        c1 = [v for v in range(n) if deg[v] == big]
        c2 = [v for v in range(n) if deg[v] == small]
    if len(c1) != small or len(c2) != big:
        return None
    for part in (c1, c2):
        if g.adj[np.ix_(part, part)].any():
            return None
    return c1, c2


def mcca(g: ColoredCompleteGraph) -> tuple[Optional[CycleCover], MccaTrace]:
    """Single-color monochromatic cycle cover, or None, plus a trace of the case analysis."""
    require_two_colors(g)
    n = g.n
    trace = MccaTrace()
    subgraphs = {c: induced_subgraph(g, c) for c in (RED, BLUE)}
    for c, gi in subgraphs.items():
        trace.stats.append(ColorStats(c, gi.min_degree, gi.max_degree, gi.is_two_connected()))
    if n < 3:
        return None, trace
    for c in (RED, BLUE):
        attempted: list[Branch] = []
        cycles, branch, flip = _color_attempt(subgraphs[c], n, attempted)
        trace.tried.append((c, attempted))
        if cycles is None:
            continue
        cover = CycleCover(cycles).canonical()
        cover_color = 1 - c if flip else c
        ok, _ = validate_cover(n, cover)
        if ok and all(g.color(u, v) == cover_color
                      for cyc in cover for u, v in zip(cyc, cyc[1:] + cyc[:1])):
            trace.branch = branch
            trace.color = cover_color
            return cover, trace
    trace.branch = Branch.NONE
    return None, trace


# -- MinRC3 front end ------------------------------------------------------------

class Status(enum.Enum):
    OPTIMAL = "optimal"
    ORACLE = "oracle"
    NEEDS_ORACLE = "needs-oracle"
    INCOMPLETE = "incomplete"


@dataclass
class CoverResult:
    cover: Optional[CycleCover]
    cost: Optional[int]
    status: Status
    trace: MccaTrace


def oracle_cap() -> int:
    return int(os.environ.get("MRC3_ORACLE_CAP", "12"))


def min_reload_cycle_cover(g: ColoredCompleteGraph, m: ReloadCostMatrix,
                           use_oracle: bool = True) -> CoverResult:
    """Zero-cost cover via ``mcca`` when it applies; otherwise escalate.

    If mcca fails and n is within the oracle cap, the exact solver is run
    when ``use_oracle`` is set (status ORACLE) or requested (NEEDS_ORACLE).
    Larger instances come back INCOMPLETE.
    """
    cover, trace = mcca(g)
    if cover is not None:
        return CoverResult(cover, cover_cost(g, m, cover), Status.OPTIMAL, trace)
    if g.n > oracle_cap():
        return CoverResult(None, None, Status.INCOMPLETE, trace)
    if not use_oracle:
        return CoverResult(None, None, Status.NEEDS_ORACLE, trace)
    from .oracle import solve_exact

    res = solve_exact(g, m)
    return CoverResult(res.witness, res.optimal_cost, Status.ORACLE, trace)
