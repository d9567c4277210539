"""Hamiltonian cycle constructions on dense simple graphs.

Every constructor returns a vertex list (the cycle, closing edge implicit)
or ``None``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .graph_core import InputError, SimpleGraph

HamiltonResult = Optional[list[int]]


def is_hamiltonian_cycle(g: SimpleGraph, cycle: Optional[Sequence[int]]) -> bool:
    if cycle is None or g.n < 3 or len(cycle) != g.n or set(cycle) != set(range(g.n)):
        return False
    return all(g.adj[cycle[i - 1], cycle[i]] for i in range(g.n))


# -- Dirac ------------------------------------------------------------------

def _extend_maximal(path: list[int], on: set[int], nbrs) -> None:
    """Grow ``path`` at the tail, then the head, by lowest-numbered free neighbors."""
    while True:
        free = [w for w in nbrs[path[-1]] if w not in on]
        if free:
            w = min(free)
            path.append(w)
            on.add(w)
            continue
        free = [w for w in nbrs[path[0]] if w not in on]
        if free:
            w = min(free)
            path.insert(0, w)
            on.add(w)
            continue
        return


def _close_path(path: list[int], adj) -> Optional[list[int]]:
    """Turn x_0..x_k into a cycle via x_0 x_{i+1} and x_i x_k, lowest i first."""
    k = len(path) - 1
    if k < 2:
        return None
    x0, xk = path[0], path[k]
    for i in range(k):
        if adj[x0, path[i + 1]] and adj[path[i], xk]:
            return path[:1] + path[i + 1:] + path[i:0:-1]
    return None


def dirac_hamiltonian(g: SimpleGraph) -> HamiltonResult:
    """Maximal path, rotate to a cycle, re-open through an outside vertex, repeat.

    Guaranteed to succeed when n >= 3 and min degree >= n/2; may still
    succeed below that bound.
    """
    n = g.n
    if n < 3:
        return None
    nbrs, adj = g.nbrs, g.adj
    path = [0]
    on = {0}
    while True:
        _extend_maximal(path, on, nbrs)
        cycle = _close_path(path, adj)
        if cycle is None:
            return None
        if len(cycle) == n:
            return cycle
        in_c = set(cycle)
        hook = None
        for w in range(n):
            if w not in in_c:
                touch = nbrs[w] & in_c
                if touch:
                    hook = (w, min(touch))
                    break
        if hook is None:
            return None
        w, c = hook
        p = cycle.index(c)
        L = len(cycle)
        after, before = cycle[(p + 1) % L], cycle[p - 1]
        if after < before:
            # drop edge c-after: walk backwards from c, ending at after
            path = [w] + [cycle[(p - t) % L] for t in range(L)]
        else:
            path = [w] + [cycle[(p + t) % L] for t in range(L)]
        on = set(path)


# -- closure ------------------------------------------------------------------

def closure_stages(g: SimpleGraph) -> tuple[np.ndarray, list[list[tuple[int, int]]]]:
    """Closure adjacency plus the edges added in each round.

    Every edge of round t already meets the degree-sum condition in the graph
    built by rounds before t, so rounds may be added whole.
    """
    n = g.n
    a = g.adj.copy()
    stages = []
    off = ~np.eye(n, dtype=bool)
    while True:
        d = a.sum(axis=1)
        add = ~a & off & ((d[:, None] + d[None, :]) >= n)
        if not add.any():
            return a, stages
        us, vs = np.nonzero(np.triu(add, 1))
        stages.append(list(zip(us.tolist(), vs.tolist())))
        a |= add


def closure(g: SimpleGraph) -> SimpleGraph:
    """Join non-adjacent pairs with degree sum >= n until none remain."""
    return SimpleGraph(g.n, closure_stages(g)[0])


def closure_hamiltonian(g: SimpleGraph) -> HamiltonResult:
    """Hamiltonian cycle of ``g`` when its closure is complete, else None.

    Start with 0..n-1 as a cycle of the closure and drop added edges in
    reverse order; whenever the cycle uses the dropped edge x_0 x_k, open it
    there and re-close with a crossing pair x_0 x_{i+1}, x_i x_k.
    """
    n = g.n
    if n < 3:
        return None
    a, stages = closure_stages(g)
    if a.sum() != n * (n - 1):
        return None
    cycle = list(range(n))
    budget = sum(len(s) for s in stages) + n
    for stage in reversed(stages):
        for u, v in stage:
            a[u, v] = a[v, u] = False
        for u, v in stage:
            pos = {x: i for i, x in enumerate(cycle)}
            i, j = pos[u], pos[v]
            if (i - j) % n == 1:
                i, j = j, i
            if (j - i) % n != 1:
                continue
            budget -= 1
            if budget < 0:
                return None
            # cycle uses u-v; open the path so that it runs v ... u
            path = cycle[j:] + cycle[:j]
            x0, xk = path[0], path[-1]
            for t in range(1, n - 2):
                if a[x0, path[t + 1]] and a[path[t], xk]:
                    cycle = path[:1] + path[t + 1:] + path[t:0:-1]
                    break
            else:
                return None
    return cycle if is_hamiltonian_cycle(g, cycle) else None


# -- exceptional families --------------------------------------------------------

class Exceptional(enum.Enum):
    TWO_CLIQUES_ONE_CUT = "TwoCliquesOneCut"
    INDEPENDENT_JOIN = "IndependentJoin"
    NOT_EXCEPTIONAL = "NotExceptional"


def detect_exceptional(g: SimpleGraph) -> Exceptional:
    """Recognise the two non-Hamiltonian families with min degree floor(n/2), n odd.

    TwoCliquesOneCut: two cliques of order ceil(n/2) sharing exactly one vertex.
    IndependentJoin: an independent set of order ceil(n/2) completely joined to
    the remaining floor(n/2) vertices (which may induce anything).
    """
    n = g.n
    if n < 3 or n % 2 == 0:
        return Exceptional.NOT_EXCEPTIONAL
    half = (n - 1) // 2
    nbrs = g.nbrs
    if g.edge_count == 2 * (half + 1) * half // 2:
        for x in range(n):
            if len(nbrs[x]) != n - 1:
                continue
            comps = g.components(removed=[x])
            if len(comps) == 2 and all(len(c) == half for c in comps):
                if all(len(nbrs[v]) == half for c in comps for v in c):
                    return Exceptional.TWO_CLIQUES_ONE_CUT
    everyone = frozenset(range(n))
    for v in range(n):
        if len(nbrs[v]) != half:
            continue
        rest = nbrs[v]
        ind = everyone - rest
        if all(nbrs[u] == rest for u in ind):
            return Exceptional.INDEPENDENT_JOIN
    return Exceptional.NOT_EXCEPTIONAL


# -- fallbacks used by the extension construction ---------------------------------

def posa_hamiltonian(g: SimpleGraph, restarts: Optional[int] = None,
                     steps: Optional[int] = None) -> HamiltonResult:
    """Randomised rotation-extension; restart r is seeded with r."""
    n = g.n
    if n < 3:
        return None
    nbrs = [sorted(s) for s in g.nbrs]
    adj = g.adj
    restarts = n * n if restarts is None else restarts
    steps = 10 * n * n if steps is None else steps
    for r in range(restarts):
        rng = random.Random(r)
        path = [rng.randrange(n)]
        on = {path[0]}
        for _ in range(steps):
            end = path[-1]
            if len(path) == n and adj[end, path[0]]:
                return path
            free = [w for w in nbrs[end] if w not in on]
            if free:
                w = rng.choice(free)
                path.append(w)
                on.add(w)
                continue
            where = {x: i for i, x in enumerate(path)}
            pivots = [where[w] for w in nbrs[end] if where[w] < len(path) - 2]
            if not pivots:
                path.reverse()
                continue
            i = rng.choice(pivots)
            path[i + 1:] = path[:i:-1]
    return None


def dp_hamiltonian(g: SimpleGraph) -> HamiltonResult:
    """Exact bitmask dynamic program over paths starting at vertex 0."""
    n = g.n
    if n < 3:
        return None
    nb = [0] * n
    for v in range(n):
        for w in g.nbrs[v]:
            nb[v] |= 1 << w
    full = (1 << n) - 1
    # ends[mask]: bitset of v such that some path 0 -> v uses exactly mask
    ends = [0] * (1 << n)
    ends[1] = 1
    for mask in range(1, 1 << n, 2):
        e = ends[mask]
        while e:
            low = e & -e
            v = low.bit_length() - 1
            e ^= low
            ext = nb[v] & ~mask
            while ext:
                b = ext & -ext
                ext ^= b
                ends[mask | b] |= b
    last = ends[full] & nb[0] & ~1
    if not last:
        return None
    v = (last & -last).bit_length() - 1
    mask = full
    path = [v]
    while mask != 1:
        prev_mask = mask & ~(1 << v)
        cands = ends[prev_mask] & nb[v]
        u = (cands & -cands).bit_length() - 1
        path.append(u)
        mask, v = prev_mask, u
    path.reverse()
    return path


def extension_dirac_hamiltonian(g: SimpleGraph, dp_limit: int = 20) -> HamiltonResult:
    """Hamiltonian cycle for connected g with min degree >= floor(n/2).

    Returns None exactly on the exceptional families. Tries, in order,
    the Dirac and closure constructions, seeded rotation-extension, and an
    exact dynamic program for n <= ``dp_limit``.
    """
    n = g.n
    if n < 3 or not g.is_connected() or g.min_degree < n // 2:
        raise InputError("needs a connected graph of order >= 3 with min degree >= floor(n/2)")
    if detect_exceptional(g) is not Exceptional.NOT_EXCEPTIONAL:
        return None
    for build in (dirac_hamiltonian, closure_hamiltonian, posa_hamiltonian):
        cyc = build(g)
        if is_hamiltonian_cycle(g, cyc):
            return cyc
    if n <= dp_limit:
        cyc = dp_hamiltonian(g)
        if is_hamiltonian_cycle(g, cyc):
            return cyc
    return None


# -- sufficiency predicates -----------------------------------------------------

def independence_number(g: SimpleGraph) -> int:
    """Exact maximum independent set size by branch and bound on bitmasks."""
    n = g.n
    nb = [0] * n
    for v in range(n):
        for w in g.nbrs[v]:
            nb[v] |= 1 << w
    best = 0

    def go(cand: int, size: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        # a vertex of degree <= 1 inside cand can always be taken
        pick, pick_deg = -1, -1
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            d = bin(nb[v] & cand).count("1")
            if d <= 1:
                go(cand & ~nb[v] & ~low, size + 1)
                return
            if d > pick_deg:
                pick, pick_deg = v, d
        bit = 1 << pick
        go(cand & ~nb[pick] & ~bit, size + 1)
        go(cand & ~bit, size)

    go((1 << n) - 1, 0)
    return best


def bipartition(g: SimpleGraph) -> Optional[tuple[list[int], list[int]]]:
    """A balanced 2-coloring of g if one exists (components may be flipped)."""
    side = [-1] * g.n
    comps = []
    for comp in g.components():
        s = comp[0]
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.nbrs[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
        comps.append(comp)
    if len(comps) > 16:
        return None
    for flips in product((0, 1), repeat=len(comps)):
        left = [v for comp, f in zip(comps, flips) for v in comp if side[v] ^ f == 0]
        if 2 * len(left) == g.n:
            right = sorted(set(range(g.n)) - set(left))
            return sorted(left), right
    return None


@dataclass(frozen=True)
class Sufficiency:
    dirac: bool
    chvatal_degree_sequence: bool
    nash_williams: bool
    moon_moser: bool


def chvatal_condition(g: SimpleGraph) -> bool:
    """No m < n/2 with d_m <= m and d_{n-m} < n-m (degrees sorted, 1-indexed)."""
    n = g.n
    d = sorted(g.degrees.tolist())
    for m in range(1, (n + 1) // 2):
        if 2 * m < n and d[m - 1] <= m and d[n - m - 1] < n - m:
            return False
    return True


def moon_moser_condition(g: SimpleGraph, parts: Optional[tuple[Sequence[int], Sequence[int]]] = None) -> bool:
    if parts is None:
        parts = bipartition(g)
        if parts is None:
            return False
    left, right = list(parts[0]), list(parts[1])
    m = len(left)
    if m != len(right) or m < 2 or sorted(left + right) != list(range(g.n)):
        return False
    ls = set(left)
    if any(g.adj[u, v] for u in left for v in left if u != v) or \
            any(g.adj[u, v] for u in right for v in right if u != v):
        return False
    deg = g.degrees
    sums = [deg[u] + deg[v] for u in ls for v in right if not g.adj[u, v]]
    return min(sums, default=m + 1) >= m + 1


def sufficiency_predicates(g: SimpleGraph, parts=None) -> Sufficiency:
    n = g.n
    dirac = n >= 3 and 2 * g.min_degree >= n
    nash = False
    if g.is_two_connected():
        delta = g.min_degree
        nash = 3 * delta >= n + 2 and delta >= independence_number(g)
    return Sufficiency(
        dirac=dirac,
        chvatal_degree_sequence=n >= 3 and chvatal_condition(g),
        nash_williams=nash,
        moon_moser=moon_moser_condition(g, parts),
    )
