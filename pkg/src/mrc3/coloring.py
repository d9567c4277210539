"""Equitable and nearly equitable 2-edge-colorings of complete graphs.

Generators are seeded with a single integer that feeds Python's
``random.Random`` (MT19937), so a seed reproduces the same instance.
"""

from __future__ import annotations

import enum
import random
from typing import Optional

import numpy as np

from .graph_core import BLUE, RED, ColoredCompleteGraph, InfeasibleError, InputError


class ColoringClass(enum.Enum):
    EQUITABLE = "Equitable"
    NEARLY_EQUITABLE_ONLY = "NearlyEquitableOnly"
    NEITHER = "Neither"


def require_two_colors(g: ColoredCompleteGraph) -> None:
    used = g.colors_used()
    if not used <= {RED, BLUE}:
        raise InputError(f"expected a 2-edge-coloring, found colors {sorted(used)}")


def color_gaps(g: ColoredCompleteGraph) -> np.ndarray:
    """Per-vertex ``| |red(v)| - |blue(v)| |``."""
    red = np.count_nonzero(g.chi == RED, axis=1)
    return np.abs(2 * red - (g.n - 1))


def classify(g: ColoredCompleteGraph) -> ColoringClass:
    require_two_colors(g)
    worst = int(color_gaps(g).max()) if g.n else 0
    if worst <= 1:
        return ColoringClass.EQUITABLE
    if worst == 2:
        return ColoringClass.NEARLY_EQUITABLE_ONLY
    return ColoringClass.NEITHER


def equitable_feasible(n: int) -> bool:
    """K_n has an equitable 2-edge-coloring iff n is not 3 mod 4."""
    if n < 3:
        raise InputError("order must be at least 3")
    return n % 4 != 3


# -- base constructions -------------------------------------------------------

def round_robin_matchings(n: int) -> list[list[tuple[int, int]]]:
    """The n-1 perfect matchings of the circle-method 1-factorization of K_n, n even."""
    if n % 2:
        raise InputError("round-robin factorization needs even n")
    m = n - 1
    rounds = []
    for r in range(m):
        pairs = [(r, n - 1)]
        for i in range(1, n // 2):
            pairs.append(((r + i) % m, (r - i) % m))
        rounds.append(pairs)
    return rounds


def walecki_cycles(n: int) -> list[list[int]]:
    """Decomposition of K_n, n odd, into (n-1)/2 Hamiltonian cycles."""
    if n % 2 == 0 or n < 3:
        raise InputError("Walecki decomposition needs odd n >= 3")
    m = (n - 1) // 2
    hub = n - 1
    cycles = []
    for j in range(m):
        seq = [j]
        for t in range(1, m):
            seq += [(j + t) % (2 * m), (j - t) % (2 * m)]
        seq.append((j + m) % (2 * m))
        cycles.append([hub] + seq)
    return cycles


def _from_cycles(n: int, cycles: list[list[int]], colors: list[int]) -> list[list[int]]:
    chi = [[-1] * n for _ in range(n)]
    for cyc, c in zip(cycles, colors):
        for i in range(len(cyc)):
            u, v = cyc[i], cyc[(i + 1) % len(cyc)]
            chi[u][v] = chi[v][u] = c
    return chi


def _from_matchings(n: int, matchings, colors: list[int]) -> list[list[int]]:
    chi = [[-1] * n for _ in range(n)]
    for pairs, c in zip(matchings, colors):
        for u, v in pairs:
            chi[u][v] = chi[v][u] = c
    return chi


# -- random walks over colorings ----------------------------------------------

def _try_swap(chi: list[list[int]], n: int, rng: random.Random, attempts: int = 64) -> bool:
    """Recolor one alternating 4-cycle; preserves every color degree."""
    if n < 4:
        return False
    rand = rng.randrange
    for _ in range(attempts):
        u, v, w, x = rand(n), rand(n), rand(n), rand(n)
        if len({u, v, w, x}) < 4:
            continue
        c = chi[u][v]
        if chi[v][w] != c and chi[w][x] == c and chi[x][u] != c:
            d = chi[v][w]
            chi[u][v] = chi[v][u] = d
            chi[w][x] = chi[x][w] = d
            chi[v][w] = chi[w][v] = c
            chi[x][u] = chi[u][x] = c
            return True
    return False


def _try_flip(chi: list[list[int]], red: list[int], n: int, lo: int, hi: int,
              rng: random.Random) -> bool:
    """Recolor one edge, keeping every red degree inside [lo, hi]."""
    u, v = rng.randrange(n), rng.randrange(n)
    if u == v:
        return False
    if chi[u][v] == RED:
        if red[u] > lo and red[v] > lo:
            chi[u][v] = chi[v][u] = BLUE
            red[u] -= 1
            red[v] -= 1
            return True
    elif red[u] < hi and red[v] < hi:
        chi[u][v] = chi[v][u] = RED
        red[u] += 1
        red[v] += 1
        return True
    return False


def _shuffle_and_walk(n: int, chi: list[list[int]], rng: random.Random,
                      lo: int, hi: int) -> list[list[int]]:
    perm = list(range(n))
    rng.shuffle(perm)
    chi = [[chi[perm[u]][perm[v]] for v in range(n)] for u in range(n)]
    if rng.random() < 0.5:
        chi = [[1 - x if x >= 0 else x for x in row] for row in chi]
    red = [row.count(RED) for row in chi]
    steps = n * n
    for _ in range(steps):
        if lo < hi and rng.random() < 0.5:
            _try_flip(chi, red, n, lo, hi, rng)
        else:
            _try_swap(chi, n, rng, attempts=8)
    return chi


def _to_graph(n: int, chi: list[list[int]]) -> ColoredCompleteGraph:
    return ColoredCompleteGraph(n, np.array(chi, dtype=np.int32))


def _equitable_base(n: int) -> list[list[int]]:
    if n % 2 == 0:
        return _from_matchings(n, round_robin_matchings(n), [i % 2 for i in range(n - 1)])
    cycles = walecki_cycles(n)
    return _from_cycles(n, cycles, [i % 2 for i in range(len(cycles))])


def generate_equitable(n: int, seed: int = 0) -> ColoredCompleteGraph:
    """A random equitable 2-edge-coloring of K_n.

    Starts from an alternately colored 1-factorization (even n) or Hamiltonian
    decomposition (n = 1 mod 4), relabels, and walks over equitable colorings.
    """
    if n < 3 or not equitable_feasible(n):
        raise InfeasibleError(f"K_{{4k+3}} admits no equitable 2-edge-coloring (n = {n})")
    rng = random.Random(seed)
    k = n // 2
    lo, hi = (k - 1, k) if n % 2 == 0 else (k, k)
    g = _to_graph(n, _shuffle_and_walk(n, _equitable_base(n), rng, lo, hi))
    assert classify(g) is ColoringClass.EQUITABLE
    return g


def generate_nearly_equitable(n: int, force_non_equitable: bool = True,
                              seed: int = 0) -> ColoredCompleteGraph:
    """A random nearly equitable 2-edge-coloring of K_n.

    With ``force_non_equitable`` the result has some vertex whose two color
    degrees differ by exactly 2, which needs odd n.
    """
    if n < 3:
        raise InputError("order must be at least 3")
    if force_non_equitable and n % 2 == 0:
        raise InfeasibleError(f"every nearly equitable 2-edge-coloring of K_{n} is equitable (n even)")
    rng = random.Random(seed)
    k = n // 2
    if n % 2 == 0:
        base, lo, hi = _equitable_base(n), k - 1, k
    else:
        cycles = walecki_cycles(n)
        # n = 3 mod 4 has an odd number of cycles, so red gets one extra
        colors = [i % 2 for i in range(len(cycles))]
        base, lo, hi = _from_cycles(n, cycles, colors), k - 1, k + 1
    chi = _shuffle_and_walk(n, base, rng, lo, hi)
    if force_non_equitable:
        red = [row.count(RED) for row in chi]
        if all(r == k for r in red):
            u, v = rng.sample(range(n), 2)
            chi[u][v] = chi[v][u] = 1 - chi[u][v]
    g = _to_graph(n, chi)
    cls = classify(g)
    if force_non_equitable:
        assert cls is ColoringClass.NEARLY_EQUITABLE_ONLY
    else:
        assert cls is not ColoringClass.NEITHER
    return g


def find_alternating_square(g: ColoredCompleteGraph,
                            rng: Optional[random.Random] = None) -> Optional[tuple[int, int, int, int]]:
    """Some (u, v, w, x) with uv, wx red and vw, xu blue, or None if there is none."""
    R = (g.chi == RED).astype(np.int64)
    B = (g.chi == BLUE).astype(np.int64)
    ok = ((R @ B) > 0) & ((B @ R) > 0)
    np.fill_diagonal(ok, False)
    us, ws = np.nonzero(ok)
    if len(us) == 0:
        return None
    i = rng.randrange(len(us)) if rng else 0
    u, w = int(us[i]), int(ws[i])
    vs = np.flatnonzero((R[u] > 0) & (B[:, w] > 0)).tolist()
    xs = np.flatnonzero((B[u] > 0) & (R[:, w] > 0)).tolist()
    v = rng.choice(vs) if rng else vs[0]
    x = rng.choice(xs) if rng else xs[0]
    return u, v, w, x


def random_equitable_walk(g: ColoredCompleteGraph, steps: int, seed: int = 0) -> ColoredCompleteGraph:
    """Perform ``steps`` alternating 4-cycle recolorings; color degrees never change."""
    if classify(g) is not ColoringClass.EQUITABLE:
        raise InputError("random_equitable_walk needs an equitable coloring")
    if steps <= 0:
        return g
    rng = random.Random(seed)
    n = g.n
    chi = g.chi.tolist()
    for _ in range(steps):
        if not _try_swap(chi, n, rng):
            sq = find_alternating_square(_to_graph(n, chi), rng)
            if sq is None:
                break
            _apply_square(chi, sq)
    out = _to_graph(n, chi)
    if out == g:
        sq = find_alternating_square(g, rng)
        if sq is not None:
            _apply_square(chi, sq)
            out = _to_graph(n, chi)
    return out


def _apply_square(chi: list[list[int]], sq: tuple[int, int, int, int]) -> None:
    u, v, w, x = sq
    for a, b in ((u, v), (v, w), (w, x), (x, u)):
        chi[a][b] = chi[b][a] = 1 - chi[a][b]
