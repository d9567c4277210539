"""Line-oriented text formats for instances and covers.

Instance file::

    mrc3 v1
    n <order> colors <k>
    e <u> <v> <color>        one per edge, u < v
    r <c1> <c2> <cost>       one per unordered color pair (both orders if asymmetric)

``#`` starts a comment. Covers are one cycle per line, vertex ids separated
by spaces. Writers emit canonical order so output is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np

from .graph_core import ColoredCompleteGraph, CycleCover, SimpleGraph
from .reduction import GeneralInstance
from .reload import ReloadCostMatrix, is_symmetric

MAGIC = "mrc3 v1"
PathLike = Union[str, Path]


class ParseError(ValueError):
    pass


@dataclass(eq=False)
class InstanceFile:
    n: int
    k: int
    colors: np.ndarray = field(repr=False)   # n x n, -1 where there is no edge
    rho: ReloadCostMatrix

    @property
    def is_complete(self) -> bool:
        off = ~np.eye(self.n, dtype=bool)
        return bool((self.colors[off] >= 0).all())

    def complete_graph(self) -> ColoredCompleteGraph:
        if not self.is_complete:
            raise ParseError("instance is not complete: some vertex pairs have no edge")
        return ColoredCompleteGraph(self.n, self.colors, self.k)

    def general(self) -> GeneralInstance:
        return GeneralInstance(SimpleGraph(self.n, self.colors >= 0), self.colors, self.rho)

    @classmethod
    def from_complete(cls, g: ColoredCompleteGraph, rho: ReloadCostMatrix) -> "InstanceFile":
        return cls(g.n, g.k, np.array(g.chi), rho)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(no: int, toks: list[str]) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(f"line {no}: expected integers, got {' '.join(toks)!r}") from None


def parse_instance(text: str, asymmetric: bool = False) -> InstanceFile:
    lines = list(_lines(text))
    if not lines or " ".join(lines[0][1]) != MAGIC:
        raise ParseError(f"first line must be {MAGIC!r}")
    if len(lines) < 2:
        raise ParseError("missing 'n <order> colors <k>' line")
    no, toks = lines[1]
    if len(toks) != 4 or toks[0] != "n" or toks[2] != "colors":
        raise ParseError(f"line {no}: expected 'n <order> colors <k>'")
    n, k = _ints(no, [toks[1], toks[3]])
    if n < 1 or k < 1:
        raise ParseError(f"line {no}: order and color count must be positive")
    colors = np.full((n, n), -1, dtype=np.int32)
    given: dict[tuple[int, int], int] = {}
    for no, toks in lines[2:]:
        tag, args = toks[0], _ints(no, toks[1:])
        if tag == "e":
            if len(args) != 3:
                raise ParseError(f"line {no}: expected 'e <u> <v> <color>'")
            u, v, c = args
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ParseError(f"line {no}: bad edge {u} {v}")
            if not 0 <= c < k:
                raise ParseError(f"line {no}: color {c} outside 0..{k - 1}")
            if colors[u, v] >= 0:
                raise ParseError(f"line {no}: duplicate edge {u} {v}")
            colors[u, v] = colors[v, u] = c
        elif tag == "r":
            if len(args) != 3:
                raise ParseError(f"line {no}: expected 'r <c1> <c2> <cost>'")
            a, b, cost = args
            if not (0 <= a < k and 0 <= b < k):
                raise ParseError(f"line {no}: color outside 0..{k - 1}")
            if cost < 0:
                raise ParseError(f"line {no}: negative reload cost")
            if a == b:
                if cost:
                    raise ParseError(f"line {no}: rho({a},{a}) must be 0")
                continue
            if (a, b) in given:
                raise ParseError(f"line {no}: duplicate reload cost for ({a},{b})")
            given[(a, b)] = cost
        else:
            raise ParseError(f"line {no}: unknown record {tag!r}")
    rho = [[0] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            if (a, b) in given:
                rho[a][b] = given[(a, b)]
                if (b, a) in given and given[(b, a)] != given[(a, b)] and not asymmetric:
                    raise ParseError(f"asymmetric reload costs for ({a},{b}); use --asymmetric")
            elif (b, a) in given:
                rho[a][b] = given[(b, a)]
            else:
                raise ParseError(f"missing reload cost for colors ({min(a, b)},{max(a, b)})")
    try:
        m = ReloadCostMatrix(tuple(map(tuple, rho)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return InstanceFile(n, k, colors, m)


def format_instance(inst: InstanceFile) -> str:
    out = [MAGIC, f"n {inst.n} colors {inst.k}"]
    for u in range(inst.n):
        for v in range(u + 1, inst.n):
            c = int(inst.colors[u, v])
            if c >= 0:
                out.append(f"e {u} {v} {c}")
    sym = is_symmetric(inst.rho)
    for a in range(inst.k):
        for b in range(inst.k):
            if a != b and (a < b or not sym):
                out.append(f"r {a} {b} {inst.rho.rho[a][b]}")
    return "\n".join(out) + "\n"


def read_instance(path: PathLike, asymmetric: bool = False) -> InstanceFile:
    return parse_instance(Path(path).read_text(), asymmetric=asymmetric)


def write_instance(path: PathLike, inst: InstanceFile) -> None:
    Path(path).write_text(format_instance(inst))


def parse_cover(text: str) -> CycleCover:
    return CycleCover(_ints(no, toks) for no, toks in _lines(text))


def format_cover(cover: CycleCover) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in cover.canonical())


def read_cover(path: PathLike) -> CycleCover:
    return parse_cover(Path(path).read_text())


def write_cover(path: PathLike, cover: CycleCover) -> None:
    Path(path).write_text(format_cover(cover))
