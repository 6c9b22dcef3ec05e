"""Seifert invariants {g, n; r_1, ..., r_k} and their star-shaped plumbing graphs."""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import SeifertConventionError
from .graph import Edge, PlumbingGraph, VertexData


@dataclass(frozen=True)
class SeifertInvariants:
    base_genus: int
    central_euler: int
    ratios: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.base_genus < 0:
            raise SeifertConventionError("base genus must be non-negative")
        ratios = tuple(Fraction(r) for r in self.ratios)
        for r in ratios:
            if not 0 < r < 1:
                raise SeifertConventionError(
                    f"ratio {r} outside (0, 1); ratios are normalized as 0 < p/q < 1"
                )
        object.__setattr__(self, "ratios", ratios)


def hj_expansion(x) -> Tuple[int, ...]:
    """Coefficients b_1, ..., b_s >= 2 with x = b_1 - 1/(b_2 - 1/(... - 1/b_s))."""
    x = Fraction(x)
    if x <= 1:
        raise SeifertConventionError(f"continued fraction expansion needs x > 1, got {x}")
    coeffs = []
    while True:
        b = math.ceil(x)
        coeffs.append(b)
        if b == x:
            return tuple(coeffs)
        x = 1 / (b - x)


def hj_evaluate(coeffs: Sequence[int]) -> Fraction:
    value = Fraction(coeffs[-1])
    for b in reversed(coeffs[:-1]):
        value = b - 1 / value
    return value


def star_graph(s: SeifertInvariants) -> PlumbingGraph:
    """
    Central vertex ``c`` (Euler number n, genus g) and one chain of sphere
    vertices ``a<i>_<j>`` per ratio, listed root to tip.
    """
    vertices = [VertexData("c", s.central_euler, s.base_genus)]
    edges = []
    for i, r in enumerate(s.ratios, start=1):
        prev = "c"
        for j, b in enumerate(hj_expansion(1 / r), start=1):
            vid = f"a{i}_{j}"
            vertices.append(VertexData(vid, -b, 0))
            edges.append(Edge(prev, vid))
            prev = vid
    return PlumbingGraph(tuple(vertices), tuple(edges))


def horizontal_criterion(s: SeifertInvariants) -> Tuple[bool, bool]:
    """``(n + k <= 0, g == 0)``: horizontal open book exists; it can be planar."""
    return s.central_euler + len(s.ratios) <= 0, s.base_genus == 0
