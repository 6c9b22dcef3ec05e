"""
Milnor fillability and the comparison of the constructed horizontal open
book with Milnor open books.

For a binding vector ``n`` (fibres of each bundle lying in the binding) the
open book is isomorphic to a Milnor open book when the intersection matrix
``I`` is negative definite and

1. ``n_i >= d_i + 2 g_i`` at every vertex, and
2. ``I m = -n`` has a solution ``m`` of non-negative integers.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from . import linalg
from .errors import EmptyBindingError, PlumbookError, SingularMatrixError
from .graph import PlumbingGraph, degrees, intersection_matrix, is_non_positive, is_simple_tree, slacks
from .openbook import synthesize

MILNOR_ISOMORPHIC = "milnor_isomorphic"
NOT_APPLICABLE = "not_applicable"
FAILS = "fails"


@dataclass(frozen=True)
class MilnorReport:
    negative_definite: bool
    n: Tuple[int, ...]
    condition1: Tuple[bool, ...]
    m: Optional[Tuple[Fraction, ...]]
    m_nonneg_integral: bool
    fast_path: bool
    uniqueness_applicable: bool
    verdict: str
    reasons: Tuple[str, ...] = ()

    @property
    def verdict_line(self) -> str:
        if self.reasons:
            return f"{self.verdict} ({'; '.join(self.reasons)})"
        return self.verdict


def milnor_fillable(graph: PlumbingGraph) -> bool:
    return linalg.is_negative_definite(intersection_matrix(graph))


def fast_path_holds(graph: PlumbingGraph) -> bool:
    """
    e_i + 2 d_i + 2 g_i <= 0 everywhere, with non-empty binding at every vertex.

    The second clause only matters for a lone e = 0 sphere bundle, which has
    no edges to force e_i + d_i < 0.
    """
    return all(
        v.euler + 2 * d + 2 * v.genus <= 0 and v.euler + d < 0
        for v, d in zip(graph.vertices, degrees(graph))
    )


def milnor_report(graph: PlumbingGraph, n: Optional[Sequence[int]] = None) -> MilnorReport:
    """
    Evaluate both conditions for ``n`` (default: the binding vector of the
    synthesized open book).

    Raises EmptyBindingError when the default open book does not exist or a
    user-supplied ``n`` is identically zero.
    """
    k = len(graph.vertices)
    ob = synthesize(graph)
    default_n = tuple(c for _, c in ob.binding_vector)
    if n is None:
        n = default_n
    else:
        n = tuple(int(x) for x in n)
        if len(n) != k:
            raise PlumbookError(f"binding vector has {len(n)} entries, graph has {k} vertices")
        if any(x < 0 for x in n):
            raise PlumbookError("binding vector entries must be non-negative")
        if not any(n):
            raise EmptyBindingError("empty binding: n is identically zero")

    I = intersection_matrix(graph)
    negdef = linalg.is_negative_definite(I)
    d = degrees(graph)
    cond1 = tuple(ni >= di + 2 * v.genus for ni, di, v in zip(n, d, graph.vertices))
    try:
        m = linalg.solve_exact(I, [-x for x in n])
        nonsingular = True
    except SingularMatrixError:
        m, nonsingular = None, False
    m_ok = m is not None and all(x.denominator == 1 and x >= 0 for x in m)
    fast = fast_path_holds(graph) and n == default_n
    uniq = nonsingular and all(x > 0 for x in n)

    nonpos, _ = is_non_positive(graph)
    if not ob.verdicts.horizontal:
        verdict, reasons = NOT_APPLICABLE, ("open book not horizontal",)
    elif not all(x > 0 for x in n):
        verdict, reasons = NOT_APPLICABLE, ("n has zero entries",)
    else:
        reasons = []
        if not negdef:
            reasons.append("intersection matrix not negative definite")
        bad = [graph.ids[i] for i, ok in enumerate(cond1) if not ok]
        if bad:
            reasons.append("n_i < d_i + 2g_i at " + ",".join(bad))
        if m is None:
            reasons.append("I m = -n has no unique solution")
        elif not m_ok:
            reasons.append("m is not a non-negative integer vector")
        verdict = FAILS if reasons else MILNOR_ISOMORPHIC
        reasons = tuple(reasons)
    assert (verdict == MILNOR_ISOMORPHIC) == (negdef and nonpos and all(cond1) and m_ok)
    if fast:
        assert m == (1,) * k and verdict == MILNOR_ISOMORPHIC, (m, verdict)
    return MilnorReport(negdef, n, cond1, m, m_ok, fast, uniq, verdict, reasons)


def planar_milnor_criterion(graph: PlumbingGraph) -> bool:
    """
    Tree of sphere bundles with e_i + 2 d_i <= 0 at every vertex, which makes
    the open book planar, horizontal and Milnor-isomorphic.

    Like ``fast_path_holds`` this also demands e_i + d_i < 0, which only
    excludes the lone e = 0 sphere bundle.
    """
    return (
        is_simple_tree(graph)
        and all(v.genus == 0 for v in graph.vertices)
        and all(v.euler + 2 * d <= 0 for v, d in zip(graph.vertices, degrees(graph)))
        and all(s < 0 for s in slacks(graph))
    )
