"""
Explicit open books on plumbings of circle bundles.

The page is recorded by its numerical invariants; the monodromy is an
ordered product of Dehn twists along pairwise disjoint curves, each curve
named combinatorially:

* ``BoundaryCurve(vertex, index)``: parallel to the ``index``-th binding
  component coming from ``vertex``;
* ``NeckCurve(u, v, strand)``: the cocore of the neck created by the
  ``strand``-th copy of the edge ``u``-``v``.

Vertex i contributes a genus ``g_i`` piece with ``|e_i + d_i|`` binding
circles and ``d_i`` gluing circles; necks join the gluing circles pairwise.
"""
import re
from dataclasses import dataclass
from typing import Dict, Tuple, Union

from .errors import EmptyBindingError, ForeignCurveError, PlumbookError
from .graph import PlumbingGraph, bridges, cycle_rank, degrees, slacks

RIGHT, LEFT = 1, -1


@dataclass(frozen=True)
class PageInvariants:
    genus: int
    boundary_components: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary_components < 1:
            raise ValueError(f"not a page: genus {self.genus}, boundary {self.boundary_components}")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary_components


@dataclass(frozen=True)
class BoundaryCurve:
    vertex: str
    index: int
    separating: bool = True


@dataclass(frozen=True)
class NeckCurve:
    u: str
    v: str
    strand: int
    separating: bool

    @property
    def edge_label(self) -> str:
        return f"{self.u}-{self.v}"


CurveRef = Union[BoundaryCurve, NeckCurve]


@dataclass(frozen=True)
class DehnTwist:
    curve: CurveRef
    sign: int

    def __post_init__(self):
        if self.sign not in (RIGHT, LEFT):
            raise ValueError(f"twist sign must be +1 or -1, got {self.sign}")

    @property
    def handedness(self) -> str:
        return "right-handed" if self.sign == RIGHT else "left-handed"


@dataclass(frozen=True)
class Verdicts:
    horizontal: bool
    stein_certified: bool
    planar: bool


@dataclass(frozen=True)
class OpenBook:
    page: PageInvariants
    twists: Tuple[DehnTwist, ...]
    binding_vector: Tuple[Tuple[str, int], ...]
    verdicts: Verdicts

    @property
    def binding(self) -> Dict[str, int]:
        return dict(self.binding_vector)

    def count(self, sign: int) -> int:
        return sum(1 for t in self.twists if t.sign == sign)


def page_euler_characteristic(graph: PlumbingGraph, binding: Tuple[int, ...]) -> int:
    """Sum of the pieces' Euler characteristics; gluing along circles adds nothing."""
    return sum(
        2 - 2 * v.genus - n - d for v, n, d in zip(graph.vertices, binding, degrees(graph))
    )


def synthesize(graph: PlumbingGraph) -> OpenBook:
    """
    Build the open book on the plumbing described by ``graph``.

    Boundary-parallel twists come first (vertex order, then component index),
    then one right-handed neck twist per edge strand in edge order. The curves
    are disjoint, so the order only fixes a canonical presentation.
    """
    slack = slacks(graph)
    if len(graph.vertices) == 1 and slack[0] == 0:
        # canceling +1/-1 surgery pair on two fibres
        v = graph.vertices[0]
        binding = (2,)
        twists = (
            DehnTwist(BoundaryCurve(v.id, 0), RIGHT),
            DehnTwist(BoundaryCurve(v.id, 1), LEFT),
        )
        horizontal = False
    else:
        binding = tuple(abs(s) for s in slack)
        if not any(binding):
            raise EmptyBindingError("empty binding: every vertex has e + d = 0")
        twists = []
        for v, s, n in zip(graph.vertices, slack, binding):
            sign = RIGHT if s < 0 else LEFT
            twists.extend(DehnTwist(BoundaryCurve(v.id, k), sign) for k in range(n))
        cut = bridges(graph)
        for e in graph.edges:
            twists.extend(
                DehnTwist(NeckCurve(e.u, e.v, k, e in cut), RIGHT) for k in range(e.multiplicity)
            )
        twists = tuple(twists)
        horizontal = all(s <= 0 for s in slack)

    b = sum(binding)
    chi = page_euler_characteristic(graph, binding)
    genus2 = 2 - chi - b
    assert genus2 % 2 == 0 and genus2 >= 0, (chi, b)
    page = PageInvariants(genus2 // 2, b)
    stein = all(t.sign == RIGHT for t in twists)
    return OpenBook(
        page=page,
        twists=twists,
        binding_vector=tuple(zip(graph.ids, binding)),
        verdicts=Verdicts(horizontal, stein, page.genus == 0),
    )


def page_genus_from_graph(graph: PlumbingGraph) -> int:
    """Page genus as total base genus plus the number of independent graph cycles."""
    return sum(v.genus for v in graph.vertices) + cycle_rank(graph)


def classify_curve(graph: PlumbingGraph, curve: CurveRef) -> bool:
    """
    Whether cutting the page along ``curve`` disconnects it.

    A neck cocore separates exactly when its edge is a bridge. A
    boundary-parallel curve always cuts off a collar annulus.
    """
    if isinstance(curve, BoundaryCurve):
        try:
            i = graph.index(curve.vertex)
        except KeyError:
            raise ForeignCurveError(f"unknown vertex {curve.vertex!r}") from None
        s = slacks(graph)[i]
        count = 2 if len(graph.vertices) == 1 and s == 0 else abs(s)
        if not 0 <= curve.index < count:
            raise ForeignCurveError(
                f"vertex {curve.vertex} has {count} binding components, no index {curve.index}"
            )
        return True
    if isinstance(curve, NeckCurve):
        try:
            edge = graph.edge_between(curve.u, curve.v)
        except KeyError:
            raise ForeignCurveError(f"no edge {curve.edge_label} in graph") from None
        if not 0 <= curve.strand < edge.multiplicity:
            raise ForeignCurveError(
                f"edge {curve.edge_label} has multiplicity {edge.multiplicity}, no strand {curve.strand}"
            )
        return edge in bridges(graph)
    raise ForeignCurveError(f"not a curve reference: {curve!r}")


def _tf(flag: bool) -> str:
    return "t" if flag else "f"


def _signed(sign: int) -> str:
    return "+1" if sign > 0 else "-1"


def render_openbook(ob: OpenBook, format: str = "text") -> str:
    if format == "machine":
        return _render_machine(ob)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    p = ob.page
    lines = [
        f"page: genus {p.genus}, boundary {p.boundary_components}, euler characteristic {p.euler_characteristic}",
        "binding: " + " ".join(f"{v}={n}" for v, n in ob.binding_vector),
        "monodromy:",
    ]
    for t in ob.twists:
        c = t.curve
        sep = "separating" if c.separating else "non-separating"
        if isinstance(c, BoundaryCurve):
            lines.append(f"  {t.handedness} twist parallel to binding component {c.index} of {c.vertex} ({sep})")
        else:
            lines.append(f"  {t.handedness} twist along cocore of neck {c.edge_label} strand {c.strand} ({sep})")
    lines += [
        f"right-handed twists: {ob.count(RIGHT)}",
        f"left-handed twists: {ob.count(LEFT)}",
        f"horizontal: {str(ob.verdicts.horizontal).lower()}",
        f"stein certified: {str(ob.verdicts.stein_certified).lower()}",
        f"planar: {str(ob.verdicts.planar).lower()}",
    ]
    return "\n".join(lines) + "\n"


def _render_machine(ob: OpenBook) -> str:
    p = ob.page
    lines = [f"page genus={p.genus} boundary={p.boundary_components} chi={p.euler_characteristic}"]
    lines.append("binding " + " ".join(f"{v}={n}" for v, n in ob.binding_vector))
    for t in ob.twists:
        c = t.curve
        if isinstance(c, BoundaryCurve):
            where, index = c.vertex, c.index
        else:
            where, index = f"{c.edge_label}#{c.strand}", c.strand
        kind = "bp" if isinstance(c, BoundaryCurve) else "neck"
        lines.append(
            f"twist kind={kind} at={where} index={index} sign={_signed(t.sign)} separating={_tf(c.separating)}"
        )
    v = ob.verdicts
    lines.append(
        f"verdict horizontal={_tf(v.horizontal)} stein={_tf(v.stein_certified)} planar={_tf(v.planar)}"
    )
    return "\n".join(lines) + "\n"


def _fields(tokens, lineno):
    out = {}
    for tok in tokens:
        key, eq, val = tok.partition("=")
        if not eq:
            raise PlumbookError(f"line {lineno}: expected key=value, got {tok!r}")
        out[key] = val
    return out


def _flag(val, lineno):
    if val not in ("t", "f"):
        raise PlumbookError(f"line {lineno}: expected t or f, got {val!r}")
    return val == "t"


def parse_openbook(text: str) -> OpenBook:
    """Inverse of ``render_openbook(ob, "machine")``."""
    page = verdicts = binding = None
    twists = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        head, *tokens = line.split()
        f = _fields(tokens, lineno)
        if head == "page":
            page = PageInvariants(int(f["genus"]), int(f["boundary"]))
            if int(f["chi"]) != page.euler_characteristic:
                raise PlumbookError(f"line {lineno}: chi inconsistent with genus and boundary")
        elif head == "binding":
            binding = tuple((k, int(v)) for k, v in f.items())
        elif head == "twist":
            sep = _flag(f["separating"], lineno)
            if f["kind"] == "bp":
                curve = BoundaryCurve(f["at"], int(f["index"]), sep)
            elif f["kind"] == "neck":
                m = re.fullmatch(r"([^-#]+)-([^-#]+)#(\d+)", f["at"])
                if not m:
                    raise PlumbookError(f"line {lineno}: bad neck location {f['at']!r}")
                curve = NeckCurve(m[1], m[2], int(m[3]), sep)
            else:
                raise PlumbookError(f"line {lineno}: unknown twist kind {f['kind']!r}")
            twists.append(DehnTwist(curve, int(f["sign"])))
        elif head == "verdict":
            verdicts = Verdicts(*(_flag(f[k], lineno) for k in ("horizontal", "stein", "planar")))
        else:
            raise PlumbookError(f"line {lineno}: unknown record {head!r}")
    if page is None or verdicts is None or binding is None:
        raise PlumbookError("incomplete open book record: need page, binding and verdict lines")
    return OpenBook(page, tuple(twists), binding, verdicts)
