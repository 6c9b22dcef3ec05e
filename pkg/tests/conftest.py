from pathlib import Path

import pytest
from hypothesis import strategies as st

from plumbook.graph import Edge, PlumbingGraph, VertexData, parse_graph

GRAPHS = Path(__file__).resolve().parent.parent / "graphs"


def load(name):
    return parse_graph((GRAPHS / f"{name}.graph").read_text())


@pytest.fixture(scope="session")
def y1():
    return load("y1")


@pytest.fixture(scope="session")
def y2():
    return load("y2")


@pytest.fixture(scope="session")
def e8():
    return load("e8")


@st.composite
def plumbing_graphs(draw, max_vertices=8, max_euler=9, max_genus=3, max_mult=3, min_vertices=1):
    """Connected graphs: a random spanning tree plus random extra strands."""
    k = draw(st.integers(min_vertices, max_vertices))
    vertices = tuple(
        VertexData(f"v{i}", draw(st.integers(-max_euler, max_euler)), draw(st.integers(0, max_genus)))
        for i in range(k)
    )
    mult = {}
    for i in range(1, k):
        parent = draw(st.integers(0, i - 1))
        mult[(parent, i)] = draw(st.integers(1, max_mult))
    if k >= 2:
        pairs = st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)).filter(lambda p: p[0] != p[1])
        for i, j in draw(st.lists(pairs, max_size=k)):
            key = (min(i, j), max(i, j))
            mult[key] = min(mult.get(key, 0) + 1, max_mult)
    edges = tuple(Edge(f"v{i}", f"v{j}", m) for (i, j), m in mult.items())
    return PlumbingGraph(vertices, edges)


# acceptance criteria report -------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for number, title in getattr(report, "criterion", ()):
        ok = _criteria.get(number, (title, True))[1] and report.passed
        _criteria[number] = (title, ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criterion = [tuple(m.args) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")


@st.composite
def fast_path_graphs(draw, tree_of_spheres=False):
    """Graphs with e_i + 2 d_i + 2 g_i <= 0 (and e_i + d_i < 0) at every vertex."""
    if tree_of_spheres:
        g = draw(plumbing_graphs(max_genus=0, max_mult=1).filter(lambda g: len(g.edges) == len(g.vertices) - 1))
    else:
        g = draw(plumbing_graphs())
    deg = {v: 0 for v in g.ids}
    for e in g.edges:
        deg[e.u] += e.multiplicity
        deg[e.v] += e.multiplicity
    vertices = []
    for v in g.vertices:
        floor = -(2 * deg[v.id] + 2 * v.genus)
        euler = min(floor, -deg[v.id] - 1) - draw(st.integers(0, 3))
        vertices.append(VertexData(v.id, euler, v.genus))
    return PlumbingGraph(tuple(vertices), g.edges)
