"""Built-in labelled spaces used by the test suite, demos and CLI.

``loops4``   four vertices over a one-letter alphabet with an eight-set
             complement-closed family; the richest small example.
``chain7``   a one-way chain with a diamond at the front whose natural family
             is not complement-closed (default truncation: 10 vertices).
``twins2`` / ``twins3``   two labelled graphs with the same labelled paths
             but different boundary spaces.
``single_loop``   one vertex with a loop.

Each builder returns (graph, family).  ``path(name)`` locates the shipped
``.lgr`` file with the same content.
"""

import os

from ..family import AccommodatingFamily, powerset_family
from ..graph import Edge, LabelledGraph

_HERE = os.path.dirname(__file__)


def path(name):
    """Filesystem path of a shipped fixture file, e.g. path('loops4')."""
    return os.path.join(_HERE, name + ".lgr")


def loops4_graph():
    return LabelledGraph(
        ("1", "2", "3", "4"),
        (
            Edge("e1", "2", "a", "1"),
            Edge("e2", "1", "a", "2"),
            Edge("e3", "1", "a", "3"),
            Edge("e4", "1", "a", "4"),
        ),
    )


def loops4():
    g = loops4_graph()
    sets = [
        frozenset(),
        frozenset("1"),
        frozenset("3"),
        frozenset(["1", "3"]),
        frozenset(["2", "4"]),
        frozenset(["1", "2", "4"]),
        frozenset(["2", "3", "4"]),
        frozenset(["1", "2", "3", "4"]),
    ]
    return g, AccommodatingFamily(g, tuple(sets))


def loops4_powerset():
    g = loops4_graph()
    return g, powerset_family(g)


def chain7_sets(n_vertices):
    """All subsets with v2 forced by v4 and v3 forced by v5."""
    verts = ["v%d" % i for i in range(1, n_vertices + 1)]
    out = []
    for mask in range(1 << n_vertices):
        members = frozenset(v for i, v in enumerate(verts) if mask >> i & 1)
        if "v4" in members and "v2" not in members:
            continue
        if "v5" in members and "v3" not in members:
            continue
        out.append(members)
    return tuple(out)


def chain7(n_vertices=10):
    """The diamond-headed chain, truncated to ``n_vertices`` (at least 6).

    Edges: v1 reaches v2 and v4 under a1; v2 and v4 reach v3, and v4 also
    reaches v5, under a2; from v5 on a simple chain labelled a3, a4, ...
    """
    if n_vertices < 6:
        raise ValueError("chain7 needs at least 6 vertices")
    verts = tuple("v%d" % i for i in range(1, n_vertices + 1))
    edges = [
        Edge("e1", "v1", "a1", "v2"),
        Edge("e2", "v1", "a1", "v4"),
        Edge("e3", "v2", "a2", "v3"),
        Edge("e4", "v4", "a2", "v3"),
        Edge("e5", "v4", "a2", "v5"),
    ]
    for i in range(5, n_vertices):
        edges.append(Edge("e%d" % (i + 1), "v%d" % i, "a%d" % (i - 2), "v%d" % (i + 1)))
    g = LabelledGraph(verts, tuple(edges))
    return g, AccommodatingFamily(g, chain7_sets(n_vertices))


def chain7_word(depth):
    return tuple("a%d" % i for i in range(1, depth + 1))


def twins2_graph():
    return LabelledGraph(
        ("v1", "v2"),
        (
            Edge("l1", "v1", "1", "v1"),
            Edge("e12", "v1", "0", "v2"),
            Edge("e21", "v2", "0", "v1"),
        ),
    )


def twins3_graph():
    return LabelledGraph(
        ("v1", "v2", "v3"),
        (
            Edge("l1", "v1", "1", "v1"),
            Edge("e13", "v1", "1", "v3"),
            Edge("l3", "v3", "0", "v3"),
            Edge("e12", "v1", "0", "v2"),
            Edge("e21", "v2", "0", "v1"),
        ),
    )


def twins2():
    g = twins2_graph()
    return g, powerset_family(g)


def twins3():
    g = twins3_graph()
    return g, powerset_family(g)


def single_loop():
    g = LabelledGraph(("v",), (Edge("e1", "v", "a", "v"),))
    return g, powerset_family(g)
