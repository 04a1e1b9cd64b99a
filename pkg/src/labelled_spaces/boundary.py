"""Boundary path spaces of finite directed graphs.

The boundary consists of all infinite paths plus the finite paths (including
single vertices) ending at a singular vertex.  On a finite graph the singular
vertices are exactly the sinks.  Infinite paths are listed as canonical edge
lassos; a branching-cycle flag reports when some strongly connected component
carries two distinct cycles, in which case the lassos are a strict subset of
all infinite paths.
"""

from dataclasses import dataclass

from .errors import DomainError
from .graph import singular_vertices
from .transition import strongly_connected_components
from .util import canonical_lasso


@dataclass(frozen=True)
class FinitePath:
    """A finite boundary path: an edge sequence, or a bare vertex when empty."""

    base: str
    edges: tuple

    @property
    def terminal(self):
        return self.edges[-1].dst if self.edges else self.base

    @property
    def source(self):
        return self.edges[0].src if self.edges else self.base

    def labels(self):
        return tuple(e.label for e in self.edges)

    def sort_key(self):
        return (0, len(self.edges), self.base, tuple(e.eid for e in self.edges))

    def __str__(self):
        if not self.edges:
            return self.base
        bits = [self.edges[0].src]
        for e in self.edges:
            bits.append("-[%s]%s-> %s" % (e.eid, e.label, e.dst))
        return " ".join(bits)


@dataclass(frozen=True)
class InfinitePath:
    """An eventually periodic infinite path in canonical lasso form."""

    prefix: tuple
    cycle: tuple

    def labels(self):
        return (
            tuple(e.label for e in self.prefix),
            tuple(e.label for e in self.cycle),
        )

    def edge_at(self, n):
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return self.cycle[(n - len(self.prefix) - 1) % len(self.cycle)]

    def sort_key(self):
        return (
            1,
            len(self.prefix),
            tuple(e.eid for e in self.prefix),
            len(self.cycle),
            tuple(e.eid for e in self.cycle),
        )

    def __str__(self):
        pre = " ".join("[%s]%s" % (e.eid, e.label) for e in self.prefix)
        cyc = " ".join("[%s]%s" % (e.eid, e.label) for e in self.cycle)
        start = (self.prefix or self.cycle)[0].src
        return "%s %s(%s)^inf" % (start, pre + " " if pre else "", cyc)


def make_finite_path(g, edges=(), base=None):
    """Validated finite boundary path: edges must chain and the terminal
    vertex must be singular."""
    edges = tuple(edges)
    if edges:
        base = edges[0].src
    if base not in g.vertex_set:
        raise DomainError("unknown base vertex %r" % base)
    for a, b in zip(edges, edges[1:]):
        if a.dst != b.src:
            raise DomainError("edges do not chain: %s then %s" % (a, b))
    path = FinitePath(base, edges)
    if path.terminal not in singular_vertices(g):
        raise DomainError("finite boundary paths must end at a singular vertex")
    return path


def make_infinite_path(g, prefix, cycle):
    """Validated infinite path; normalizes to the canonical lasso."""
    prefix, cycle = tuple(prefix), tuple(cycle)
    if not cycle:
        raise DomainError("an infinite path needs a nonempty cycle")
    chain = list(prefix) + list(cycle)
    for a, b in zip(chain, chain[1:]):
        if a.dst != b.src:
            raise DomainError("edges do not chain: %s then %s" % (a, b))
    if cycle[-1].dst != cycle[0].src:
        raise DomainError("cycle does not close")
    prefix, cycle = canonical_lasso(prefix, cycle)
    return InfinitePath(prefix, cycle)


@dataclass
class BoundaryReport:
    finite: tuple
    infinite: tuple
    has_branching_cycles: bool

    def all_points(self):
        return self.finite + self.infinite


def _finite_boundary_paths(g, max_len):
    sing = singular_vertices(g)
    out = [FinitePath(v, ()) for v in sorted(sing)]
    frontier = [((), v) for v in sorted(g.vertices)]
    for _ in range(max_len):
        nxt = []
        for edges, at in frontier:
            for e in g.edges_from(at):
                nxt.append((edges + (e,), e.dst))
        frontier = nxt
        for edges, at in frontier:
            if at in sing:
                out.append(FinitePath(edges[0].src, edges))
    return tuple(sorted(out, key=FinitePath.sort_key))


def _closed_edge_walks(g, bound):
    walks = []

    def extend(start, trail):
        at = trail[-1].dst if trail else start
        for e in g.edges_from(at):
            if e.dst == start:
                walks.append(trail + [e])
            if len(trail) + 1 < bound:
                extend(start, trail + [e])

    for v in g.vertices:
        extend(v, [])
    return walks


def _infinite_boundary_paths(g, max_len, max_cycle):
    found = {}
    for cycle in _closed_edge_walks(g, max_cycle):
        start = cycle[0].src
        path = make_infinite_path(g, (), cycle)
        if len(path.prefix) <= max_len and len(path.cycle) <= max_cycle:
            found.setdefault((path.prefix, path.cycle), path)
        prefixes = [[]]
        for _ in range(max_len):
            nxt = []
            for chain in prefixes:
                head = chain[0].src if chain else start
                for e in g.edges:
                    if e.dst == head:
                        nxt.append([e] + chain)
            prefixes = nxt
            for chain in nxt:
                path = make_infinite_path(g, chain, cycle)
                if len(path.prefix) <= max_len and len(path.cycle) <= max_cycle:
                    found.setdefault((path.prefix, path.cycle), path)
    return tuple(sorted(found.values(), key=InfinitePath.sort_key))


def graph_has_branching_cycles(g):
    edges = tuple((e.src, e.label, e.dst) for e in g.edges)
    for comp in strongly_connected_components(g.vertices, edges):
        internal = [e for e in g.edges if e.src in comp and e.dst in comp]
        if internal and len(internal) > len(comp):
            return True
    return False


def boundary_paths(g, max_len, max_cycle):
    """All boundary points within the bounds: finite paths of length at most
    ``max_len`` and canonical lassos with prefix at most ``max_len`` and cycle
    at most ``max_cycle``."""
    return BoundaryReport(
        _finite_boundary_paths(g, max_len),
        _infinite_boundary_paths(g, max_len, max_cycle),
        graph_has_branching_cycles(g),
    )


def _deterministic_cycles(g):
    """Cycles every vertex of which has out-degree exactly one; such a cycle
    is forced, so any path entering it is isolated in the boundary."""
    out = []
    deg = {v: g.out_degree(v) for v in g.vertices}
    seen = set()
    for v in sorted(g.vertices):
        if v in seen or deg[v] != 1:
            continue
        trail = []
        at = v
        ok = True
        while True:
            if deg[at] != 1:
                ok = False
                break
            e = g.edges_from(at)[0]
            trail.append(e)
            at = e.dst
            if at == v:
                break
            if any(t.src == at for t in trail):
                ok = False
                break
        if ok:
            for e in trail:
                seen.add(e.src)
            out.append(tuple(trail))
    return out


def isolated_points(g, max_prefix):
    """The isolated points of the boundary, up to the prefix bound.

    Finite boundary paths are always isolated (their cylinder is a
    singleton).  An infinite path is isolated exactly when some prefix lands
    in a cone where every reachable vertex has out-degree one, i.e. when its
    cycle is deterministic; representatives are listed with prefixes of
    length at most ``max_prefix``.
    """
    finite = _finite_boundary_paths(g, max_prefix)
    infinite = {}
    for cycle in _deterministic_cycles(g):
        for phase in range(len(cycle)):
            rotated = cycle[phase:] + cycle[:phase]
            path = make_infinite_path(g, (), rotated)
            if len(path.prefix) <= max_prefix:
                infinite.setdefault((path.prefix, path.cycle), path)
            prefixes = [[]]
            for _ in range(max_prefix):
                nxt = []
                for chain in prefixes:
                    head = chain[0].src if chain else rotated[0].src
                    for e in g.edges:
                        if e.dst == head:
                            nxt.append([e] + chain)
                prefixes = nxt
                for chain in nxt:
                    path = make_infinite_path(g, chain, rotated)
                    if len(path.prefix) <= max_prefix:
                        infinite.setdefault((path.prefix, path.cycle), path)
    return tuple(
        sorted(finite, key=FinitePath.sort_key)
        + sorted(infinite.values(), key=InfinitePath.sort_key)
    )
