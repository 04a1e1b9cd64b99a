import pytest

from labelled_spaces import (
    DomainError,
    boundary_paths,
    isolated_points,
    make_finite_path,
    make_infinite_path,
)
from labelled_spaces.boundary import FinitePath, InfinitePath
from oracles import finite_boundary_brute


def by_str(points):
    return [str(p) for p in points]


class TestFiniteBoundary:
    def test_loops4_short(self, loops4_pow):
        g, _ = loops4_pow
        rep = boundary_paths(g, 1, 1)
        assert by_str(rep.finite) == ["3", "4", "1 -[e3]a-> 3", "1 -[e4]a-> 4"]
        assert rep.infinite == ()

    def test_matches_brute_force(self, loops4_pow, chain7, twins3):
        for g in (loops4_pow[0], chain7[0], twins3[0]):
            rep = boundary_paths(g, 3, 1)
            got = {(p.base, p.edges) for p in rep.finite}
            assert got == finite_boundary_brute(g, 3)

    def test_counts_grow_two_per_length(self, loops4_pow):
        g, _ = loops4_pow
        for max_len in range(5):
            rep = boundary_paths(g, max_len, 1)
            assert len(rep.finite) == 2 * (max_len + 1)


class TestInfiniteBoundary:
    def test_single_loop(self, single_loop):
        g, _ = single_loop
        rep = boundary_paths(g, 2, 1)
        assert rep.finite == ()
        assert len(rep.infinite) == 1
        assert rep.infinite[0].prefix == ()

    def test_loops4_two_phases(self, loops4_pow):
        g, _ = loops4_pow
        rep = boundary_paths(g, 4, 2)
        assert len(rep.infinite) == 2
        assert {p.cycle[0].eid for p in rep.infinite} == {"e1", "e2"}

    def test_twins3_contains_the_loop_path(self, twins3):
        g, _ = twins3
        rep = boundary_paths(g, 1, 1)
        assert "v3 ([l3]0)^inf" in by_str(rep.infinite)

    def test_branching_flags(self, loops4_pow, twins2, twins3, single_loop):
        assert not boundary_paths(loops4_pow[0], 1, 2).has_branching_cycles
        assert not boundary_paths(single_loop[0], 1, 1).has_branching_cycles
        assert boundary_paths(twins2[0], 1, 2).has_branching_cycles
        assert boundary_paths(twins3[0], 1, 2).has_branching_cycles


class TestCanonicalLassos:
    def test_redundant_representations_collapse(self, single_loop):
        g, _ = single_loop
        e = g.edges[0]
        a = make_infinite_path(g, (), (e,))
        b = make_infinite_path(g, (e, e), (e, e))
        assert a == b
        assert a.prefix == () and len(a.cycle) == 1

    def test_phase_is_preserved(self, loops4_pow):
        g, _ = loops4_pow
        e12 = next(e for e in g.edges if e.eid == "e2")
        e21 = next(e for e in g.edges if e.eid == "e1")
        one = make_infinite_path(g, (), (e12, e21))
        other = make_infinite_path(g, (), (e21, e12))
        assert one != other

    def test_chaining_validated(self, loops4_pow):
        g, _ = loops4_pow
        e13 = next(e for e in g.edges if e.eid == "e3")
        with pytest.raises(DomainError):
            make_infinite_path(g, (), (e13,))


class TestFinitePathValidation:
    def test_must_end_singular(self, loops4_pow):
        g, _ = loops4_pow
        e12 = next(e for e in g.edges if e.eid == "e2")
        with pytest.raises(DomainError):
            make_finite_path(g, (e12,))

    def test_vertex_path(self, loops4_pow):
        g, _ = loops4_pow
        p = make_finite_path(g, (), base="3")
        assert p.terminal == "3" and p.labels() == ()


class TestIsolatedPoints:
    def test_loops4_sink_paths(self, loops4_pow):
        g, _ = loops4_pow
        points = isolated_points(g, 1)
        assert by_str(points) == ["3", "4", "1 -[e3]a-> 3", "1 -[e4]a-> 4"]
        assert all(isinstance(p, FinitePath) for p in points)

    def test_twins2_has_none(self, twins2):
        g, _ = twins2
        for bound in (0, 1, 2, 3):
            assert isolated_points(g, bound) == ()

    def test_twins3_loop_lasso(self, twins3):
        g, _ = twins3
        assert by_str(isolated_points(g, 0)) == ["v3 ([l3]0)^inf"]

    def test_twins3_with_prefixes(self, twins3):
        g, _ = twins3
        points = isolated_points(g, 2)
        assert len(points) == 4
        assert all(isinstance(p, InfinitePath) for p in points)
        assert all(p.cycle[0].eid == "l3" for p in points)

    def test_single_loop_everything_isolated(self, single_loop):
        g, _ = single_loop
        assert len(isolated_points(g, 0)) == 1
