import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from labelled_spaces import (
    AccommodatingFamily,
    Edge,
    InputError,
    LabelledGraph,
    closure,
    powerset_family,
    relative_range,
    validate,
)
from labelled_spaces import fixtures
from labelled_spaces.util import sort_sets


def fset(*items):
    return frozenset(items)


E0 = fset("1", "2", "3", "4")

LOOPS4_SETS = sort_sets(
    [
        frozenset(),
        fset("1"),
        fset("3"),
        fset("1", "3"),
        fset("2", "4"),
        fset("1", "2", "4"),
        fset("2", "3", "4"),
        E0,
    ]
)


def non_wlr_space():
    """Two sources feeding one vertex under the same letter; the powerset
    family then fails the weak-left-resolving identity."""
    g = LabelledGraph(
        ("u", "v", "x", "y"),
        (
            Edge("e1", "u", "a", "x"),
            Edge("e2", "v", "a", "x"),
            Edge("e3", "x", "b", "y"),
        ),
    )
    return g, powerset_family(g)


class TestClosure:
    def test_loops4_seed_singleton(self, loops4):
        g, _ = loops4
        fam = closure(g, [fset("1")])
        assert fam.sets == sort_sets([frozenset(), fset("1"), fset("2", "3", "4"), E0])

    def test_empty_seeds(self, loops4):
        g, _ = loops4
        fam = closure(g, [])
        assert fam.sets == (frozenset(), E0)

    def test_eight_set_family_is_already_closed(self, loops4):
        g, fam = loops4
        assert closure(g, fam.sets).sets == LOOPS4_SETS

    def test_closure_output_is_complement_closed(self, twins3):
        g, _ = twins3
        fam = closure(g, [fset("v1")])
        assert fam.complement_closed
        assert fam.weakly_left_resolving in (True, False)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.sets(st.sampled_from(["1", "2", "3", "4"])), max_size=3))
    def test_extensive_monotone_idempotent(self, seeds):
        g, _ = fixtures.loops4()
        seeds = [frozenset(s) for s in seeds]
        fam = closure(g, seeds)
        for s in seeds:
            assert s in fam
        again = closure(g, fam.sets)
        assert again.sets == fam.sets
        bigger = closure(g, seeds + [fset("2")])
        assert set(fam.sets) <= set(bigger.sets)


class TestValidate:
    def test_loops4_all_flags(self, loops4):
        g, fam = loops4
        report = validate(g, fam.sets)
        assert report.accommodating
        assert report.weakly_left_resolving
        assert report.complement_closed

    def test_chain7_flags_and_witness(self, chain7):
        g, fam = chain7
        report = validate(g, fam.sets)
        assert report.accommodating
        assert report.weakly_left_resolving
        assert not report.complement_closed
        a, b = report.witnesses["complement_closed"]
        assert a in fam and b in fam and (a - b) not in fam

    def test_missing_letter_range(self, chain7):
        g, _ = chain7
        report = validate(g, [frozenset(), g.vertex_set])
        assert not report.accommodating
        assert report.witnesses["accommodating"][0] == "missing range of letter"

    def test_non_wlr_witness(self):
        g, fam = non_wlr_space()
        report = validate(g, fam.sets)
        assert report.accommodating
        assert not report.weakly_left_resolving
        a, b, letter = report.witnesses["weakly_left_resolving"]
        assert relative_range(g, a & b, (letter,)) != relative_range(
            g, a, (letter,)
        ) & relative_range(g, b, (letter,))

    def test_validation_never_raises_for_closure_failures(self, loops4):
        g, _ = loops4
        report = validate(g, [fset("1")])
        assert not report.accommodating

    def test_malformed_sets_are_input_errors(self, loops4):
        g, _ = loops4
        with pytest.raises(InputError):
            validate(g, [fset("nope")])


class TestFamilyConstruction:
    def test_rejects_non_accommodating(self, loops4):
        g, _ = loops4
        with pytest.raises(InputError):
            AccommodatingFamily(g, (frozenset(), fset("1")))

    def test_flags_are_recorded(self, chain7):
        _, fam = chain7
        assert fam.weakly_left_resolving
        assert not fam.complement_closed

    def test_non_wlr_family_constructs(self):
        _, fam = non_wlr_space()
        assert not fam.weakly_left_resolving


class TestComplementIdentity:
    def test_range_of_difference(self, loops4):
        g, fam = loops4
        # needs both flags: weakly left resolving and complement closed
        words = [("a",) * n for n in range(4)]
        for a in fam.sets:
            for b in fam.sets:
                for word in words:
                    assert relative_range(g, a - b, word) == relative_range(
                        g, a, word
                    ) - relative_range(g, b, word)

    def test_disjoint_sets_have_disjoint_ranges(self, loops4):
        g, fam = loops4
        for a in fam.sets:
            for b in fam.sets:
                if not (a & b):
                    for n in range(4):
                        word = ("a",) * n
                        assert not (
                            relative_range(g, a, word) & relative_range(g, b, word)
                        )


class TestRestrictedAlgebra:
    def test_chain7_depth_one(self, chain7):
        _, fam = chain7
        alg = fam.algebra(("a1",))
        assert alg.elements == (frozenset(), fset("v2"), fset("v2", "v4"))
        assert alg.atoms == (fset("v2"),)

    def test_chain7_depth_two(self, chain7):
        _, fam = chain7
        alg = fam.algebra(("a1", "a2"))
        assert alg.elements == (frozenset(), fset("v3"), fset("v3", "v5"))

    def test_loops4_word_a_is_whole_family(self, loops4):
        _, fam = loops4
        assert fam.algebra(("a",)).elements == fam.sets

    def test_atoms_dominate(self, loops4, chain7, twins3):
        for _, fam in (loops4, chain7, twins3):
            for word in [(), (fam.graph.alphabet[0],)]:
                alg = fam.algebra(word)
                for e in alg.elements:
                    if e:
                        assert any(a <= e for a in alg.atoms)

    def test_empty_word_algebra_may_lack_top(self):
        g = LabelledGraph(("u", "v"), (Edge("e1", "v", "a", "u"),))
        fam = closure(g, [])
        alg = fam.algebra(())
        assert alg.top is None
        assert g.vertex_set not in fam

    def test_nonempty_word_algebra_has_top(self, loops4):
        _, fam = loops4
        assert fam.algebra(("a",)).top == E0
