"""Filters, filter towers along words, completion and the transition graph.

Filters in the idempotent semilattice correspond to words decorated with a
tower of level filters.  Finite algebras make every filter principal, so the
whole theory becomes finite bookkeeping.
"""

from labelled_spaces import (
    FiniteFilterFamily,
    LassoFilterFamily,
    PrincipalFilter,
    UltrafilterTransitionGraph,
    enumerate_complete_families,
    make_element,
    preimage_filter,
    ultrafilters,
)
from labelled_spaces import fixtures
from labelled_spaces.util import format_vset

g, fam = fixtures.loops4()
alg = fam.algebra(("a",))

print("Ultrafilters of the algebra over 'a':")
for flt in ultrafilters(alg):
    print("   ", flt)

# pulling a filter back one letter: the sets whose range lies in the filter
up3 = PrincipalFilter(fam.algebra(("a", "a")), frozenset("3"))
print()
print("preimage of up{3} one letter back:", preimage_filter(fam, ("a",), ("a",), up3))

# a finite-type tower is determined by its deepest filter
ff = FiniteFilterFamily.from_top(fam, ("a", "a"), frozenset("3"))
print()
print("tower over 'a.a' with top {3}: generators", [format_vset(x) for x in ff.gens])
p = make_element(fam, (), {"1"}, ())
print("contains (@,{1},@)?", ff.contains_idempotent(p))

# an admissible tower completes to the least complete tower above it
E0 = frozenset("1234")
adm = LassoFilterFamily(fam, (), ("a",), (), (E0,), f0_gen=E0)
print()
print("admissible:", adm.format())
print("completed: ", adm.completion().format())

# the transition graph certifies all infinite-type ultrafilters at once
print()
print(UltrafilterTransitionGraph(fam).format_listing())

# the chain example: a unique complete tower whose middle level is not an
# ultrafilter of its own algebra, possible because the family lacks
# relative complements
gc, famc = fixtures.chain7(10)
towers = enumerate_complete_families(famc, fixtures.chain7_word(6))
print()
print("chain towers to depth 6:", len(towers))
print("level generators:", [format_vset(x) for x in towers[0].gens])
print("depth-2 filter is an ultrafilter?", towers[0].filter_at(2).is_ultrafilter)
