"""Labelled spaces from scratch: graphs, relative ranges, families.

Run with `python demos/01_labelled_space_basics.py`.  Builds the four-vertex
one-letter example, inspects relative ranges, and shows how accommodating
families are validated and generated by closure.
"""

from labelled_spaces import (
    closure,
    label_edge_set,
    range_of,
    relative_range,
    sinks,
    validate,
)
from labelled_spaces import fixtures
from labelled_spaces.util import format_vset

g, fam = fixtures.loops4()

print("The graph has vertices", g.vertices, "and alphabet", g.alphabet)
print("Edges:")
for e in g.edges:
    print("   ", e)

# The relative range r(A, w) collects the endpoints of all paths labelled w
# that start inside A.  Vertex 1 feeds everything except itself under 'a'.
print()
print("r({1}, a)   =", format_vset(relative_range(g, {"1"}, ("a",))))
print("r({1}, aa)  =", format_vset(relative_range(g, {"1"}, ("a", "a"))))
print("r(a)        =", format_vset(range_of(g, ("a",))))
print("sinks       =", format_vset(sinks(g)))
print("labels out of {3}:", format_vset(label_edge_set(g, {"3"})))

# The eight-set family is accommodating, weakly left resolving and closed
# under relative complements; the validator reports all three flags.
print()
report = validate(g, fam.sets)
print("family of", len(fam.sets), "sets:", report.flags_line())

# Closure builds the smallest complement-closed accommodating family around
# seed sets.  Seeding with {1} stays tiny.
small = closure(g, [frozenset("1")])
print()
print("closure of {1}:", " ".join(format_vset(s) for s in small.sets))

# A restricted algebra is the slice of the family below the range of a word.
alg = fam.algebra(("a",))
print()
print("algebra over 'a': top =", format_vset(alg.top))
print("atoms:", " ".join(format_vset(a) for a in alg.atoms))
