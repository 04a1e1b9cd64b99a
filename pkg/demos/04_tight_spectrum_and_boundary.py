"""The tight spectrum and its boundary-path description.

For a left resolving graph with the powerset family, tight filters match
boundary paths one for one.  With a smaller family the spectrum can differ:
the four-vertex example has a single tight filter per word length, while its
underlying graph has two boundary paths per length.
"""

from labelled_spaces import (
    LassoFilterFamily,
    boundary_paths,
    boundary_to_filter,
    compare_spectrum_with_boundary,
    isolated_points,
    powerset_family,
    refute_tightness,
    tight_spectrum,
)
from labelled_spaces import fixtures
from labelled_spaces.util import format_vset

g, fam = fixtures.loops4()

spec = tight_spectrum(fam, 3, 2)
print("tight spectrum of the eight-set space (words to 3, cycles to 2):")
for d in spec.finite + spec.infinite:
    print("   ", d.format())

# the same graph with the full powerset: now two tight filters per length,
# matching the two boundary paths per length
pow_fam = powerset_family(g)
rep = compare_spectrum_with_boundary(g, 4, 2)
print()
print("powerset comparison:", rep.counts_line())
print("bijective:", rep.bijective)

bnd = boundary_paths(g, 2, 2)
print()
print("boundary paths of the underlying graph (lengths to 2):")
for p in bnd.all_points():
    print("   ", p, "->", boundary_to_filter(pow_fam, p).format())

# a complete tower that is not tight is refuted by a union cover whose
# parts all avoid the filter
fat = LassoFilterFamily(fam, (), ("a",), (), (frozenset("124"),))
x, cert = refute_tightness(fam, fat, 0)
print()
print("non-tight witness for", fat.format())
print("   member", x, "covered by", " ".join(format_vset(p) for p in cert.parts))

# two graphs with the same labelled words can still be told apart by their
# boundary spaces: only one of them has an isolated point
g2, _ = fixtures.twins2()
g3, _ = fixtures.twins3()
print()
print("isolated points, two-vertex graph:  ", [str(p) for p in isolated_points(g2, 0)])
print("isolated points, three-vertex graph:", [str(p) for p in isolated_points(g3, 0)])
