"""The inverse semigroup of triples over a labelled space.

Elements are (word, set, word) triples multiplying by word comparison; every
element has a unique generalized inverse, and the idempotents form a meet
semilattice under the natural partial order.
"""

from labelled_spaces import (
    ZERO,
    inverse,
    is_idempotent,
    leq,
    make_element,
    meet,
    multiply,
)
from labelled_spaces import fixtures
from labelled_spaces.semigroup import elements_up_to, idempotents_up_to

g, fam = fixtures.loops4()

s = make_element(fam, ("a",), {"1", "3"}, ("a",))
t = make_element(fam, ("a",), {"2", "3", "4"}, ("a",))
print("s        =", s)
print("t        =", t)
print("s * t    =", multiply(fam, s, t))
print("s*       =", inverse(s))
print("s s* s   =", multiply(fam, multiply(fam, s, inverse(s)), s))

# comparable words extend, incomparable words annihilate
u = make_element(fam, (), {"1"}, ())
v = make_element(fam, ("a",), {"2", "4"}, ("a",))
print()
print("u * v =", multiply(fam, u, v), " (the word of v extends the word of u)")
a3 = make_element(fam, ("a",), {"3"}, ("a",))
a1 = make_element(fam, ("a",), {"1"}, ("a",))
print("disjoint middles collapse:", multiply(fam, a3, a1))

# the idempotents are the (w, A, w) triples; meet is the product
print()
print("v idempotent?", is_idempotent(v), "| v <= u?", leq(fam, v, u))
p = make_element(fam, (), {"1", "3"}, ())
q = make_element(fam, (), {"2", "3", "4"}, ())
print("meet of", p, "and", q, "=", meet(fam, p, q))

# a quick numerical sanity check of the axioms on the small element pool
pool = elements_up_to(fam, 1) + (ZERO,)
assoc = all(
    multiply(fam, multiply(fam, x, y), z) == multiply(fam, x, multiply(fam, y, z))
    for x in pool
    for y in pool
    for z in pool
)
commute = all(
    multiply(fam, p, q) == multiply(fam, q, p)
    for p in idempotents_up_to(fam, 1)
    for q in idempotents_up_to(fam, 1)
)
print()
print("associative on %d elements: %s | idempotents commute: %s" % (len(pool), assoc, commute))
