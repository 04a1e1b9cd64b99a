"""Accommodating families of vertex sets and their restricted algebras.

A family is kept as an explicit, canonically ordered list of vertex sets.
Closure checks are performed on single letters only; together with the
composition law r(r(A, b), w) = r(A, bw) this implies closure under relative
ranges of arbitrary words, and likewise the weak-left-resolving identity for
single letters propagates to all words once the family is range-closed.
"""

from dataclasses import dataclass, field

from .errors import DomainError, InputError
from .graph import range_of, relative_range
from .util import format_vset, sort_sets, vkey


@dataclass
class ValidationReport:
    accommodating: bool
    weakly_left_resolving: bool
    complement_closed: bool
    witnesses: dict

    def flags_line(self):
        return "accommodating=%s wlr=%s complements=%s" % (
            str(self.accommodating).lower(),
            str(self.weakly_left_resolving).lower(),
            str(self.complement_closed).lower(),
        )


def validate(g, sets):
    """Check the accommodating / weakly-left-resolving / complement-closure
    flags for an arbitrary collection of vertex sets.

    Never raises for closure failures; each false flag comes with a concrete
    witness.  Sets containing unknown vertices are input errors.
    """
    for s in sets:
        g.check_vertices(s)
    members = sort_sets(frozenset(s) for s in sets)
    lookup = set(members)
    witnesses = {}

    accommodating = True
    if frozenset() not in lookup:
        accommodating = False
        witnesses["accommodating"] = ("missing empty set",)
    for b in g.alphabet:
        if accommodating and range_of(g, (b,)) not in lookup:
            accommodating = False
            witnesses["accommodating"] = ("missing range of letter", b)
    if accommodating:
        for a in members:
            for b in g.alphabet:
                if g.step(a, b) not in lookup:
                    accommodating = False
                    witnesses["accommodating"] = ("relative range escapes", a, b)
                    break
            if not accommodating:
                break
    if accommodating:
        for i, a in enumerate(members):
            for bset in members[i + 1 :]:
                if a | bset not in lookup:
                    accommodating = False
                    witnesses["accommodating"] = ("union escapes", a, bset)
                    break
                if a & bset not in lookup:
                    accommodating = False
                    witnesses["accommodating"] = ("intersection escapes", a, bset)
                    break
            if not accommodating:
                break

    # Weak left resolving via source traces: for each vertex v and letter b,
    # the members' traces on the b-predecessors of v must pairwise intersect;
    # a disjoint pair of nonempty traces is exactly a violation of
    # r(A & B, b) = r(A, b) & r(B, b).
    weakly_left_resolving = True
    preds = {}
    for e in g.edges:
        preds.setdefault((e.label, e.dst), set()).add(e.src)
    for (b, v), srcs in sorted(preds.items()):
        if not weakly_left_resolving:
            break
        traces = {}
        for a in members:
            t = frozenset(a & srcs)
            if t:
                traces.setdefault(t, a)
        distinct = sorted(traces, key=vkey)
        for i, t1 in enumerate(distinct):
            for t2 in distinct[i + 1 :]:
                if not (t1 & t2):
                    weakly_left_resolving = False
                    witnesses["weakly_left_resolving"] = (traces[t1], traces[t2], b)
                    break
            if not weakly_left_resolving:
                break

    complement_closed = True
    for a in members:
        for bset in members:
            if a - bset not in lookup:
                complement_closed = False
                witnesses["complement_closed"] = (a, bset)
                break
        if not complement_closed:
            break

    return ValidationReport(accommodating, weakly_left_resolving, complement_closed, witnesses)


@dataclass(frozen=True)
class AccommodatingFamily:
    """An accommodating family over a labelled graph, as an explicit set list.

    Construction validates the accommodating closure properties and records
    the weakly-left-resolving and complement-closure flags.
    """

    graph: object
    sets: tuple
    weakly_left_resolving: bool = field(init=False, compare=False)
    complement_closed: bool = field(init=False, compare=False)
    _lookup: frozenset = field(init=False, compare=False, repr=False)
    _algebras: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        members = sort_sets(frozenset(s) for s in self.sets)
        report = validate(self.graph, members)
        if not report.accommodating:
            raise InputError(
                "family is not accommodating: %s"
                % " ".join(_describe(w) for w in report.witnesses.get("accommodating", ()))
            )
        object.__setattr__(self, "sets", members)
        object.__setattr__(self, "weakly_left_resolving", report.weakly_left_resolving)
        object.__setattr__(self, "complement_closed", report.complement_closed)
        object.__setattr__(self, "_lookup", frozenset(members))
        object.__setattr__(self, "_algebras", {})

    def __hash__(self):
        return hash((self.graph, self.sets))

    def __contains__(self, vset):
        return frozenset(vset) in self._lookup

    def __len__(self):
        return len(self.sets)

    def require_wlr(self):
        if not self.weakly_left_resolving:
            raise DomainError("family is not weakly left resolving")

    def require_complements(self):
        from .errors import UnsupportedFamilyError

        if not self.complement_closed:
            raise UnsupportedFamilyError("family is not closed under relative complements")

    def rel_range(self, members, word):
        return relative_range(self.graph, members, word)

    def algebra(self, word):
        """The restricted algebra of sets below the range of ``word``.

        The algebra depends on the word only through its range, so words with
        equal ranges share one algebra object.
        """
        word = tuple(word)
        self.graph.check_word(word)
        if word:
            top = range_of(self.graph, word)
            if not top:
                raise DomainError("%r is not a labelled path" % ".".join(word))
        else:
            top = self.graph.vertex_set
        return self.algebra_over(top)

    def algebra_over(self, restriction):
        restriction = frozenset(restriction)
        if restriction not in self._algebras:
            self._algebras[restriction] = RestrictedAlgebra.build(self, restriction)
        return self._algebras[restriction]


def _describe(item):
    return format_vset(item) if isinstance(item, frozenset) else str(item)


def closure(g, seeds):
    """Smallest family containing the seeds and all letter ranges that is
    closed under union, intersection, relative complement, and single-letter
    relative ranges.  Terminates: there are at most 2^|vertices| sets.
    """
    for s in seeds:
        g.check_vertices(s)
    current = {frozenset(s) for s in seeds}
    current.add(frozenset())
    for b in g.alphabet:
        current.add(range_of(g, (b,)))
    while True:
        new = set()
        items = sorted(current, key=vkey)
        for i, a in enumerate(items):
            for bset in items[i:]:
                for candidate in (a | bset, a & bset, a - bset, bset - a):
                    if candidate not in current:
                        new.add(candidate)
            for letter in g.alphabet:
                candidate = g.step(a, letter)
                if candidate not in current:
                    new.add(candidate)
        if not new:
            break
        current |= new
    return AccommodatingFamily(g, tuple(current))


def powerset_family(g):
    """The full powerset family; always accommodating and complement closed."""
    verts = list(g.vertices)
    sets = []
    for mask in range(1 << len(verts)):
        sets.append(frozenset(v for i, v in enumerate(verts) if mask >> i & 1))
    return AccommodatingFamily(g, tuple(sets))


@dataclass(frozen=True)
class RestrictedAlgebra:
    """The members of a family lying inside a fixed restriction set (the
    range of some word; the whole vertex set for the empty word).

    With a complement-closed family and a nonempty word this is a finite
    Boolean algebra; for the empty word it may lack a top element (recorded
    as None).  Zero is always the empty set; atoms are the minimal nonzero
    elements, and in a finite meet-semilattice every filter is the up-set of
    its minimum while the ultrafilters are exactly the up-sets of atoms.
    """

    family: object
    restriction: frozenset
    top: object
    elements: tuple
    atoms: tuple
    _lookup: frozenset = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", frozenset(self.elements))

    @classmethod
    def build(cls, family, restriction):
        elements = tuple(s for s in family.sets if s <= restriction)
        top = restriction if restriction in family._lookup else None
        nonzero = [s for s in elements if s]
        atoms = tuple(s for s in nonzero if not any(o < s for o in nonzero))
        return cls(family, restriction, top, elements, atoms)

    def __contains__(self, vset):
        return frozenset(vset) in self._lookup

    def __hash__(self):
        return hash((self.family, self.restriction))

    def __eq__(self, other):
        return (
            isinstance(other, RestrictedAlgebra)
            and self.family == other.family
            and self.restriction == other.restriction
        )
