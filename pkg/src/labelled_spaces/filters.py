"""Filters in restricted algebras and filter families along words.

Every algebra here is a finite meet-semilattice, so filters are stored by
their principal generator and the ultrafilters are exactly the up-sets of
atoms.  A filter in the idempotent semilattice of the triple semigroup is
described by a word together with a tower of level filters; finite words use
an explicit tower, infinite eventually periodic words use a lasso.
"""

from dataclasses import dataclass
from functools import reduce

from .errors import DomainError, ParseError
from .util import (
    canonical_lasso,
    format_vset,
    format_word,
    lasso_value,
    parse_vset,
    parse_word,
    vkey,
)


@dataclass(frozen=True)
class PrincipalFilter:
    """The up-set of a nonzero generator inside a restricted algebra."""

    algebra: object
    gen: frozenset

    def __post_init__(self):
        if not self.gen:
            raise DomainError("a filter cannot contain the empty set")
        if self.gen not in self.algebra:
            raise DomainError("generator %s is not in the algebra" % format_vset(self.gen))

    def members(self):
        return tuple(a for a in self.algebra.elements if self.gen <= a)

    def __contains__(self, vset):
        return frozenset(vset) in self.algebra and self.gen <= frozenset(vset)

    @property
    def is_ultrafilter(self):
        return self.gen in self.algebra.atoms

    def __le__(self, other):
        """Filter inclusion: a smaller generator means a larger filter."""
        return other.gen <= self.gen

    def __str__(self):
        return "up%s" % format_vset(self.gen)


def ultrafilters(algebra):
    """The ultrafilters of a finite restricted algebra, one per atom."""
    return tuple(PrincipalFilter(algebra, a) for a in sorted(algebra.atoms, key=vkey))


def all_filters(algebra):
    """Every filter of the algebra, one per nonzero element."""
    return tuple(
        PrincipalFilter(algebra, g) for g in sorted(algebra.elements, key=vkey) if g
    )


def _principal_or_none(algebra, members):
    if not members:
        return None
    gen = reduce(lambda a, b: a & b, members)
    if gen not in members:
        raise DomainError("filter preimage is not principal; family is not usable here")
    return PrincipalFilter(algebra, gen)


def preimage_filter(fam, alpha, beta, flt):
    """Pull a filter over the word alpha+beta back to a filter over alpha.

    This is the inverse image under A |-> r(A, beta): the sets whose relative
    range along beta lies in the given filter.  For nonempty alpha the result
    is again a filter; for the empty word it may be empty (None).
    """
    fam.require_wlr()
    alpha, beta = tuple(alpha), tuple(beta)
    if flt.algebra != fam.algebra(alpha + beta):
        raise DomainError("filter does not live over the word %s" % format_word(alpha + beta))
    source = fam.algebra(alpha)
    members = [a for a in source.elements if a and flt.gen <= fam.rel_range(a, beta)]
    return _principal_or_none(source, members)


class FiniteFilterFamily:
    """A tower of filters F_0 .. F_n along a finite word.

    ``gens[k]`` is the principal generator of F_k; ``gens[0]`` may be None,
    meaning F_0 is empty, except when the word itself is empty.  Complete
    towers satisfy F_k = {A : r(A, next letter) in F_{k+1}} at every level.
    """

    is_lasso = False

    def __init__(self, fam, word, gens):
        word = tuple(word)
        gens = tuple(frozenset(g) if g is not None else None for g in gens)
        if len(gens) != len(word) + 1:
            raise DomainError("need one filter per level, %d given" % len(gens))
        if gens[0] is None and not word:
            raise DomainError("the empty word requires a nonempty level-0 filter")
        self.fam = fam
        self.word = word
        self.gens = gens
        self._complete = None
        for n, g in enumerate(gens):
            if g is None:
                if n > 0:
                    raise DomainError("only the level-0 filter may be empty")
                continue
            if not g or g not in self.algebra_at(n):
                raise DomainError(
                    "level %d generator %s is not a nonzero element of its algebra"
                    % (n, format_vset(g))
                )

    @classmethod
    def from_top(cls, fam, word, top_gen):
        """Build the complete tower determined by its deepest filter."""
        fam.require_wlr()
        word = tuple(word)
        gens = [None] * (len(word) + 1)
        gens[len(word)] = frozenset(top_gen)
        for n in range(len(word) - 1, -1, -1):
            flt = PrincipalFilter(fam.algebra(word[:n + 1]), gens[n + 1])
            pre = preimage_filter(fam, word[:n], (word[n],), flt)
            if pre is None and n > 0:
                raise DomainError("level %d filter is empty; tower is not valid" % n)
            gens[n] = None if pre is None else pre.gen
        return cls(fam, word, gens)

    @property
    def length(self):
        return len(self.word)

    def word_prefix(self, n):
        return self.word[:n]

    def letter(self, n):
        return self.word[n - 1]

    def algebra_at(self, n):
        return self.fam.algebra(self.word[:n])

    def gen_at(self, n):
        return self.gens[n]

    def filter_at(self, n):
        g = self.gens[n]
        return None if g is None else PrincipalFilter(self.algebra_at(n), g)

    def top_gen(self):
        return self.gens[-1]

    def levels(self):
        return range(len(self.word) + 1)

    def _check_levels(self):
        return [(n, n + 1) for n in range(len(self.word))]

    def is_admissible(self):
        """F_n <= the preimage of F_{n+1} at every level.  By principality it
        suffices to test the generators."""
        for n, m in self._check_levels():
            if self.gens[n] is None:
                continue
            if self.gens[m] is None:
                return False
            if not self.gens[m] <= self.fam.rel_range(self.gens[n], (self.letter(m),)):
                return False
        return True

    def is_complete(self):
        if self._complete is None:
            self._complete = self._check_complete()
        return self._complete

    def _check_complete(self):
        for n, m in self._check_levels():
            if self.gens[m] is None:
                return False
            flt = PrincipalFilter(self.algebra_at(m), self.gens[m])
            pre = preimage_filter(self.fam, self.word[:n], (self.letter(m),), flt)
            pre_gen = None if pre is None else pre.gen
            if pre_gen != self.gens[n]:
                return False
        return True

    def completion(self):
        """The smallest complete tower above an admissible one."""
        if not self.is_admissible():
            raise DomainError("completion requires an admissible family")
        self.fam.require_wlr()
        new_gens = []
        for n in self.levels():
            algebra = self.algebra_at(n)
            members = [a for a in algebra.elements if a and self._eventually_reaches(n, a)]
            flt = _principal_or_none(algebra, members)
            new_gens.append(None if flt is None else flt.gen)
        return FiniteFilterFamily(self.fam, self.word, new_gens)

    def _eventually_reaches(self, n, vset):
        """Whether r(vset, word[n:m]) lands in F_m for some m >= n."""
        cur = vset
        for m in range(n, len(self.word) + 1):
            if m > n:
                cur = self.fam.rel_range(cur, (self.letter(m),))
            if not cur:
                return False
            if self.gens[m] is not None and self.gens[m] <= cur:
                return True
        return False

    def contains_idempotent(self, p):
        """Membership of an idempotent in the induced filter in E(S)."""
        if p.is_zero or not is_word_prefix(self, p.alpha):
            return False
        i = len(p.alpha)
        if self.is_complete():
            if i > len(self.word):
                return False
            return self.gens[i] is not None and self.gens[i] <= p.vset
        return _union_form_membership(self, p)

    def sort_key(self):
        return (0, len(self.word), self.word, vkey(self.gens[-1] or ()))

    def format(self):
        return "%s ; gen=%s" % (format_word(self.word), format_vset(self.gens[-1]))

    def canonical_key(self):
        return ("fin", self.word, vkey(self.gens[-1] or ()))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteFilterFamily)
            and self.fam == other.fam
            and self.word == other.word
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.word, self.gens))

    def __repr__(self):
        return "<finite filter family %s>" % self.format()


_DERIVE = object()


class LassoFilterFamily:
    """A filter tower along an eventually periodic infinite word.

    The level data is the sequence of pairs (letter, generator) for levels
    1, 2, ...; it is stored in canonical lasso form (primitive cycle, shortest
    prefix).  F_0 is kept separately: it may be empty (None), and for complete
    towers it is determined by level 1, which is what the default computes.
    """

    is_lasso = True

    def __init__(self, fam, prefix_letters, cycle_letters, prefix_gens, cycle_gens, f0_gen=_DERIVE):
        fam.require_wlr()
        prefix_letters, cycle_letters = tuple(prefix_letters), tuple(cycle_letters)
        prefix_gens = tuple(frozenset(g) for g in prefix_gens)
        cycle_gens = tuple(frozenset(g) for g in cycle_gens)
        if len(prefix_letters) != len(prefix_gens) or len(cycle_letters) != len(cycle_gens):
            raise DomainError("letters and generators must align level by level")
        if not cycle_letters:
            raise DomainError("lasso cycle must be nonempty")
        prefix, cycle = canonical_lasso(
            tuple(zip(prefix_letters, prefix_gens)), tuple(zip(cycle_letters, cycle_gens))
        )
        self.fam = fam
        self.prefix_letters = tuple(b for b, _ in prefix)
        self.prefix_gens = tuple(g for _, g in prefix)
        self.cycle_letters = tuple(b for b, _ in cycle)
        self.cycle_gens = tuple(g for _, g in cycle)
        self._complete = None
        self._ranges = [fam.graph.vertex_set]
        self._window_end, self._wrap = self._compute_window()
        for n in range(1, self._window_end + 1):
            g = self.gen_at(n)
            if not g or g not in self.algebra_at(n):
                raise DomainError(
                    "level %d generator %s is not a nonzero element of its algebra"
                    % (n, format_vset(g))
                )
        if f0_gen is _DERIVE:
            flt = preimage_filter(
                fam, (), (self.letter(1),), PrincipalFilter(self.algebra_at(1), self.gen_at(1))
            )
            self.f0_gen = None if flt is None else flt.gen
        else:
            self.f0_gen = None if f0_gen is None else frozenset(f0_gen)
            if self.f0_gen is not None and (
                not self.f0_gen or self.f0_gen not in self.algebra_at(0)
            ):
                raise DomainError("level 0 generator is not a nonzero family member")

    @property
    def prefix_len(self):
        return len(self.prefix_letters)

    @property
    def cycle_len(self):
        return len(self.cycle_letters)

    def letter(self, n):
        return lasso_value(self.prefix_letters, self.cycle_letters, n)

    def gen_at(self, n):
        if n == 0:
            return self.f0_gen
        return lasso_value(self.prefix_gens, self.cycle_gens, n)

    def word_prefix(self, n):
        return tuple(self.letter(k) for k in range(1, n + 1))

    def range_at(self, n):
        while len(self._ranges) <= n:
            k = len(self._ranges)
            self._ranges.append(self.fam.graph.step(self._ranges[k - 1], self.letter(k)))
        return self._ranges[n]

    def algebra_at(self, n):
        if n == 0:
            return self.fam.algebra(())
        rng = self.range_at(n)
        if not rng:
            raise DomainError("the lasso word leaves the labelled paths at level %d" % n)
        return self.fam.algebra_over(rng)

    def filter_at(self, n):
        g = self.gen_at(n)
        return None if g is None else PrincipalFilter(self.algebra_at(n), g)

    def _phase(self, n):
        p, c = self.prefix_len, self.cycle_len
        return ("pre", n) if n <= p else ("cyc", (n - p - 1) % c)

    def _compute_window(self):
        """Smallest window [1..W] such that level W+1 repeats an earlier
        level T both in cycle phase and in range set; all level-indexed
        checks become exact when verified on the window with W+1 -> T."""
        seen = {}
        n = 1
        while True:
            state = (self._phase(n), self.range_at(n))
            if state in seen and n > self.prefix_len:
                return n - 1, seen[state]
            if state not in seen:
                seen[state] = n
            n += 1

    def levels(self):
        return range(self._window_end + 1)

    def _check_levels(self):
        pairs = [(n, n + 1) for n in range(self._window_end)]
        pairs.append((self._window_end, self._wrap))
        return pairs

    def is_admissible(self):
        for n, m in self._check_levels():
            g = self.gen_at(n)
            if g is None:
                continue
            if not self.gen_at(m) <= self.fam.rel_range(g, (self.letter(n + 1),)):
                return False
        return True

    def is_complete(self):
        if self._complete is None:
            self._complete = self._check_complete()
        return self._complete

    def _check_complete(self):
        for n, m in self._check_levels():
            flt = PrincipalFilter(self.algebra_at(m), self.gen_at(m))
            members = [
                a
                for a in self.algebra_at(n).elements
                if a and flt.gen <= self.fam.rel_range(a, (self.letter(n + 1),))
            ]
            pre = _principal_or_none(self.algebra_at(n), members)
            pre_gen = None if pre is None else pre.gen
            if pre_gen != self.gen_at(n):
                return False
        return True

    def completion(self):
        if not self.is_admissible():
            raise DomainError("completion requires an admissible family")
        new = {}
        for n in self.levels():
            algebra = self.algebra_at(n)
            members = [a for a in algebra.elements if a and self._eventually_reaches(n, a)]
            flt = _principal_or_none(algebra, members)
            new[n] = None if flt is None else flt.gen
        # the completed generators are determined by (cycle phase, range set),
        # so they repeat over the window period; lay the result out over the
        # window and let canonicalization shrink the cycle again
        wrap, end = self._wrap, self._window_end
        return LassoFilterFamily(
            self.fam,
            tuple(self.letter(n) for n in range(1, wrap)),
            tuple(self.letter(n) for n in range(wrap, end + 1)),
            [new[n] for n in range(1, wrap)],
            [new[n] for n in range(wrap, end + 1)],
            f0_gen=new[0],
        )

    def _eventually_reaches(self, n, vset):
        cur = vset
        m = n
        seen = set()
        while True:
            if m > n:
                cur = self.fam.rel_range(cur, (self.letter(m),))
            if not cur:
                return False
            g = self.gen_at(m)
            if g is not None and g <= cur:
                return True
            state = (self._phase(max(m, 1)) if m else ("zero",), cur)
            if m > self.prefix_len and state in seen:
                return False
            seen.add(state)
            m += 1

    def contains_idempotent(self, p):
        if p.is_zero or not is_word_prefix(self, p.alpha):
            return False
        i = len(p.alpha)
        if self.is_complete():
            return self.gen_at(i) is not None and self.gen_at(i) <= p.vset
        return _union_form_membership(self, p)

    def node_at(self, n):
        """The transition-graph node (range set, generator) at level n >= 1."""
        return (self.range_at(n), self.gen_at(n))

    def node_lasso(self):
        """The level sequence as (letter, node) pairs in canonical lasso form.

        The node cycle may be a multiple of the letter/generator cycle when
        the range sets settle with a longer period.
        """
        pairs = [
            (self.letter(n), self.node_at(n)) for n in range(1, self._window_end + 1)
        ]
        period = self._window_end + 1 - self._wrap
        return canonical_lasso(pairs[: self._wrap - 1], pairs[self._wrap - 1:][:period])

    def is_ultrafilter_shaped(self):
        """Every level generator is an atom of its algebra; with a
        complement-closed family this characterizes the ultrafilter towers."""
        return all(
            self.gen_at(n) in self.algebra_at(n).atoms
            for n in range(1, self._window_end + 1)
        )

    def sort_key(self):
        return (
            1,
            self.prefix_len,
            self.prefix_letters,
            tuple(vkey(g) for g in self.prefix_gens),
            self.cycle_len,
            self.cycle_letters,
            tuple(vkey(g) for g in self.cycle_gens),
        )

    def format(self):
        pre = format_word(self.prefix_letters) if self.prefix_letters else ""
        gens_pre = "".join(format_vset(g) for g in self.prefix_gens)
        gens_cyc = "".join(format_vset(g) for g in self.cycle_gens)
        return "%s(%s)^inf ; gens=%s(%s)^inf ; f0=%s" % (
            pre,
            format_word(self.cycle_letters),
            gens_pre,
            gens_cyc,
            "empty" if self.f0_gen is None else format_vset(self.f0_gen),
        )

    def canonical_key(self):
        return (
            "inf",
            self.prefix_letters,
            tuple(vkey(g) for g in self.prefix_gens),
            self.cycle_letters,
            tuple(vkey(g) for g in self.cycle_gens),
        )

    def __eq__(self, other):
        return (
            isinstance(other, LassoFilterFamily)
            and self.fam == other.fam
            and self.canonical_key() == other.canonical_key()
            and self.f0_gen == other.f0_gen
        )

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return "<lasso filter family %s>" % self.format()


def is_word_prefix(family, word):
    """Whether ``word`` is a beginning of the family's (possibly infinite) word."""
    word = tuple(word)
    if family.is_lasso:
        return all(family.letter(k + 1) == b for k, b in enumerate(word))
    return family.word[: len(word)] == word and len(word) <= len(family.word)


def _union_form_membership(family, p):
    """Membership via the defining union: some deeper level filter must pull
    below the idempotent.  Used for admissible (not yet complete) towers."""
    i = len(p.alpha)
    cur = p.vset
    n = i
    seen = set()
    while True:
        if n > i:
            cur = family.fam.rel_range(cur, (family.letter(n),))
        if not cur:
            return False
        g = family.gen_at(n)
        if g is not None and g <= cur:
            return True
        if family.is_lasso:
            state = (family._phase(max(n, 1)), cur)
            if n > family.prefix_len and state in seen:
                return False
            seen.add(state)
        elif n >= len(family.word):
            return False
        n += 1


def es_filter_membership(fam, family, p):
    """Does the idempotent ``p`` belong to the filter in E(S) described by
    the given tower?"""
    if family.fam != fam:
        raise DomainError("the tower lives over a different family")
    return family.contains_idempotent(p)


def enumerate_complete_families(fam, word):
    """Every complete tower along a finite word, by exhausting the choices of
    the deepest filter and deriving the rest."""
    fam.require_wlr()
    word = tuple(word)
    out = []
    for flt in all_filters(fam.algebra(word)):
        try:
            out.append(FiniteFilterFamily.from_top(fam, word, flt.gen))
        except DomainError:
            continue
    return tuple(out)


def is_maximal_complete_family(fam, family):
    """Maximality among the complete towers for the same word, checked by
    exhaustive enumeration (finite words only)."""
    if family.is_lasso:
        raise DomainError("maximality search is only available for finite words")
    if not family.is_complete():
        raise DomainError("maximality is about complete families")
    for other in enumerate_complete_families(fam, family.word):
        if other.gens == family.gens:
            continue
        if _pointwise_leq(family, other):
            return False
    return True


def _pointwise_leq(fam_a, fam_b):
    """Pointwise filter inclusion of towers; empty levels sit below all."""
    for n in fam_a.levels():
        ga, gb = fam_a.gen_at(n), fam_b.gen_at(n)
        if ga is None:
            continue
        if gb is None or not gb <= ga:
            return False
    return True


def is_es_ultrafilter(fam, family):
    """Ultrafilter test for a filter in E(S).

    Finite type: the deepest filter must be an ultrafilter whose generator
    kills every letter.  Infinite type: every level must be an ultrafilter,
    which needs the family to be closed under relative complements.
    """
    if family.is_lasso:
        fam.require_complements()
        return family.is_ultrafilter_shaped()
    top = family.filter_at(len(family.word))
    if top is None or not top.is_ultrafilter:
        return False
    return all(not fam.rel_range(top.gen, (b,)) for b in fam.graph.alphabet)


def parse_filter_family(fam, text):
    """Parse the command-line filter syntax.

    Finite type: ``word ; gen={v ...}``.  Lassos: ``pre(cyc)^inf ;
    gens={..}..({..}..)^inf`` with one generator per level; the level-0
    filter is derived by the completeness recurrence.
    """
    text = text.strip()
    if "^inf" in text:
        try:
            wordpart, genspart = [part.strip() for part in text.split(";")]
        except ValueError:
            raise ParseError("expected 'word ; gens=...' in %r" % text)
        if not genspart.startswith("gens=") or not genspart.endswith(")^inf"):
            raise ParseError("lasso generators must look like gens=...(...)^inf")
        if not wordpart.endswith(")^inf"):
            raise ParseError("lasso word must look like pre(cyc)^inf")
        pre_word, sep, cyc_word = wordpart[:-len(")^inf")].partition("(")
        if not sep or not cyc_word:
            raise ParseError("lasso word must look like pre(cyc)^inf")
        gens_body = genspart[len("gens="):-len(")^inf")]
        pre_gens_text, _, cyc_gens_text = gens_body.rpartition("(")
        from .util import parse_vset_list

        return LassoFilterFamily(
            fam,
            parse_word(pre_word) if pre_word else (),
            parse_word(cyc_word),
            parse_vset_list(pre_gens_text),
            parse_vset_list(cyc_gens_text),
        )
    try:
        wordpart, genpart = [part.strip() for part in text.split(";")]
    except ValueError:
        raise ParseError("expected 'word ; gen={...}' in %r" % text)
    if not genpart.startswith("gen="):
        raise ParseError("finite-type filters must give gen={...}")
    return FiniteFilterFamily.from_top(fam, parse_word(wordpart), parse_vset(genpart[4:]))
