"""Small shared helpers: canonical ordering, word and set formatting, lassos."""

from .errors import ParseError

EMPTY_WORD_TOKEN = "@"


def vkey(members):
    """Sort key for a vertex set: the lexicographically sorted member tuple."""
    return tuple(sorted(members))


def sort_sets(sets):
    """Deduplicate and order a collection of vertex sets canonically."""
    return tuple(sorted(set(sets), key=vkey))


def format_vset(members):
    return "{%s}" % " ".join(sorted(members))


def parse_vset(text):
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError("expected a set like {v1 v2}, got %r" % text)
    body = text[1:-1].strip()
    return frozenset(body.split()) if body else frozenset()


def parse_vset_list(text):
    """Parse a concatenation of set literals: ``{a b}{c}{}``."""
    text = text.strip()
    sets = []
    while text:
        if not text.startswith("{"):
            raise ParseError("expected '{' in set list, got %r" % text)
        end = text.find("}")
        if end < 0:
            raise ParseError("unterminated set in %r" % text)
        sets.append(parse_vset(text[: end + 1]))
        text = text[end + 1 :].strip()
    return sets


def format_word(word):
    """Words print as letters joined by dots; the empty word prints as '@'."""
    return ".".join(word) if word else EMPTY_WORD_TOKEN


def parse_word(text):
    text = text.strip()
    if text == EMPTY_WORD_TOKEN or text == "":
        return ()
    parts = text.split(".")
    if any(not p for p in parts):
        raise ParseError("empty letter in word %r" % text)
    return tuple(parts)


def canonical_lasso(prefix, cycle):
    """Normalize an eventually periodic sequence given as (prefix, cycle).

    The cycle is reduced to its primitive root, then the prefix is shortened
    as far as possible by rotating the cycle backwards.  Two representations
    of the same infinite sequence normalize to the same pair.
    """
    prefix = list(prefix)
    cycle = list(cycle)
    if not cycle:
        raise ValueError("lasso cycle must be nonempty")
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle == cycle[:d] * (n // d):
            cycle = cycle[:d]
            break
    while prefix and prefix[-1] == cycle[-1]:
        cycle = cycle[-1:] + cycle[:-1]
        prefix.pop()
    return tuple(prefix), tuple(cycle)


def lasso_value(prefix, cycle, n):
    """Element at 1-based position ``n`` of the sequence prefix + cycle^inf."""
    if n < 1:
        raise IndexError("lasso positions are 1-based")
    if n <= len(prefix):
        return prefix[n - 1]
    return cycle[(n - len(prefix) - 1) % len(cycle)]
