"""Minimal forbidden words of the unique-trail language.

The accepted language is factorial (every factor of an accepted trail is
accepted), so it is fully determined by its minimal forbidden words: the
rejected strings all of whose proper factors are accepted.  Two generators
are provided and must agree:

* ``constructive_mfw`` builds words from the two anchor shapes
  ``a x b z a y b`` (distinct anchors) and ``a x a y a`` (one anchor),
  where the filler segments avoid the anchors, are pairwise vertex
  disjoint, are themselves accepted, and x, y are not both empty.
* ``brute_mfw`` scans every string up to the length bound.

Over two symbols the whole set collapses to four one-parameter families:
``0 0 1..1 0``, ``0 1..1 0 0`` and the 0/1 swaps.
"""

import itertools

from .automaton import run
from .core import Trail


def _accepted_words(symbols: list[int], max_len: int, size: int) -> list[Trail]:
    """Accepted strings over the given symbols, lengths 0..max_len."""
    words: list[Trail] = []
    for length in range(max(max_len, -1) + 1):
        for word in itertools.product(symbols, repeat=length):
            if run(word, size).accepted:
                words.append(word)
    return words


def constructive_mfw(size: int, max_len: int) -> list[Trail]:
    """Render every valid anchor shape up to max_len; deduplicated, sorted."""
    if size < 1:
        raise ValueError("alphabet size must be at least 1")
    found: set[Trail] = set()

    def emit(word: Trail, second_anchor: int) -> None:
        # Filler disjointness forces distinct followers after the two
        # leading anchor occurrences, i.e. shapes are proper by build.
        assert word[1] != word[second_anchor + 1], f"improper rendering {word}"
        found.add(word)

    for a in range(size):
        rest = [s for s in range(size) if s != a]
        budget = max_len - 3
        pool = _accepted_words(rest, budget, size)
        for x in pool:
            for y in pool:
                if len(x) + len(y) > budget or (not x and not y):
                    continue
                if set(x) & set(y):
                    continue
                emit((a,) + x + (a,) + y + (a,), 1 + len(x))

    for a in range(size):
        for b in range(size):
            if b == a:
                continue
            rest = [s for s in range(size) if s not in (a, b)]
            budget = max_len - 4
            pool = _accepted_words(rest, budget, size)
            for x in pool:
                for y in pool:
                    if len(x) + len(y) > budget or (not x and not y):
                        continue
                    if set(x) & set(y):
                        continue
                    for z in pool:
                        if len(x) + len(y) + len(z) > budget:
                            continue
                        if set(z) & (set(x) | set(y)):
                            continue
                        emit((a,) + x + (b,) + z + (a,) + y + (b,), 2 + len(x) + len(z))
    return sorted(found)


def brute_mfw(size: int, max_len: int) -> list[Trail]:
    """Rejected strings whose two maximal proper factors are accepted.

    Because the accepted language is factorial, checking the two length-(n-1)
    factors covers all shorter factors.
    """
    if size < 1:
        raise ValueError("alphabet size must be at least 1")
    words = []
    for length in range(1, max_len + 1):
        for word in itertools.product(range(size), repeat=length):
            if run(word, size).accepted:
                continue
            if run(word[1:], size).accepted and run(word[:-1], size).accepted:
                words.append(word)
    return sorted(words)


def matches_binary_mfw(trail: Trail) -> bool:
    """Membership in the four binary families, checked by direct scan."""
    for symbol in trail:
        if symbol not in (0, 1):
            raise ValueError(f"symbol {symbol} is not binary")
    n = len(trail)
    if n < 4:
        return False
    for c in (0, 1):
        run_part = (1 - c,) * (n - 3)
        if trail == (c, c) + run_part + (c,):
            return True
        if trail == (c,) + run_part + (c, c):
            return True
    return False
