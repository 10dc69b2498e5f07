"""Brute-force ground truth by streaming over S_n.

Everything here iterates itertools.permutations lazily and tallies; S_n is
never materialized.  Full sweeps are cached per n, boundary tables per
composition, so repeated queries at the same size cost one pass.
"""

import itertools
from functools import lru_cache

from .compositions import Composition, PeakSet

DEFAULT_LIMIT = 10


class ExhaustionLimitError(Exception):
    """A brute-force request would enumerate more than limit! permutations."""


def _check_limit(n, limit):
    if limit is None:
        limit = DEFAULT_LIMIT
    if n > limit:
        raise ExhaustionLimitError(
            "exhaustion limit: size %d exceeds limit %d" % (n, limit))


def peak_set(word):
    """Peak positions of a sequence of distinct integers, as a PeakSet."""
    word = tuple(word)
    n = len(word)
    positions = [i for i in range(2, n)
                 if word[i - 2] < word[i - 1] > word[i]]
    return PeakSet(positions, n)


def peak_composition(word):
    """Gap composition cut by the peak positions of word."""
    word = tuple(word)
    n = len(word)
    if n == 0:
        return Composition()
    prev, parts = 0, []
    for i in range(2, n):
        if word[i - 2] < word[i - 1] > word[i]:
            parts.append(i - prev)
            prev = i
    parts.append(n - prev)
    return Composition(parts)


def pattern_of(word):
    """The permutation of [len(word)] order-isomorphic to word."""
    word = tuple(word)
    if len(set(word)) != len(word):
        raise ValueError("entries must be distinct")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


@lru_cache(maxsize=None)
def _composition_counts(n):
    # one pass over S_n: peak composition -> count
    if n == 0:
        return {(): 1}
    counts = {}
    for w in itertools.permutations(range(1, n + 1)):
        prev, parts = 0, []
        for i in range(2, n):
            if w[i - 2] < w[i - 1] > w[i]:
                parts.append(i - prev)
                prev = i
        parts.append(n - prev)
        key = tuple(parts)
        counts[key] = counts.get(key, 0) + 1
    return counts


def count_bruteforce(c, limit=None):
    """Number of permutations whose peak composition is c, by exhaustion."""
    c = Composition(c)
    n = c.size
    _check_limit(n, limit)
    if n == 0:
        return 1
    return _composition_counts(n).get(tuple(c), 0)


@lru_cache(maxsize=None)
def _t_tables(n):
    # one pass over S_n: composition -> counts of the last letter among
    # permutations that end with an ascent
    tables = {}
    if n < 2:
        return tables
    for w in itertools.permutations(range(1, n + 1)):
        if w[-2] > w[-1]:
            continue
        prev, parts = 0, []
        for i in range(2, n):
            if w[i - 2] < w[i - 1] > w[i]:
                parts.append(i - prev)
                prev = i
        parts.append(n - prev)
        key = tuple(parts)
        if key not in tables:
            tables[key] = [0] * n
        tables[key][w[-1] - 1] += 1
    return tables


def t_vector(c, limit=None):
    """Entry b counts members of the class of c that end with an ascent into b."""
    c = Composition(c)
    n = c.size
    _check_limit(n, limit)
    if n == 0:
        return ()
    vec = _t_tables(n).get(tuple(c))
    return tuple(vec) if vec is not None else (0,) * n


class CountMatrix:
    """Square table of counts indexed 1..n by first letter a and last letter b."""

    __slots__ = ("n", "_rows")

    def __init__(self, n, rows):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "_rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("CountMatrix is immutable")

    def at(self, a, b):
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            raise IndexError("indices (%d,%d) outside 1..%d" % (a, b, self.n))
        return self._rows[a - 1][b - 1]

    def rows(self):
        return self._rows

    def __eq__(self, other):
        return (isinstance(other, CountMatrix)
                and self.n == other.n and self._rows == other._rows)

    def __hash__(self):
        return hash((self.n, self._rows))

    def __repr__(self):
        return "CountMatrix(%d, %r)" % (self.n, self._rows)


@lru_cache(maxsize=None)
def _boundary_tables(c):
    # one filtered pass: (Int rows, Ini rows) for the class of c.
    # Ini fixes the first letter and requires a final ascent; Int further
    # requires an initial descent.  Both are empty for n < 2 and Int for n < 3.
    n = sum(c)
    int_rows = [[0] * n for _ in range(n)]
    ini_rows = [[0] * n for _ in range(n)]
    if n >= 2:
        for w in itertools.permutations(range(1, n + 1)):
            if w[-2] > w[-1]:
                continue
            prev, parts = 0, []
            for i in range(2, n):
                if w[i - 2] < w[i - 1] > w[i]:
                    parts.append(i - prev)
                    prev = i
            parts.append(n - prev)
            if tuple(parts) != c:
                continue
            ini_rows[w[0] - 1][w[-1] - 1] += 1
            if n >= 3 and w[0] > w[1]:
                int_rows[w[0] - 1][w[-1] - 1] += 1
    return (tuple(tuple(r) for r in int_rows),
            tuple(tuple(r) for r in ini_rows))


def int_matrix(c, limit=None):
    """Int_{a,b} table: class members with first letter a starting with a
    descent and last letter b arrived at by an ascent."""
    c = Composition(c)
    if len(c) == 0:
        raise ValueError("boundary tables need a nonempty composition")
    _check_limit(c.size, limit)
    return CountMatrix(c.size, _boundary_tables(tuple(c))[0])


def ini_matrix(c, limit=None):
    """Ini_{a,b} table: class members with first letter a and last letter b
    arrived at by an ascent."""
    c = Composition(c)
    if len(c) == 0:
        raise ValueError("boundary tables need a nonempty composition")
    _check_limit(c.size, limit)
    return CountMatrix(c.size, _boundary_tables(tuple(c))[1])


def permutations_with_composition(c, limit=None):
    """Yield the class of c in lexicographic order."""
    c = Composition(c)
    n = c.size
    _check_limit(n, limit)
    if n == 0:
        yield ()
        return
    target = tuple(c)
    for w in itertools.permutations(range(1, n + 1)):
        prev, parts = 0, []
        for i in range(2, n):
            if w[i - 2] < w[i - 1] > w[i]:
                parts.append(i - prev)
                prev = i
        parts.append(n - prev)
        if tuple(parts) == target:
            yield w


@lru_cache(maxsize=None)
def int_classes(c):
    """(a, b) -> lex-sorted tuple of the Int_{a,b} members of the class of c."""
    out = {}
    for w in permutations_with_composition(Composition(c)):
        if len(w) >= 3 and w[0] > w[1] and w[-2] < w[-1]:
            out.setdefault((w[0], w[-1]), []).append(w)
    return {key: tuple(members) for key, members in out.items()}


def first_ini_member(c, b, limit=None):
    """Lexicographically smallest class member ending with an ascent into b."""
    for w in permutations_with_composition(Composition(c), limit):
        if len(w) >= 2 and w[-2] < w[-1] and w[-1] == b:
            return w
    return None
