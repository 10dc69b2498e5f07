"""Integer compositions, peak sets, and the operations connecting them.

A permutation sigma of [n] has a peak at an interior position i when
sigma_{i-1} < sigma_i > sigma_{i+1}.  The gaps between consecutive peak
positions (and the two boundary gaps) form a composition of n, and that
composition is the key everything else in this package is indexed by.
"""

from __future__ import annotations


class Composition(tuple):
    """A finite sequence of positive integer parts; the empty one has size 0."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError("composition parts must be >= 1")
        return super().__new__(cls, parts)

    @classmethod
    def from_string(cls, text):
        """Parse comma-separated parts; the empty string is the empty composition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(piece) for piece in text.split(","))

    @property
    def size(self):
        return sum(self)

    def __str__(self):
        return ",".join(str(p) for p in self)

    def __repr__(self):
        return "Composition(%r)" % (tuple(self),)


EMPTY = Composition()


class PeakSet:
    """Positions 2 <= i <= n-1, pairwise non-adjacent, inside an ambient size n."""

    __slots__ = ("positions", "ambient")

    def __init__(self, positions, ambient):
        ambient = int(ambient)
        if ambient < 0:
            raise ValueError("ambient size must be >= 0")
        positions = tuple(int(p) for p in positions)
        if list(positions) != sorted(set(positions)):
            raise ValueError("positions must be strictly increasing")
        for p in positions:
            if not 2 <= p <= ambient - 1:
                raise ValueError("position %d outside 2..%d" % (p, ambient - 1))
        for a, b in zip(positions, positions[1:]):
            if b - a < 2:
                raise ValueError("positions %d,%d are adjacent" % (a, b))
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "ambient", ambient)

    def __setattr__(self, name, value):
        raise AttributeError("PeakSet is immutable")

    @classmethod
    def from_string(cls, text, ambient):
        text = text.strip()
        positions = [int(piece) for piece in text.split(",")] if text else []
        return cls(positions, ambient)

    def __eq__(self, other):
        return (isinstance(other, PeakSet)
                and self.positions == other.positions
                and self.ambient == other.ambient)

    def __hash__(self):
        return hash((self.positions, self.ambient))

    def __str__(self):
        return ",".join(str(p) for p in self.positions)

    def __repr__(self):
        return "PeakSet(%r, %d)" % (self.positions, self.ambient)


def concat(a, b):
    """Concatenation of two compositions."""
    return Composition(tuple(a) + tuple(b))


def is_admissible(c):
    """True when some permutation realizes c: every part but the last is >= 2."""
    c = tuple(c)
    if len(c) <= 1:
        return True
    return all(p >= 2 for p in c[:-1])


def reverse_r(c):
    """The reversal partner (c_k + 1, c_{k-1}, ..., c_2, c_1 - 1); fixes one-part c.

    Counting is invariant under this map.  Undefined for the empty
    composition, and for multi-part c with first part 1 (the image would
    need a zero part).
    """
    c = Composition(c)
    if len(c) == 0:
        raise ValueError("empty composition has no reversal partner")
    if len(c) == 1:
        return c
    if c[0] < 2:
        raise ValueError("first part must be >= 2 to reverse")
    return Composition((c[-1] + 1,) + tuple(reversed(c[1:-1])) + (c[0] - 1,))


def increase_first(c):
    """Add 1 to the first part."""
    c = Composition(c)
    if len(c) == 0:
        raise ValueError("empty composition has no first part")
    return Composition((c[0] + 1,) + tuple(c[1:]))


def composition_to_peakset(c):
    """Peak positions realizing c: the partial sums of all but the last part."""
    c = Composition(c)
    if not is_admissible(c):
        raise ValueError("composition %s is not admissible" % (c,))
    acc, positions = 0, []
    for p in c[:-1]:
        acc += p
        positions.append(acc)
    return PeakSet(positions, c.size)


def peakset_to_composition(s):
    """Inverse of composition_to_peakset."""
    if s.ambient == 0:
        return EMPTY
    parts, prev = [], 0
    for p in s.positions:
        parts.append(p - prev)
        prev = p
    parts.append(s.ambient - prev)
    return Composition(parts)


class Factorization3(object):
    """Factors of a composition split at its parts equal to 3.

    factors[0] and factors[-1] are the (possibly empty) outer factors; a
    composition with j parts equal to 3 has j+1 factors and k() == j.
    """

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple(Composition(f) for f in factors)
        if not factors:
            raise ValueError("need at least one factor")
        for f in factors:
            if 3 in f:
                raise ValueError("factor %s is not 3-free" % (f,))
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("Factorization3 is immutable")

    @property
    def k(self):
        return len(self.factors) - 1

    def reassemble(self):
        """Interleave the factors with single parts equal to 3."""
        out = tuple(self.factors[0])
        for f in self.factors[1:]:
            out = out + (3,) + tuple(f)
        return Composition(out)

    def __eq__(self, other):
        return isinstance(other, Factorization3) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return "Factorization3(%r)" % (self.factors,)


def three_factorization(c):
    """Split c at every part equal to 3."""
    c = Composition(c)
    factors, current = [], []
    for p in c:
        if p == 3:
            factors.append(current)
            current = []
        else:
            current.append(p)
    factors.append(current)
    return Factorization3(factors)


def enumerate_admissible(n):
    """All admissible compositions of n, lexicographically by parts."""
    n = int(n)
    if n < 0:
        raise ValueError("size must be >= 0")
    if n == 0:
        yield EMPTY
        return
    yield from (Composition(parts) for parts in _admissible_parts(n))


def _admissible_parts(n):
    # every part before the last is >= 2, the last is >= 1
    for first in range(2, n):
        for rest in _admissible_parts(n - first):
            yield (first,) + rest
    yield (n,)


def predicted_maximal(n):
    """The compositions classified as maximal for size n >= 6."""
    n = int(n)
    if n < 6:
        raise ValueError("classification is stated only for n >= 6")
    ell, r = divmod(n, 3)
    if r == 0:
        return {Composition((3,) * ell),
                Composition((4,) + (3,) * (ell - 2) + (2,))}
    if r == 1:
        return {Composition((3,) * s + (2,) + (3,) * (ell - 1 - s) + (2,))
                for s in range(1, ell)}
    return {Composition((3,) * ell + (2,))}
