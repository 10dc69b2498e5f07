"""Exact counting by boustrophedon recurrences, no enumeration.

beta(w) is the number of permutations whose sign word (pointwise +/- for
ascent/descent) equals w.  It follows from the classical rank recurrence:
scan w keeping f[r] = number of ways to place a prefix whose last letter
has rank r among the letters placed so far; an ascent step replaces f by
its strict prefix sums, a descent step by its inclusive suffix sums.

count_fast(c) runs the same recurrence over every sign word compatible
with the peak set of c at once.  The state carries the sign of the last
step, so at a peak position the step admits exactly the pair (+,-), and
at a non-peak interior position it forbids that pair.  The result is P(c)
in time O(size^2) with exact integers throughout.
"""

from functools import lru_cache

from .compositions import Composition, composition_to_peakset, is_admissible


def _ascend(v):
    # out[j] = v[0] + ... + v[j-1]  (strict prefix sums, length grows by 1)
    out, run = [0] * (len(v) + 1), 0
    for j in range(1, len(v) + 1):
        run += v[j - 1]
        out[j] = run
    return out


def _descend(v):
    # out[j] = v[j] + ... + v[-1]  (inclusive suffix sums, length grows by 1)
    out, run = [0] * (len(v) + 1), 0
    for j in range(len(v) - 1, -1, -1):
        run += v[j]
        out[j] = run
    return out


def beta(word):
    """Number of permutations of [len(word)+1] whose sign word equals word."""
    v = [1]
    for ch in word:
        if ch == "+":
            v = _ascend(v)
        elif ch == "-":
            v = _descend(v)
        else:
            raise ValueError("sign words use only '+' and '-'")
    return sum(v)


def compatible_words(s):
    """Yield the sign words of length ambient-1 whose peak set is exactly s.

    A position i >= 2 is a peak of a word exactly when signs (i-1, i) read
    (+,-).  Yields lexicographically with '+' < '-'.
    """
    n = s.ambient
    peaks = set(s.positions)
    if n == 0:
        yield ""
        return

    def extend(prefix, i):
        if i == n:
            yield "".join(prefix)
            return
        for z in "+-":
            if i >= 2:
                is_peak = prefix[-1] == "+" and z == "-"
                if is_peak != (i in peaks):
                    continue
            prefix.append(z)
            yield from extend(prefix, i + 1)
            prefix.pop()

    yield from extend([], 1)


@lru_cache(maxsize=None)
def _count_and_t(parts):
    n = sum(parts)
    if n == 0:
        return 1, ()
    if len(parts) > 1 and any(p < 2 for p in parts[:-1]):
        return 0, (0,) * n
    if n == 1:
        return 1, (0,)
    peaks = set()
    acc = 0
    for p in parts[:-1]:
        acc += p
        peaks.add(acc)
    # plus[r] / minus[r]: prefixes whose last letter has rank r+1 and whose
    # last step was an ascent / descent, after placing i letters
    plus, minus = _ascend([1]), _descend([1])
    for i in range(2, n):
        if i in peaks:
            plus, minus = [0] * (i + 1), _descend(plus)
        else:
            both = [a + b for a, b in zip(plus, minus)]
            plus, minus = _ascend(both), _descend(minus)
    return sum(plus) + sum(minus), tuple(plus)


def count_fast(c):
    """P(c): permutations whose peak composition is c; 0 when inadmissible."""
    return _count_and_t(tuple(Composition(c)))[0]


def t_vector_fast(c):
    """Same vector as the oracle t_vector, from the constrained recurrence."""
    return _count_and_t(tuple(Composition(c)))[1]


def count_via_words(c):
    """P(c) as the sum of beta over compatible sign words; a cross-check."""
    c = Composition(c)
    if not is_admissible(c):
        return 0
    return sum(beta(w) for w in compatible_words(composition_to_peakset(c)))
