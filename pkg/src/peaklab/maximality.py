"""Exhaustive maximality search, certified pruning, and theorem checks.

exact_maximal races every admissible composition of n through the DP
engine.  Pruning is an optional accelerator backed by proved necessary
conditions; it must never change the outcome, and the search spot-checks
that by still counting a sample of what it pruned.
"""

from dataclasses import dataclass
from typing import Optional

from .closedforms import theorem2_value
from .compositions import (Composition, enumerate_admissible, is_admissible,
                           predicted_maximal, three_factorization)
from .fastcount import count_fast

RULE_IDS = ("LARGE_PART", "HEAD", "TAIL", "INFIX_24_42", "HEAD_44",
            "HEAD2", "TAIL2", "FACTOR", "COR62")

_HEAD_PAIRS = {(2, 2), (2, 3), (2, 4)}
_TAIL_PAIRS = {(2, 1), (3, 1), (4, 1)}
_INFIX_PAIRS = {(2, 4), (4, 2)}
_HEAD2_PREFIXES = ((4, 3, 2), (4, 3, 4), (3, 2, 3, 2), (3, 3, 2, 3, 2))
_TAIL2_SUFFIXES = ((2, 3, 3), (4, 3, 3), (2, 3, 2, 2), (2, 3, 2, 3, 2))
_FACTOR_LEAD = {(), (4,)}
_FACTOR_TRAIL = {(), (2,), (2, 2)}
_FACTOR_MIDDLE = {(), (2,), (4,)}


@dataclass(frozen=True)
class PruneRule:
    rule: str
    pattern: str


class PruningSoundnessError(Exception):
    """A pruned composition attained or exceeded the exact maximum."""


def prune(c):
    """First proved non-maximality condition matching c, or None.

    Every rule is a necessary condition for maximality, so a hit certifies
    the composition cannot win the race.
    """
    c = Composition(c)
    if not is_admissible(c):
        raise ValueError("composition %s is not admissible" % (c,))
    k = len(c)

    if k == 1 and c[0] >= 5:
        return PruneRule("LARGE_PART", "single part %d" % c[0])
    if k >= 2:
        for i in range(k - 1):
            if c[i] >= 5:
                return PruneRule("LARGE_PART", "part %d at index %d" % (c[i], i + 1))
        if c[-1] >= 4:
            return PruneRule("LARGE_PART", "last part %d" % c[-1])

    if k >= 3:
        if (c[0], c[1]) in _HEAD_PAIRS:
            return PruneRule("HEAD", "prefix (%d,%d)" % (c[0], c[1]))
        if (c[-2], c[-1]) in _TAIL_PAIRS:
            return PruneRule("TAIL", "suffix (%d,%d)" % (c[-2], c[-1]))
        for i in range(k - 1):
            if (c[i], c[i + 1]) in _INFIX_PAIRS:
                return PruneRule("INFIX_24_42",
                                 "infix (%d,%d) at index %d" % (c[i], c[i + 1], i + 1))
        if (c[0], c[1]) == (4, 4):
            return PruneRule("HEAD_44", "prefix (4,4)")

    for prefix in _HEAD2_PREFIXES:
        if k > len(prefix) and tuple(c[:len(prefix)]) == prefix:
            return PruneRule("HEAD2", "prefix %s" % (prefix,))
    for suffix in _TAIL2_SUFFIXES:
        if k > len(suffix) and tuple(c[-len(suffix):]) == suffix:
            return PruneRule("TAIL2", "suffix %s" % (suffix,))

    if k >= 3:
        f = three_factorization(c)
        if f.k == 0:
            return PruneRule("FACTOR", "no part equal to 3")
        lead, trail = tuple(f.factors[0]), tuple(f.factors[-1])
        if lead not in _FACTOR_LEAD:
            return PruneRule("FACTOR", "leading factor %s" % (lead,))
        if trail not in _FACTOR_TRAIL:
            return PruneRule("FACTOR", "trailing factor %s" % (trail,))
        for x in f.factors[1:-1]:
            if tuple(x) not in _FACTOR_MIDDLE:
                return PruneRule("FACTOR", "middle factor %s" % (tuple(x),))

        twos, fours = c.count(2), c.count(4)
        if c[0] == 3 and fours:
            return PruneRule("COR62", "first part 3 with a part 4")
        if c[0] == 4 and fours >= 2:
            return PruneRule("COR62", "first part 4 with another part 4")
        if c[0] == 3 and c[-1] == 3 and twos >= 2:
            return PruneRule("COR62", "ends in 3 with two parts 2")
        if c[0] == 3 and c[-1] == 2 and twos >= 3:
            return PruneRule("COR62", "ends in 2 with three parts 2")
        if c[0] == 4 and twos and not _is_4_threes_twos(c):
            return PruneRule("COR62", "first part 4 outside (4,3^s,2^t)")

    return None


def _is_4_threes_twos(c):
    # (4, 3^s, 2^t) with s >= 1 and 1 <= t <= 2
    i = 1
    while i < len(c) and c[i] == 3:
        i += 1
    s, t = i - 1, len(c) - i
    return s >= 1 and 1 <= t <= 2 and all(p == 2 for p in c[i:])


@dataclass(frozen=True)
class MaximalityReport:
    n: int
    max_value: int
    argmax: tuple
    predicted: Optional[tuple]
    predicted_value: Optional[int]
    verdict: str
    counts: Optional[tuple] = None

    def matches(self):
        return (self.verdict == "match"
                and self.max_value == self.predicted_value)

    def to_json_dict(self):
        out = {
            "n": self.n,
            "max_value": str(self.max_value),
            "argmax": [str(c) for c in self.argmax],
            "predicted": ([str(c) for c in self.predicted]
                          if self.predicted is not None else None),
            "predicted_value": (str(self.predicted_value)
                                if self.predicted_value is not None else None),
            "verdict": self.verdict,
        }
        if self.counts is not None:
            out["counts"] = {str(c): str(v) for c, v in self.counts}
        return out


def exact_maximal(n, use_pruning=False, include_counts=False):
    """Race every admissible composition of n; report max, argmax, verdict.

    With pruning on, matched compositions are skipped, except that the
    first ten are still counted to confirm they lose strictly.
    """
    n = int(n)
    if n < 1:
        raise ValueError("size must be >= 1")
    best, argmax, counts, sampled = -1, [], [], []
    for c in enumerate_admissible(n):
        if use_pruning:
            hit = prune(c)
            if hit is not None:
                if len(sampled) < 10:
                    sampled.append(c)
                continue
        value = count_fast(c)
        if include_counts:
            counts.append((c, value))
        if value > best:
            best, argmax = value, [c]
        elif value == best:
            argmax.append(c)
    for c in sampled:
        if count_fast(c) >= best:
            raise PruningSoundnessError(
                "pruned composition %s counts %d >= max %d"
                % (c, count_fast(c), best))
    if n >= 6:
        predicted = tuple(sorted(predicted_maximal(n)))
        predicted_value = theorem2_value(n)
        verdict = "match" if set(argmax) == set(predicted) else "mismatch"
    else:
        predicted, predicted_value, verdict = None, None, "outside-theorem-range"
    return MaximalityReport(n, best, tuple(argmax), predicted, predicted_value,
                            verdict, tuple(counts) if include_counts else None)


def verify_theorems(n_from, n_to, use_pruning=False):
    """One report per size in [n_from, n_to]; sizes must start at 6 or later."""
    n_from, n_to = int(n_from), int(n_to)
    if not 6 <= n_from <= n_to:
        raise ValueError("range must satisfy 6 <= from <= to")
    return [exact_maximal(n, use_pruning) for n in range(n_from, n_to + 1)]


def all_verified(reports):
    """True when every report matches its prediction in set and value."""
    return all(r.matches() for r in reports)


def invariance_check(factors, order):
    """Whether permuting the middle factors (between the parts equal to 3)
    leaves the count unchanged; returns the two counts alongside."""
    factors = [Composition(f) for f in factors]
    if len(factors) < 2:
        raise ValueError("need at least two factors")
    if len(factors[-1]) == 0:
        raise ValueError("trailing factor must be nonempty")
    middle = factors[1:-1]
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(1, len(middle) + 1)):
        raise ValueError("order must permute 1..%d" % len(middle))
    base = _assemble(factors)
    rearranged = _assemble([factors[0]] + [middle[i - 1] for i in order]
                           + [factors[-1]])
    left, right = count_fast(base), count_fast(rearranged)
    return left == right, left, right


def _assemble(factors):
    out = tuple(factors[0])
    for f in factors[1:]:
        out = out + (3,) + tuple(f)
    return Composition(out)
