"""Executable comparison maps between permutation classes.

Two constructions live here.  embed_middle splices a window pattern into
a permutation with prescribed outer blocks, realizing the count bound
that makes interior parts of maximal compositions small.  gamma_injection
rewrites the window of a permutation order-isomorphically, giving an
explicit injection between classes whenever the window classes dominate
entrywise.  Both are checked at runtime against their hypotheses, so a
failed precondition surfaces as an error instead of a wrong map.
"""

from dataclasses import dataclass

from . import oracle
from .compositions import Composition, concat, increase_first, is_admissible, reverse_r
from .fastcount import t_vector_fast


@dataclass(frozen=True)
class DominanceVerdict:
    relation: str
    witness: object = None


class DominanceHypothesisError(Exception):
    """The entrywise dominance needed by gamma_injection does not hold."""


def _verdict(left, right, labels):
    if tuple(left) == tuple(right):
        return DominanceVerdict("equal")
    le = all(x <= y for x, y in zip(left, right))
    ge = all(x >= y for x, y in zip(left, right))
    if le:
        witness = next(l for l, x, y in zip(labels, left, right) if x < y)
        return DominanceVerdict("strictly-dominated", witness)
    if ge:
        witness = next(l for l, x, y in zip(labels, left, right) if x > y)
        return DominanceVerdict("dominates", witness)
    return DominanceVerdict("incomparable")


def dominates_T(c, cp):
    """Componentwise comparison of the t-vectors of two same-size compositions."""
    c, cp = Composition(c), Composition(cp)
    if c.size != cp.size:
        raise ValueError("compositions must have equal size")
    left, right = t_vector_fast(c), t_vector_fast(cp)
    return _verdict(left, right, range(1, c.size + 1))


def dominates_Int(c, cp, limit=None):
    """Componentwise comparison of the Int tables of the first-part bumps.

    Compares Int_{a,b}(1+c) against Int_{a,b}(1+cp) over all (a,b); the
    witness is the first index pair where strictness shows.
    """
    c, cp = Composition(c), Composition(cp)
    if c.size != cp.size:
        raise ValueError("compositions must have equal size")
    m1 = oracle.int_matrix(increase_first(c), limit)
    m2 = oracle.int_matrix(increase_first(cp), limit)
    n = m1.n
    labels = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    left = [entry for row in m1.rows() for entry in row]
    right = [entry for row in m2.rows() for entry in row]
    return _verdict(left, right, labels)


def embed_middle(c1, c2, c3, tau, limit=None):
    """Build sigma in the class of c1+c2+c3 whose middle window realizes tau.

    tau must lie in some Int class of 1+c2.  The prefix comes from the
    lexicographically smallest member of Ini_{.,n1}(c1), the tail (written
    backwards) from the lexicographically smallest member of
    Ini_{.,n3+1}(r'(1+c3)), and the window carries tau shifted above both.
    The two boundary classes are checked nonempty at runtime.
    """
    c1, c2, c3 = Composition(c1), Composition(c2), Composition(c3)
    if not (c1 and c2 and c3):
        raise ValueError("all three compositions must be nonempty")
    whole = concat(concat(c1, c2), c3)
    if not is_admissible(whole):
        raise ValueError("%s is not admissible" % (whole,))
    n1, n2, n3 = c1.size, c2.size, c3.size
    tau = tuple(tau)
    if sorted(tau) != list(range(1, n2 + 2)):
        raise ValueError("tau must be a permutation of 1..%d" % (n2 + 1))
    if oracle.peak_composition(tau) != increase_first(c2):
        raise ValueError("tau has the wrong peak composition")
    if not (tau[0] > tau[1] and tau[-2] < tau[-1]):
        raise ValueError("tau must start with a descent and end with an ascent")

    gamma = oracle.first_ini_member(c1, n1, limit)
    beta = oracle.first_ini_member(reverse_r(increase_first(c3)), n3 + 1, limit)
    if gamma is None or beta is None:
        raise RuntimeError("a required boundary class is empty")

    sigma = [0] * (n1 + n2 + n3)
    sigma[0:n1 - 1] = gamma[0:n1 - 1]
    for j in range(1, n3 + 1):
        sigma[n1 + n2 + n3 - j] = beta[j - 1] + n1 - 1
    for i in range(n2 + 1):
        sigma[n1 + i - 1] = tau[i] + n1 + n3 - 1
    sigma = tuple(sigma)
    if oracle.peak_composition(sigma) != whole:
        raise RuntimeError("assembled permutation has the wrong peak composition")
    return sigma


def gamma_injection(a, c, cp, b, sigma):
    """Map the class of a+c+b into the class of a+cp+b by window rewriting.

    Requires Int_{x,y}(1+c) <= Int_{x,y}(1+cp) for all (x,y).  The window
    sigma_r..sigma_{r+n} (r = |a|, n = |c|) spans two peaks, so its pattern
    lies in an Int class of 1+c; that class is matched by sorted position
    into the corresponding class of 1+cp and the window values are
    rearranged accordingly.  Prefix, suffix, window value set, and both
    window endpoints are untouched, which makes the map injective; when
    c == cp it is the identity.
    """
    a, c, cp, b = (Composition(x) for x in (a, c, cp, b))
    if c.size != cp.size:
        raise ValueError("middle compositions must have equal size")
    if not (a and b):
        raise ValueError("outer compositions must be nonempty")
    source = concat(concat(a, c), b)
    if not is_admissible(source):
        raise ValueError("%s is not admissible" % (source,))
    sigma = tuple(sigma)
    if oracle.peak_composition(sigma) != source:
        raise ValueError("permutation is not in the class of %s" % (source,))

    bumped_c, bumped_cp = increase_first(c), increase_first(cp)
    m1, m2 = oracle.int_matrix(bumped_c), oracle.int_matrix(bumped_cp)
    for x in range(1, m1.n + 1):
        for y in range(1, m1.n + 1):
            if m1.at(x, y) > m2.at(x, y):
                raise DominanceHypothesisError(
                    "dominance hypothesis violated at (%d,%d): %d > %d"
                    % (x, y, m1.at(x, y), m2.at(x, y)))

    r, n = a.size, c.size
    window = sigma[r - 1:r + n]
    tau = oracle.pattern_of(window)
    key = (tau[0], tau[-1])
    source_class = oracle.int_classes(bumped_c)[key]
    image_class = oracle.int_classes(bumped_cp)[key]
    tau_new = image_class[source_class.index(tau)]
    values = sorted(window)
    new_window = tuple(values[t - 1] for t in tau_new)
    return sigma[:r - 1] + new_window + sigma[r + n:]
