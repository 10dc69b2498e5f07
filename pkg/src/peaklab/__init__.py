"""Exact counting of permutations by peak set and peak composition."""

__version__ = "0.1.0"

from .compositions import (Composition, EMPTY, Factorization3, PeakSet,
                           composition_to_peakset, concat,
                           enumerate_admissible, increase_first,
                           is_admissible, peakset_to_composition,
                           predicted_maximal, reverse_r, three_factorization)
from .fastcount import beta, compatible_words, count_fast, t_vector_fast
from .oracle import (CountMatrix, count_bruteforce, ini_matrix, int_matrix,
                     pattern_of, peak_composition, peak_set, t_vector)

__all__ = [
    "__version__",
    "Composition", "EMPTY", "Factorization3", "PeakSet",
    "composition_to_peakset", "concat", "enumerate_admissible",
    "increase_first", "is_admissible", "peakset_to_composition",
    "predicted_maximal", "reverse_r", "three_factorization",
    "beta", "compatible_words", "count_fast", "t_vector_fast",
    "CountMatrix", "count_bruteforce", "ini_matrix", "int_matrix",
    "pattern_of", "peak_composition", "peak_set", "t_vector",
]
