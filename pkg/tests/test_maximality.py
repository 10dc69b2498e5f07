"""Exhaustive maximality search, pruning soundness, and the size sweep."""

import pytest

from peaklab.compositions import (Composition, enumerate_admissible,
                                  predicted_maximal, reverse_r)
from peaklab.fastcount import count_fast
from peaklab.maximality import (RULE_IDS, all_verified, exact_maximal,
                                invariance_check, prune, verify_theorems)

PRUNE_CASES = [
    ((5,), "LARGE_PART"),
    ((3, 5, 2), "LARGE_PART"),
    ((3, 4), "LARGE_PART"),
    ((2, 3, 3, 2), "HEAD"),
    ((2, 2, 2), "HEAD"),
    ((3, 2, 1), "TAIL"),
    ((3, 3, 1), "TAIL"),
    ((3, 2, 4, 3), "INFIX_24_42"),
    ((4, 4, 3, 2), "HEAD_44"),
    ((4, 3, 2, 2), "HEAD2"),
    ((3, 2, 3, 3), "TAIL2"),
    ((3, 2, 2, 2), "FACTOR"),
    ((3, 2, 2, 3, 2), "FACTOR"),
    ((3, 4, 3, 2), "COR62"),
    ((4, 3, 3, 4, 3, 2), "COR62"),
    ((3, 2, 3, 3, 2, 3), "COR62"),
    ((3, 2, 3, 3, 2, 2), "COR62"),
    ((4, 3, 3, 2, 3, 2), "COR62"),
]


@pytest.mark.parametrize("c,rule", PRUNE_CASES)
def test_prune_rule_selection(c, rule):
    hit = prune(Composition(c))
    assert hit is not None and hit.rule == rule
    assert hit.rule in RULE_IDS


def test_prune_survivors_and_errors():
    assert prune(Composition((3, 3))) is None
    assert prune(Composition((4, 3, 3, 2))) is None
    with pytest.raises(ValueError):
        prune(Composition((1, 2)))


def test_prune_never_hits_a_predicted_maximal():
    for n in range(6, 15):
        for c in predicted_maximal(n):
            assert prune(c) is None, c


def test_prune_is_sound_exhaustively():
    # every pruned composition must lose the race strictly
    for n in range(4, 11):
        best = exact_maximal(n).max_value
        for c in enumerate_admissible(n):
            if prune(c) is not None:
                assert count_fast(c) < best, c


def test_exact_maximal_small_sizes():
    r = exact_maximal(4)
    assert r.max_value == 8
    assert set(r.argmax) == {Composition((2, 2)), Composition((3, 1)),
                             Composition((4,))}
    assert r.verdict == "outside-theorem-range"
    assert r.predicted is None and r.predicted_value is None
    assert not r.matches()

    r = exact_maximal(5)
    assert r.max_value == 40
    assert r.argmax == (Composition((3, 2)),)

    with pytest.raises(ValueError):
        exact_maximal(0)


def test_exact_maximal_matches_prediction_at_six():
    r = exact_maximal(6)
    assert r.max_value == 144
    assert set(r.argmax) == {Composition((3, 3)), Composition((4, 2))}
    assert r.verdict == "match"
    assert r.predicted_value == 144
    assert r.matches()


def test_include_counts_covers_every_admissible_composition():
    r = exact_maximal(6, include_counts=True)
    counts = dict(r.counts)
    assert set(counts) == set(enumerate_admissible(6))
    assert counts[Composition((3, 3))] == 144
    assert sum(counts.values()) == 720


def test_report_json_dict():
    d = exact_maximal(6, include_counts=True).to_json_dict()
    assert d["n"] == 6
    assert d["max_value"] == "144"
    assert d["argmax"] == ["3,3", "4,2"]
    assert d["predicted"] == ["3,3", "4,2"]
    assert d["predicted_value"] == "144"
    assert d["verdict"] == "match"
    assert d["counts"]["3,3"] == "144"

    d = exact_maximal(5).to_json_dict()
    assert d["predicted"] is None and d["predicted_value"] is None
    assert "counts" not in d


def test_pruning_changes_nothing():
    for n in range(4, 13):
        assert exact_maximal(n, use_pruning=True) == exact_maximal(n)


def test_argmax_closed_under_reversal():
    for n in range(4, 11):
        argmax = set(exact_maximal(n).argmax)
        for c in argmax:
            assert reverse_r(c) in argmax


def _known_maximal_shapes(n):
    shapes = set()
    for ell in range(2, n // 3 + 2):
        for parts in ((3,) * ell,
                      (4,) + (3,) * ell,
                      (4,) + (3,) * (ell - 2) + (2,),
                      (4,) + (3,) * (ell - 2) + (2, 2),
                      (3,) * ell + (2,),
                      (3,) * ell + (2, 2)):
            if sum(parts) == n:
                shapes.add(Composition(parts))
    for s in range(1, n // 3 + 1):
        for t in range(n // 3 + 1):
            parts = (3,) * s + (2,) + (3,) * t + (2,)
            if sum(parts) == n:
                shapes.add(Composition(parts))
    return shapes


def test_argmax_with_three_parts_has_known_shape():
    for n in range(6, 13):
        shapes = _known_maximal_shapes(n)
        for c in exact_maximal(n).argmax:
            if len(c) >= 3:
                assert c in shapes, c


def test_verify_theorems_range():
    reports = verify_theorems(6, 8)
    assert [r.n for r in reports] == [6, 7, 8]
    assert all(r.verdict == "match" for r in reports)
    assert all_verified(reports)
    with pytest.raises(ValueError):
        verify_theorems(5, 8)
    with pytest.raises(ValueError):
        verify_theorems(9, 8)


def test_invariance_check():
    ok, left, right = invariance_check([(), (2,), (4,), (2,)], (2, 1))
    assert ok and left == right

    ok, left, right = invariance_check([(), (2,), (2,)], (1,))
    assert ok and left == right

    with pytest.raises(ValueError):
        invariance_check([(2,)], ())
    with pytest.raises(ValueError):
        invariance_check([(), ()], ())
    with pytest.raises(ValueError):
        invariance_check([(), (2,), (2,)], (2,))
