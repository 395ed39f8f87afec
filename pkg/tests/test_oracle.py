import dataclasses
import time

import pytest

from sl2jsr.classifier import OptimalitySet, classify_pair
from sl2jsr.errors import OutOfScopeError
from sl2jsr.fixtures import SAMPLE_PAIRS
from sl2jsr.matrices import L, N, MatrixPair
from sl2jsr.oracle import (
    brute_force_max, circle_witness, lemma_suite, random_pair, targeted_pools, verify_classification,
)
from sl2jsr.scalars import chebyshev


@pytest.mark.parametrize("pair, max_len, words", [
    (MatrixPair(L, L * N), 8, ("b",)),
    (MatrixPair(L, N), 8, ("ab",)),
    (SAMPLE_PAIRS["iv3b"], 10, ("abb",)),
])
def test_brute_force_maxima(pair, max_len, words):
    assert brute_force_max(pair, max_len).max_words == words


def test_workers_give_identical_reports():
    pair = SAMPLE_PAIRS["iv2"]
    assert brute_force_max(pair, 9, workers=1) == brute_force_max(pair, 9, workers=3)


def test_certificates_prove_each_loser():
    rep = brute_force_max(MatrixPair(L, N), 5, certificates=True)
    assert len(rep.certificates) == 14 - 1
    assert all(c.lhs < c.rhs and c.best == "ab" for c in rep.certificates)


def test_rejects_bad_length():
    with pytest.raises(ValueError):
        brute_force_max(MatrixPair(L, N), 0)


def test_verify_sample_pairs(sample):
    _, pair = sample
    v = verify_classification(pair, 12)
    assert v.ok, v.detail


def test_verify_short_words_only():
    v = verify_classification(SAMPLE_PAIRS["iv2"], 1)
    assert v.ok and v.oracle.max_words == ("b",)


def test_verify_detects_wrong_claim():
    def stub(A, B):
        res = classify_pair(A, B)
        return dataclasses.replace(res, report=dataclasses.replace(res.report, optimal=OptimalitySet.finite("b")))

    v = verify_classification(MatrixPair(L, N), 8, classifier=stub)
    assert not v.ok
    assert "['ab']" in v.detail


def test_verify_refuses_out_of_scope():
    with pytest.raises(OutOfScopeError):
        verify_classification(MatrixPair(N, L.inv()), 4)


def test_random_pairs_are_deterministic_and_valid():
    assert random_pair(1) == random_pair(1)
    for seed in range(1000):
        p = random_pair(seed)
        assert p.A * p.B != p.B * p.A
        for M in p:
            assert M.det() == 1 and M.is_nonnegative()


def test_random_pairs_agree_with_classifier():
    for seed in range(40):
        v = verify_classification(random_pair(seed), 8)
        assert v.ok, (seed, v.detail)


def test_trace_offset_and_gap_on_sample():
    p = SAMPLE_PAIRS["iv3b"]
    assert (p.A * p.B).tr() == chebyshev(2, p.B.tr()) + 1 == 15
    assert abs(((p.A * p.B) ** 3).tr() - ((p.A * p.B * p.B) ** 2).tr()) == 32


def test_circle_witness():
    assert circle_witness([0, 1, 0, 1]) is not None


def test_targeted_pools_nonempty():
    pools = targeted_pools()
    assert all(pools.values()), {k: len(v) for k, v in pools.items()}


def test_lemma_suite_small_run():
    start = time.perf_counter()
    report = lemma_suite(seed=3, trials=60, circle_trials=100, sweep_samples=False)
    assert report.ok, "\n".join(report.lines())
    assert report.vacuous() == []
    assert time.perf_counter() - start < 60
