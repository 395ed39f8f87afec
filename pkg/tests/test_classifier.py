from fractions import Fraction as F

import pytest

from sl2jsr.classifier import Case, OptimalitySet, classify_pair, iv_branch
from sl2jsr.errors import InconsistencyError, InvalidMatrixError
from sl2jsr.fixtures import C, E, G, L, N, SAMPLE_PAIRS, SQRT6_PAIR
from sl2jsr.matrices import Mat2

H = F(1, 2)

EXPECTED = {
    "iv1": (Case.IV_1, ("b",), 3, 1),
    "iv2": (Case.IV_2, ("abb",), 200, 3),
    "iv3a": (Case.IV_3A, ("ab",), 40, 2),
    "iv3b": (Case.IV_3B, ("abb",), 58, 3),
}


def test_sample_pairs(sample):
    name, pair = sample
    case, words, t, n = EXPECTED[name]
    res = classify_pair(pair.A, pair.B)
    assert res.case is case
    assert res.optimal == OptimalitySet.finite(*words)
    assert (res.report.radius.t, res.report.radius.n) == (t, n)
    assert not res.classification.swapped


def test_golden_pair():
    cls, report = classify_pair(L, N)
    assert cls.case is Case.III_EQUAL_TRACE
    assert report.optimal.words == ("ab",)
    assert (report.radius.t, report.radius.n) == (3, 2)
    assert report.float_approx == "1.618033988749894"


def test_precision_controls_digits():
    assert classify_pair(L, N, precision=30).report.float_approx == "1.618033988749894848204586834365"


def test_swap_is_reported():
    res = classify_pair(L * N, L)
    assert res.classification.swapped
    assert res.case is Case.IV_1 and res.optimal.words == ("b",)
    assert res.pair.A == L


@pytest.mark.parametrize("A, B, case, words", [
    (Mat2(2, 1, 1, 1), Mat2(1, 1, 1, 2), Case.I_INTERSECTING, ("a", "b")),
    (Mat2(0, -1, 1, -3), Mat2(-3, -1, -2, -1), Case.I_INTERSECTING, ("b",)),
    (Mat2(2, 0, 0, H), Mat2(H, 1, 0, 2), Case.II_PARALLEL_1, ("a", "b")),
    (C, E, Case.II_PARALLEL_UNEQUAL, ("b",)),
    (E, G, Case.II_PARALLEL_UNEQUAL, ("b",)),
    (SQRT6_PAIR.A, SQRT6_PAIR.B, Case.III_EQUAL_TRACE, ("ab",)),
    (Mat2(3, 1, -1, 0), Mat2(3, -2, 2, -1), Case.IV_3A, ("ab",)),
    (L, L * L, Case.COMMUTING, ("a", "b")),
    (L * N, (L * N).inv(), Case.COMMUTING, ("a", "b")),
])
def test_geometric_cases(A, B, case, words):
    res = classify_pair(A, B)
    assert res.case is case
    assert res.optimal.words == words


def test_all_non_powers_case():
    res = classify_pair(Mat2(2, 0, 0, H), Mat2(2, 1, 0, H))
    assert res.case is Case.II_PARALLEL_2
    assert not res.optimal.is_finite
    assert res.optimal.representative() == "ab"
    assert res.report.float_approx == "2.000000000000000"


def test_out_of_scope_is_a_result():
    res = classify_pair(N, L.inv())
    assert res.case is Case.OUT_OF_SCOPE
    assert res.classification.reason == "not coherently oriented"
    assert res.report.optimal is None and res.report.radius is None


def test_real_unequal_traces_out_of_scope():
    A = Mat2(1, 0, H, 1)
    res = classify_pair(A, L * N)
    assert res.case is Case.OUT_OF_SCOPE
    assert "real-entry" in res.classification.reason


@pytest.mark.parametrize("M", [Mat2(0, -1, 1, 0), Mat2(2, 0, 0, 1), Mat2(1, -1, 1, 0)])
def test_invalid_input(M):
    with pytest.raises(InvalidMatrixError):
        classify_pair(M, N)


def test_negated_generators_are_normalized():
    res = classify_pair(-L, -(L * N))
    assert res.case is Case.IV_1


@pytest.mark.parametrize("traces, case", [
    ((2, 3, 4), Case.IV_1),
    ((4, 6, 34), Case.IV_2),
    ((5, 6, 40), Case.IV_3A),
    ((2, 4, 15), Case.IV_3B),
])
def test_iv_branch(traces, case):
    assert iv_branch(*traces) is case


def test_sample_trace_data():
    iv3a, iv3b = SAMPLE_PAIRS["iv3a"], SAMPLE_PAIRS["iv3b"]
    assert ((iv3a.A * iv3a.B) ** 3).tr() == 63880
    assert ((iv3a.A * iv3a.B * iv3a.B) ** 2).tr() == 55223
    assert ((iv3b.A * iv3b.B) ** 3).tr() == 3330
    assert ((iv3b.A * iv3b.B * iv3b.B) ** 2).tr() == 3362


def test_iv_branch_guards():
    with pytest.raises(ValueError):
        iv_branch(12, 4, 15)
    with pytest.raises(ValueError):
        iv_branch(F(5, 2), 4, 15)


def test_iv_branch_flags_near_tie(monkeypatch):
    # integer data never produce a near tie, so fake the trace polynomials
    import sl2jsr.classifier as mod

    monkeypatch.setattr(mod, "chebyshev", lambda k, t: {2: 49, 3: 50}[k] if k != 2 or t != 6 else 36)
    with pytest.raises(InconsistencyError):
        iv_branch(2, 6, 40)
