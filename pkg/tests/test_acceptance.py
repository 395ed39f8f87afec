"""End-to-end acceptance checks; each prints one PASS/FAIL line in the terminal summary."""

import random
import time
from fractions import Fraction as F

import mpmath
import pytest

from sl2jsr.characters import Matrices, Triple, char
from sl2jsr.classifier import Case, classify_pair
from sl2jsr.fixtures import C, D, E, G, L, N, SAMPLE_PAIRS
from sl2jsr.geometry import (
    AxesRelation, axes_relation, coherent_orientation, point, trichotomy_check, well_oriented,
)
from sl2jsr.lab import iv2_counterexample, iv3_counterexample, nonfree_demo
from sl2jsr.matrices import Mat2, MatrixPair
from sl2jsr.oracle import brute_force_max, lemma_suite, random_pair, verify_classification
from sl2jsr.scalars import QuadExt, chebyshev
from sl2jsr.words import inverse, reverse

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    assert ok, detail


def test_criterion_1_sample_table():
    start = time.perf_counter()
    p1, p2, p3, p4 = (SAMPLE_PAIRS[k] for k in ("iv1", "iv2", "iv3a", "iv3b"))
    tr = lambda M: M.tr()
    facts = [
        (tr(p1.A * p1.B), tr(p1.B ** 2)) == (4, 7),
        (tr(p2.A * p2.B), tr(p2.B ** 2)) == (34, 34),
        (tr(p3.A * p3.B), tr(p3.B ** 2)) == (40, 34),
        (tr((p3.A * p3.B) ** 3), tr((p3.A * p3.B * p3.B) ** 2)) == (63880, 55223),
        (tr(p4.A * p4.B), tr(p4.B ** 2)) == (15, 14),
        (tr((p4.A * p4.B) ** 3), tr((p4.A * p4.B * p4.B) ** 2)) == (3330, 3362),
    ]
    got = [classify_pair(p.A, p.B) for p in (p1, p2, p3, p4)]
    cases = [(r.case, r.optimal.words) for r in got]
    want = [(Case.IV_1, ("b",)), (Case.IV_2, ("abb",)), (Case.IV_3A, ("ab",)), (Case.IV_3B, ("abb",))]
    elapsed = time.perf_counter() - start
    record(1, all(facts) and cases == want and elapsed < 1,
           f"traces {facts}, cases {[(c.value, w) for c, w in cases]}, {elapsed:.3f}s")


def test_criterion_2_oracle_agreement():
    pairs = dict(SAMPLE_PAIRS, golden=MatrixPair(L, N))
    start = time.perf_counter()
    single = {k: verify_classification(p, 12) for k, p in pairs.items()}
    elapsed = time.perf_counter() - start
    multi = {k: verify_classification(p, 12, workers=4) for k, p in pairs.items()}
    identical = all(repr(single[k].oracle) == repr(multi[k].oracle) and single[k].detail == multi[k].detail
                    for k in pairs)
    golden = single["golden"].classification
    ok = (all(v.ok for v in single.values()) and identical and elapsed < 30
          and golden.case is Case.III_EQUAL_TRACE and golden.optimal.words == ("ab",))
    record(2, ok, f"all agree: {all(v.ok for v in single.values())}, "
                  f"4-worker identical: {identical}, single-worker {elapsed:.2f}s")


def test_criterion_3_iv2_coefficients():
    expected = [F(1), F(-101, 50), F(-9), F(303, 25), F(98103, 2500), F(-909, 50), F(-46103, 500),
                F(-2080903, 125000), F(105559, 1250), F(1618727, 31250), F(2050401, 6250000)]
    got = list(reversed(iv2_counterexample().poly.coeffs))
    record(3, got == expected, f"{len(got)} coefficients, exact match {got == expected}")


def test_criterion_4_iv3_root_and_signs():
    r = iv3_counterexample()
    lo, hi = r.interval
    target = F("2.0255364739899213")
    contains = lo <= target <= hi
    width_ok = hi - lo <= F(1, 10 ** 14)
    degrees = (r.ab_vs_mix.degree, r.ab2_vs_mix.degree)
    ok = contains and width_ok and degrees == (8, 13) and r.ab_negative and r.ab2_negative
    record(4, ok, f"interval [{float(lo)!r}, {float(hi)!r}] contains {target}: {contains}; "
                  f"width ok: {width_ok}; degrees {degrees}; negative: {r.ab_negative}, {r.ab2_negative}")


def test_criterion_5_nonfree_identity():
    r = nonfree_demo()
    target = Mat2(2, QuadExt(0, 1, 1, 6), QuadExt(0, 1, 2, 6), 2)
    ok = r.left == target and r.right == target
    record(5, ok, f"a^2b^3a^2 = {r.left}, ba^6b = {r.right}")


def test_criterion_6_lemma_suite():
    start = time.perf_counter()
    report = lemma_suite(seed=0, trials=1000, circle_trials=500)
    elapsed = time.perf_counter() - start
    ok = report.ok and not report.vacuous() and elapsed < 120
    record(6, ok, f"{len(report.checks)} checks, {report.violations} violations, "
                  f"vacuous {report.vacuous()}, {elapsed:.1f}s")


def _group_word(rng: random.Random) -> str:
    return "".join(rng.choice("abAB") for _ in range(rng.randint(1, 6)))


def test_criterion_7_character_identities():
    rng = random.Random(7)
    violations, instances = 0, 10_000
    for i in range(instances):
        pair = random_pair(rng.randrange(10 ** 9), 4)
        mats = Matrices(pair)
        tri = Triple(pair.A.tr(), pair.B.tr(), (pair.A * pair.B).tr())
        w, u = _group_word(rng), _group_word(rng)
        k = rng.randint(0, 5)
        tw = char(w, mats)
        checks = [
            tw * char(u, mats) == char(w + u, mats) + char(w + inverse(u), mats),
            char(w[1:] + w[:1], mats) == tw,
            char(reverse(w), mats) == tw,
            char(inverse(w), mats) == tw,
            char(w * k, mats) == chebyshev(k, tw),
            char(w, tri) == tw and char(w + u, tri) == char(w + u, mats),
        ]
        violations += not all(checks)
    record(7, violations == 0, f"{instances} instances, {violations} violations")


def _numeric_trichotomy(A, B) -> int:
    with mpmath.workdps(50):
        rho = lambda t: (t + mpmath.sqrt(t * t - 4)) / 2
        diff = rho(_mp((A * B).tr())) - rho(_mp(A.tr())) * rho(_mp(B.tr()))
        return 0 if abs(diff) < mpmath.mpf(10) ** -30 else (1 if diff > 0 else -1)


def _mp(x):
    if isinstance(x, QuadExt):
        p, q = x.parts()
        return mpmath.mpf(p.numerator) / p.denominator + mpmath.mpf(q.numerator) / q.denominator * mpmath.sqrt(x.D)
    x = F(x)
    return mpmath.mpf(x.numerator) / x.denominator


def test_criterion_8_geometry_fixtures():
    arcs = coherent_orientation(G.inv(), L)
    relations = (axes_relation(D, E), axes_relation(C, E), axes_relation(C, D))
    # C and E share a fixed point; the disjoint-arc orientation uses E^-1
    tri_pairs = ((D, E), (C, E.inv()), (C, D))
    tri = tuple(trichotomy_check(A, B) for A, B in tri_pairs)
    numeric = tuple(_numeric_trichotomy(A, B) for A, B in tri_pairs)
    ok = (coherent_orientation(G, L) is None
          and arcs is not None
          and (arcs[0].start, arcs[0].end, arcs[1].start, arcs[1].end) == (point(0), point(1), point(1), point(0))
          and well_oriented(C, D)
          and relations == (AxesRelation.INTERSECTING, AxesRelation.ASYMPTOTICALLY_PARALLEL,
                            AxesRelation.ULTRAPARALLEL)
          and tri == (-1, 0, 1) == numeric)
    record(8, ok, f"arcs {arcs and tuple(map(str, arcs))}, relations {[r.value for r in relations]}, "
                  f"trichotomy {tri} (numeric {numeric})")


def test_criterion_9_random_spot_audit():
    start = time.perf_counter()
    bad = []
    for seed in range(200):
        v = verify_classification(random_pair(seed), 10)
        if not v.ok:
            bad.append((seed, v.detail))
    elapsed = time.perf_counter() - start
    record(9, not bad and elapsed < 600, f"200 pairs at length 10, {len(bad)} disagreements, {elapsed:.1f}s"
                                         + (f"; first {bad[0]}" if bad else ""))


@pytest.fixture(scope="session", autouse=True)
def _summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is None or not RESULTS:
        return
    reporter.write_line("")
    reporter.write_sep("=", "acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        reporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
