"""Acceptance criteria 1-14, each with its time budget.

Run alone with ``pytest tests/test_acceptance.py -v`` (or ``python3
tests/test_acceptance.py``); one PASS/FAIL line per criterion is printed in
the terminal summary.
"""

import random
import time
from math import comb

import pytest

from conftest import ACCEPTANCE, D4, Q45
from toricposets import fixtures
from toricposets.extensions import bounded_bijection, count_ltor, ltor_recursive
from toricposets.generate import class_partition, fingerprint_partition, random_bounded_poset, random_graph
from toricposets.greene import bounded_quiver, kk_quiver, psi_poset, psi_tor
from toricposets.quiver import linear_extensions
from toricposets.ratfun import (
    POLE,
    RationalFunction,
    SparsePolynomial,
    rf_add,
    rf_eval_mod,
    rf_mul,
    rf_sub,
    rf_to_string,
)
from toricposets.verify import SuiteConfig, run_suite

MINUTES = 600  # budget used for criteria stated only as "minutes"


def record(number, budget, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    passed = bool(ok) and elapsed <= budget
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} ({elapsed:.2f}s, budget {budget}s) {detail}"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, detail
    assert elapsed <= budget, f"took {elapsed:.1f}s, budget {budget}s"


def product_form(n, num_pairs, den_pairs, c=1):
    num = SparsePolynomial.constant(n, c)
    for i, j in num_pairs:
        num = rf_mul(RationalFunction(num), RationalFunction(SparsePolynomial.linear(n, i, j))).numerator
    return RationalFunction(num, den_pairs)


def suite(name, **kw):
    rep = run_suite(name, SuiteConfig(**kw))
    return rep.passed, f"{rep.checked} checked, {len(rep.failures)} failed"


def test_criterion_01_greene_goldens():
    def check():
        p1 = psi_poset(fixtures.quiver("p1"))
        p2 = psi_poset(fixtures.quiver("p2"))
        want = product_form(6, [(1, 6)], [(2, 3), (2, 4), (1, 4), (1, 5), (4, 6), (5, 6)])
        return p1.is_zero() and p2 == want, f"P1 -> {p1}; P2 -> {p2}"
    record(1, 1, check)


def test_criterion_02_d4_goldens():
    def check():
        words = ltor_recursive(D4).words()
        value = rf_to_string(psi_tor(D4))
        ok = words == [(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3), (1, 4, 3, 2)]
        return ok and value == "-2 / ((x1-x2)(x1-x3)(x2-x4)(x3-x4))", value
    record(2, 1, check)


def test_criterion_03_example_listing():
    def check():
        a = ltor_recursive(fixtures.quiver("q45_4to5"))
        b = ltor_recursive(fixtures.quiver("q45_5to4"))
        c = ltor_recursive(fixtures.quiver("q0"))
        whole = ltor_recursive(Q45)
        listing = (a.words() == [(1, 2, 3, 4, 5), (1, 2, 4, 3, 5), (1, 3, 2, 4, 5), (1, 3, 4, 2, 5),
                                 (1, 4, 2, 3, 5), (1, 4, 3, 2, 5), (1, 5, 2, 3, 4), (1, 5, 2, 4, 3),
                                 (1, 5, 3, 2, 4), (1, 5, 3, 4, 2), (1, 5, 4, 2, 3), (1, 5, 4, 3, 2)]
                   and b.words() == [(1, 2, 3, 5, 4), (1, 3, 2, 5, 4)]
                   and c.words() == [(1, 4, 5, 2, 3), (1, 4, 5, 3, 2)])
        disjoint = len(a) + len(b) + len(c) == len(a.items | b.items | c.items)
        union = a.items | b.items | c.items == whole.items
        proper = a.items | b.items < whole.items
        return listing and disjoint and union and proper, f"{len(a)}+{len(b)}+{len(c)}={len(whole)}"
    record(3, 5, check)


def test_criterion_04_enumerator_oracle():
    record(4, MINUTES, lambda: suite("oracle", max_n=5, count=200, random_sizes=(6, 7)))


def test_criterion_05_pretzel_oracle():
    def check():
        rng = random.Random(0)
        bad = 0
        for _ in range(50):
            g = random_graph(rng.randint(1, 6), rng, rng.choice([0.3, 0.5, 0.8]))
            if set(class_partition(g)) != set(fingerprint_partition(g)):
                bad += 1
        return bad == 0, f"50 graphs, {bad} mismatches"
    record(5, MINUTES, check)


def test_criterion_06_vanishing():
    record(6, 120, lambda: suite("cut-vertex", max_n=6))


def test_criterion_07_denominator():
    record(7, 120, lambda: suite("denominator", max_n=6))


def test_criterion_08_kleiss_kuijf():
    record(8, 60, lambda: suite("kk", max_k=3, max_j=3))


def test_criterion_09_shuffle_vanishing():
    record(9, 30, lambda: suite("shuffle-vanishing", max_total=5))


def test_criterion_10_bounded_factorization():
    def check():
        rng = random.Random(0)
        bad = 0
        for _ in range(100):
            bp = random_bounded_poset(rng.randint(3, 7), rng, rng.choice([0.3, 0.5, 0.7]))
            q = bounded_quiver(bp.hasse, bp.zero, bp.one)
            want = rf_mul(psi_poset(bp.hasse), RationalFunction.reciprocal_product(q.n, [(bp.one, bp.zero)]))
            _, theta = bounded_bijection(bp.hasse, bp.zero, bp.one)
            if psi_tor(q) != want or len(theta) != len(linear_extensions(bp.hasse)) != count_ltor(q):
                bad += 1
        return bad == 0, f"100 bounded posets, {bad} failures"
    record(10, 120, check)


def test_criterion_11_strongly_planar():
    record(11, 60, lambda: suite("planar"))


def test_criterion_12_fixed_source():
    record(12, MINUTES, lambda: suite("fixed-source", count=100, max_n=7))


def test_criterion_13_counting():
    def check():
        bad = []
        for k in range(5):
            for j in range(5):
                q, *_ = kk_quiver(k, j)
                if count_ltor(q) != comb(k + j, k):
                    bad.append((k, j))
        rng = random.Random(1)
        for _ in range(50):
            bp = random_bounded_poset(rng.randint(3, 7), rng)
            if count_ltor(bounded_quiver(bp.hasse, bp.zero, bp.one)) != len(linear_extensions(bp.hasse)):
                bad.append(bp)
        return not bad, f"{len(bad)} mismatches"
    record(13, 30, check)


def _random_rf(rng, n):
    terms = {tuple(rng.randint(0, 2) for _ in range(n)): rng.randint(-4, 4) for _ in range(rng.randint(0, 3))}
    pairs = []
    for _ in range(rng.randint(0, 3)):
        i, j = rng.sample(range(1, n + 1), 2)
        pairs.append((i, j))
    return RationalFunction(SparsePolynomial(n, terms), pairs)


def test_criterion_14_randomized_vs_exact():
    def check():
        rng = random.Random(0)
        prime = (1 << 61) - 1
        disagree = equal = 0
        for t in range(10_000):
            n = rng.randint(2, 5)
            a = _random_rf(rng, n)
            if t % 2:
                s = _random_rf(rng, n)
                b = rf_sub(rf_add(a, s), s)  # same function reached by a different route
            else:
                b = _random_rf(rng, n)
            exact = a == b
            equal += exact
            modular, done = True, 0
            while done < 8:
                pt = [rng.randrange(prime) for _ in range(n)]
                va, vb = rf_eval_mod(a, pt, prime), rf_eval_mod(b, pt, prime)
                if POLE in (va, vb):
                    continue
                done += 1
                if va != vb:
                    modular = False
                    break
            disagree += modular != exact
        return disagree == 0, f"10000 pairs, {equal} equal, {disagree} disagreements"
    record(14, 60, check)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
