"""Exit criteria, one test per criterion, each with its wall-clock bound.

Every test prints a single ``[PASS]``/``[FAIL]`` line (visible with ``-s`` or
in the terminal summary via the ``acceptance_line`` fixture).
"""

import random
import time

import pytest

from altnf.carmichael import check_carmichael, v_perm, v_to_x, x_to_v
from altnf.census import census_solutions
from altnf.derivations import get_script, verify_derivation
from altnf import normal_form
from altnf.normal_form import (
    NormalFormTuple, encode_perm, enumerate_nf, letter_counts, nf_evaluate, nf_to_word,
    normalize_word, order,
)
from altnf.perm import is_even, three_cycle
from altnf.presentation import check_assignment, check_stationarity, closure
from altnf.words import Word, evaluate

from oracle import all_tuples


@pytest.fixture
def acceptance_line(capsys):
    def emit(number, title, ok, elapsed, limit):
        status = "PASS" if ok and elapsed < limit else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title} ({elapsed:.3f}s, limit {limit}s)")
        assert ok, f"criterion {number} failed: {title}"
        assert elapsed < limit, f"criterion {number} exceeded {limit}s: {elapsed:.3f}s"
    return emit


def random_word(rng, n, max_len=60):
    length = rng.randint(0, max_len)
    return Word.from_pairs([(rng.randint(1, n - 2), rng.randint(1, 2)) for _ in range(length)])


def test_criterion_01_order_of_s4(acceptance_line):
    enumerate_nf(4)  # generator creation only; caches stay cold
    normal_form._Y_CACHE.pop(4, None)
    start = time.perf_counter()
    perms = [p for _, p in enumerate_nf(4)]
    elapsed = time.perf_counter() - start
    ok = len(perms) == 12 and len(set(perms)) == 12 and all(is_even(p) for p in perms)
    acceptance_line(1, "enumerate(4) gives 12 distinct even permutations", ok, elapsed, 0.001)


def test_criterion_02_enumeration_up_to_nine(acceptance_line):
    start = time.perf_counter()
    ok = True
    for n in range(3, 10):
        images = set()
        count = 0
        for _, p in enumerate_nf(n):
            count += 1
            ok &= is_even(p)
            images.add(p.images)
        ok &= count == order(n) == len(images)
    ok &= order(9) == 181_440
    elapsed = time.perf_counter() - start
    acceptance_line(2, "enumerate(n) gives n!/2 distinct even permutations, n=3..9",
                    ok, elapsed, 10)


def test_criterion_03_rewriting_agrees_with_evaluation(acceptance_line):
    rng = random.Random(20261017)
    failures = 0
    start = time.perf_counter()
    for n in range(4, 9):
        for _ in range(10_000):
            w = random_word(rng, n)
            t = normalize_word(w, n)
            if nf_evaluate(t) != evaluate(w, n):
                failures += 1
            if normalize_word(nf_to_word(t), n) != t:
                failures += 1
    elapsed = time.perf_counter() - start
    acceptance_line(3, "normalize_word agrees with evaluation on 10,000 words per n=4..8, "
                       f"idempotent ({failures} failures)", failures == 0, elapsed, 60)


def test_criterion_04_encode_inverts_evaluation(acceptance_line):
    start = time.perf_counter()
    ok = True
    checked = 0
    for n in range(3, 9):
        for k in all_tuples(n):
            t = NormalFormTuple(n, k)
            ok &= encode_perm(nf_evaluate(t)) == t
            checked += 1
    elapsed = time.perf_counter() - start
    acceptance_line(4, f"encode_perm(nf_evaluate(t)) = t on all {checked} tuples, n<=8",
                    ok, elapsed, 30)


def test_criterion_05_standard_assignment(acceptance_line):
    start = time.perf_counter()
    ok = all(check_assignment([three_cycle(i, n) for i in range(1, n - 1)], n).passed
             for n in range(3, 65))
    elapsed = time.perf_counter() - start
    acceptance_line(5, "standard 3-cycles satisfy all relations, n=3..64", ok, elapsed, 5)


def test_criterion_06_derivation_chains(acceptance_line):
    start = time.perf_counter()
    ok = True
    runs = 0
    for n in range(5, 13):
        for i in range(1, n - 3):
            ok &= verify_derivation("theorem2", i, n).passed
            runs += 1
        for name in ("collision", "n4_special"):
            for i in get_script(name).params(n):
                ok &= verify_derivation(name, i, n).passed
                runs += 1
    elapsed = time.perf_counter() - start
    acceptance_line(6, f"theorem2, collision and n=4 chains pass Level 1 ({runs} runs)",
                    ok, elapsed, 1)


def test_criterion_07_solution_census(acceptance_line):
    start = time.perf_counter()
    five = census_solutions(5).stats["orbits"]
    six = census_solutions(6).stats["orbits"]
    elapsed = time.perf_counter() - start
    acceptance_line(7, f"census orbits: n=5 -> {five}, n=6 -> {six}",
                    five == 1 and six == 2, elapsed, 300)


def test_criterion_08_carmichael(acceptance_line):
    rng = random.Random(8)
    start = time.perf_counter()
    ok = all(check_carmichael(n).passed for n in range(4, 33))
    for n in range(5, 9):
        for _ in range(1000):
            w = random_word(rng, n)
            ok &= normalize_word(v_to_x(x_to_v(w, n), n), n) == normalize_word(w, n)
    for n in range(4, 9):
        gens = [v_perm(i, n).images for i in range(1, n - 1)]
        ok &= len(closure(gens, n)) == order(n)
    elapsed = time.perf_counter() - start
    acceptance_line(8, "Carmichael relations n=4..32, x->v->x round trip, v generate A_n",
                    ok, elapsed, 60)


def test_criterion_09_letter_bounds(acceptance_line):
    start = time.perf_counter()
    ok = True
    for n in range(3, 9):
        for k in all_tuples(n):
            counts = letter_counts(nf_to_word(NormalFormTuple(n, k)))
            ok &= counts.get(n - 2, 0) <= 1
            ok &= all(counts.get(n - j, 0) <= j - 1 for j in range(2, n))
    elapsed = time.perf_counter() - start
    acceptance_line(9, "x_{n-2} at most once, x_{n-k} at most k-1 times, n<=8", ok, elapsed, 30)


def test_criterion_10_cosets_and_stationarity(acceptance_line):
    start = time.perf_counter()
    ok = True
    for n in range(3, 9):
        for t, p in enumerate_nf(n):
            ok &= (p(n) == n) == (t.k[-1] == n - 1)
    for n in range(5, 9):
        ok &= check_stationarity(n).passed
    elapsed = time.perf_counter() - start
    acceptance_line(10, "nf fixes n iff k_{n-2}=n-1 (n<=8); stationarity n=5..8",
                    ok, elapsed, 30)
