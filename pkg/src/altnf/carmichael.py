"""Carmichael's generators v_1..v_{n-2} and conversion to/from the local x_i."""

from __future__ import annotations

from functools import lru_cache

from .errors import IndexRangeError, InvalidDegreeError
from .perm import Permutation, _raw_compose, identity
from .words import CARMICHAEL, LOCAL, Word, evaluate, reduce_pairs
from .report import VerificationReport


def _check(i, n):
    if n < 3:
        raise InvalidDegreeError(f"degree must be >= 3, got {n}")
    if not 1 <= i <= n - 2:
        raise IndexRangeError(f"generator index {i} outside admissible range 1..{n - 2} for n={n}")


def v_defining_pairs(i: int, n: int) -> list[tuple[int, int]]:
    """x_{n-2} ... x_{i+1} x_i x_{i+1}^-1 ... x_{n-2}^-1 as (index, exponent) pairs."""
    _check(i, n)
    flank = list(range(n - 2, i, -1))
    return [(k, 1) for k in flank] + [(i, 1)] + [(k, 2) for k in reversed(flank)]


def v_product_form(i: int, n: int) -> Word:
    """(prod_{k=i}^{n-2} x_k^-1)^-1 * prod_{k=i+1}^{n-2} x_k^-1, written out literally."""
    _check(i, n)
    first = Word.from_pairs([(k, 2) for k in range(i, n - 1)]).inverse()
    second = Word.from_pairs([(k, 2) for k in range(i + 1, n - 1)])
    return first + second


def x_defining_pairs(i: int, n: int) -> list[tuple[int, int]]:
    """v_{n-2}^-1 ... v_{i+1}^-1 v_i v_{i+1} ... v_{n-2} as (index, exponent) pairs."""
    _check(i, n)
    flank = list(range(n - 2, i, -1))
    return [(k, 2) for k in flank] + [(i, 1)] + [(k, 1) for k in reversed(flank)]


@lru_cache(maxsize=None)
def v_perm(i: int, n: int) -> Permutation:
    """Evaluate the defining x-word of v_i at degree n."""
    return evaluate(Word.from_pairs(v_defining_pairs(i, n)), n)


def _substitute(w, n, source, target, defining):
    if w.letters and w.alphabet != source:
        raise ValueError(f"expected a word over {source!r}, got {w.alphabet!r}")
    top = w.max_index()
    if top > n - 2:
        raise IndexRangeError(f"letter index {top} exceeds n-2={n - 2}")
    out = []
    for l in w.letters:
        image = defining(l.index, n)
        if l.exponent == 2:
            image = [(k, 3 - e) for k, e in reversed(image)]
        out.extend(image)
    return Word.from_pairs(reduce_pairs(out), target)


def x_to_v(w: Word, n: int) -> Word:
    return _substitute(w, n, LOCAL, CARMICHAEL, x_defining_pairs)


def v_to_x(w: Word, n: int) -> Word:
    return _substitute(w, n, CARMICHAEL, LOCAL, v_defining_pairs)


def check_carmichael(n: int) -> VerificationReport:
    """Check v_i^3 = 1 and (v_i v_j)^2 = 1 for all i and all ordered pairs i != j."""
    if n < 4:
        raise InvalidDegreeError(f"Carmichael relations need n >= 4, got {n}")
    e = identity(n).images
    vs = {i: v_perm(i, n).images for i in range(1, n - 1)}
    cubes = pairs = 0
    for i, p in vs.items():
        cubes += 1
        if _raw_compose(p, _raw_compose(p, p)) != e:
            return VerificationReport("carmichael", n, False, {"relation": f"v{i}^3"},
                                      {"cube_checks": cubes, "pair_checks": pairs})
    for i, p in vs.items():
        for j, q in vs.items():
            if i == j:
                continue
            pairs += 1
            pq = _raw_compose(p, q)
            if _raw_compose(pq, pq) != e:
                return VerificationReport("carmichael", n, False, {"relation": f"(v{i} v{j})^2"},
                                          {"cube_checks": cubes, "pair_checks": pairs})
    return VerificationReport("carmichael", n, True, None,
                              {"cube_checks": cubes, "pair_checks": pairs})
