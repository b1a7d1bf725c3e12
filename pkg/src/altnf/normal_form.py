"""Canonical normal form y_{1,k_1} y_{2,k_2} ... y_{n-2,k_{n-2}} of elements of A_n.

Two independent routes lead to the coordinate tuple of an element:

* :func:`normalize_word` rewrites a word using only the defining relations
  and rules derived from them.  It never evaluates a permutation.
* :func:`encode_perm` peels the factors off a permutation one level at a time.

Agreement of the two on random words is the machine check that every word
reaches a canonical form and that canonical forms are unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .errors import ConsistencyError, IndexRangeError, InvalidDegreeError, NotEvenError, ParseError
from .perm import Permutation, _raw_compose, _raw_inverse, is_even
from .report import VerificationReport
from .words import LOCAL, Word, generator_table, reduce_pairs


@dataclass(frozen=True)
class NormalFormTuple:
    """Coordinates (k_1, ..., k_{n-2}) with 0 <= k_j <= j + 1."""

    n: int
    k: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise InvalidDegreeError(f"normal forms need n >= 3, got {self.n}")
        k = tuple(self.k)
        object.__setattr__(self, "k", k)
        if len(k) != self.n - 2:
            raise ValueError(f"expected {self.n - 2} coordinates for n={self.n}, got {len(k)}")
        for j, kj in enumerate(k, 1):
            if not 0 <= kj <= j + 1:
                raise ValueError(f"k_{j}={kj} outside 0..{j + 1}")

    @classmethod
    def identity(cls, n: int) -> "NormalFormTuple":
        return cls(n, tuple(j + 1 for j in range(1, n - 1)))

    def __str__(self):
        return ",".join(map(str, self.k))

    def __iter__(self):
        return iter(self.k)


def parse_tuple(text: str, n: int | None = None) -> NormalFormTuple:
    """Parse ``"k1,k2,...,k(n-2)"``; the degree is inferred from the length if not given."""
    parts = text.strip().split(",")
    values = []
    pos = 0
    for part in parts:
        token = part.strip()
        if not token.isdigit():
            raise ParseError(f"expected a non-negative integer, got {token!r}", text, pos)
        values.append(int(token))
        pos += len(part) + 1
    degree = len(values) + 2 if n is None else n
    try:
        return NormalFormTuple(degree, tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None


def format_tuple(t: NormalFormTuple) -> str:
    return str(t)


def y_pairs(m: int, k: int) -> list[tuple[int, int]]:
    if m < 1:
        raise IndexRangeError(f"level m must be >= 1, got {m}")
    if not 0 <= k <= m + 1:
        raise IndexRangeError(f"cut index k={k} outside 0..{m + 1} for m={m}")
    if k == m + 1:
        return []
    if k == 0:
        return [(i, 1) for i in range(m, 1, -1)] + [(1, 2)]
    return [(i, 1) for i in range(m, k - 1, -1)]


def y_word(m: int, k: int) -> Word:
    """x_m x_{m-1} ... x_k; x_m ... x_2 x_1^2 for k = 0; empty for k = m + 1."""
    return Word.from_pairs(y_pairs(m, k))


def _canonical_pairs(k: Sequence[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for m, km in enumerate(k, 1):
        out.extend(y_pairs(m, km))
    return out


def nf_to_word(t: NormalFormTuple) -> Word:
    return Word.from_pairs(reduce_pairs(_canonical_pairs(t.k)))


def _y_images(n):
    table = generator_table(LOCAL, n)
    e = tuple(range(1, n + 1))
    levels = {}
    for m in range(1, n - 1):
        row = []
        for k in range(m + 2):
            p = e
            for pair in y_pairs(m, k):
                p = _raw_compose(p, table[pair])
            row.append(p)
        levels[m] = row
    return levels


_Y_CACHE: dict[int, dict[int, list[tuple]]] = {}


def y_images(n: int) -> dict[int, list[tuple]]:
    """Raw images of every factor y_{m,k} at degree n, indexed ``[m][k]``."""
    if n not in _Y_CACHE:
        _Y_CACHE[n] = _y_images(n)
    return _Y_CACHE[n]


def nf_evaluate(t: NormalFormTuple) -> Permutation:
    ys = y_images(t.n)
    p = tuple(range(1, t.n + 1))
    for m, km in enumerate(t.k, 1):
        p = _raw_compose(p, ys[m][km])
    return Permutation(p, check=False)


# -- syntactic rewriting ---------------------------------------------------


class RewriteStep(NamedTuple):
    """One local rewrite: the fragment ``lhs`` was replaced by ``rhs``."""

    rule: str
    lhs: tuple[tuple[int, int], ...]
    rhs: tuple[tuple[int, int], ...]


class _Rewriter:
    # Rules, with t the top index of the current level:
    #   R           exponent arithmetic x^3 = 1
    #   Q           x_t x_i = x_i x_t for t - i >= 3
    #   rule7       x_{i+1}^2 = x_i x_{i+1} x_i
    #   rule8       x_{i+2} x_i = x_i x_{i+1}^-1 x_{i+2}
    #   identity10  x_t x_t = x_{t-1} x_t x_{t-1}
    #   sandwich    x_t x_{t-1} x_t = x_{t-1}^2
    #   n4_base     x_2 x_1^2 x_2 = x_1^2 x_2 x_1^2
    #   collision   x_t x_{t-1} x_{t-2} x_t = x_{t-1}^2 x_{t-2} x_t x_{t-1}^2
    #   n4_special  x_3 x_2 x_1^2 x_3 = x_2 x_3 x_2 x_1^2
    #   normal_form a segment replaced by its (recursively derived) normal form

    _CACHE_LIMIT = 200_000

    def __init__(self, trace: list | None = None):
        self.trace = trace
        self.cache: dict | None = {} if trace is None else None

    def log(self, rule, lhs, rhs):
        if self.trace is not None:
            self.trace.append(RewriteStep(rule, tuple(lhs), tuple(rhs)))

    def normalize(self, pairs, top: int) -> tuple[int, ...]:
        key = (tuple(pairs), top)
        if self.cache is not None:
            hit = self.cache.get(key)
            if hit is not None:
                return hit
        if top == 1:
            result = self._level1(key[0])
        elif top == 2:
            result = self._level2(key[0])
        else:
            result = self._level(key[0], top)
        if self.cache is not None:
            if len(self.cache) > self._CACHE_LIMIT:
                self.cache.clear()
            self.cache[key] = result
        return result

    def _level1(self, pairs):
        e = sum(e for _, e in pairs) % 3
        self.log("R", pairs, [(1, e)] if e else [])
        return (2 - e,)

    def _level2(self, pairs):
        w = reduce_pairs(pairs)
        while True:
            j = _find(w, (2, 2))
            if j is not None:
                rhs = [(1, 1), (2, 1), (1, 1)]
                self.log("rule7", [(2, 2)], rhs)
                w = reduce_pairs(w[:j] + rhs + w[j + 1:])
                continue
            tops = [j for j, (i, _) in enumerate(w) if i == 2]
            if len(tops) < 2:
                break
            j = tops[0]
            # reduced and square-free: exactly one x_1^a sits between two x_2
            middle = w[j + 1]
            lhs = w[j:j + 3]
            if middle == (1, 1):
                rhs = [(1, 2)]
                self.log("sandwich", lhs, rhs)
            else:
                rhs = [(1, 2), (2, 1), (1, 2)]
                self.log("n4_base", lhs, rhs)
            w = reduce_pairs(w[:j] + rhs + w[j + 3:])
        tops = [j for j, (i, _) in enumerate(w) if i == 2]
        if not tops:
            a = w[0][1] if w else 0
            return (2 - a, 3)
        j = tops[0]
        a = w[j - 1][1] if j > 0 else 0
        b = w[j + 1][1] if j + 1 < len(w) else 0
        return (2 - a, 2 - b)

    def _expand_top_squares(self, w, t):
        while True:
            j = _find(w, (t, 2))
            if j is None:
                return w
            rhs = [(t - 1, 1), (t, 1), (t - 1, 1)]
            self.log("identity10", [(t, 2)], rhs)
            w = reduce_pairs(w[:j] + rhs + w[j + 1:])

    def _normal_segment(self, seg, t):
        """Normalize ``seg`` at level t-1; split into y_1..y_{t-2} and y_{t-1}."""
        ks = self.normalize(seg, t - 1)
        head = _canonical_pairs(ks[:-1])
        tail = y_pairs(t - 1, ks[-1])
        self.log("normal_form", seg, head + tail)
        return ks, head, tail

    def _push_right(self, head, t):
        """Rewrite x_t * head as residue * x_t; head only uses indices <= t-2."""
        residue = []
        for i, e in head:
            if i <= t - 3:
                self.log("Q", [(t, 1), (i, e)], [(i, e), (t, 1)])
                residue.append((i, e))
            elif i == t - 2:
                for _ in range(e):
                    self.log("rule8", [(t, 1), (t - 2, 1)], [(t - 2, 1), (t - 1, 2), (t, 1)])
                    residue += [(t - 2, 1), (t - 1, 2)]
            else:
                raise ConsistencyError(f"letter x{i} cannot precede y_{t - 1}")
        return residue

    def _collide(self, tail, j, t):
        """Rewrite x_t * y_{t-1,j} * x_t with a single x_t."""
        if j == t:
            rhs = [(t - 1, 1), (t, 1), (t - 1, 1)]
            self.log("identity10", [(t, 1), (t, 1)], rhs)
            return rhs
        if j == t - 1:
            rhs = [(t - 1, 2)]
            self.log("sandwich", [(t, 1), (t - 1, 1), (t, 1)], rhs)
            return rhs
        if t == 3 and j == 0:
            rhs = [(2, 1), (3, 1), (2, 1), (1, 2)]
            self.log("n4_special", [(3, 1), (2, 1), (1, 2), (3, 1)], rhs)
            return rhs
        rest = tail[2:]
        for pair in reversed(rest):
            self.log("Q", [pair, (t, 1)], [(t, 1), pair])
        rhs = [(t - 1, 2), (t - 2, 1), (t, 1), (t - 1, 2)]
        self.log("collision", [(t, 1), (t - 1, 1), (t - 2, 1), (t, 1)], rhs)
        return rhs + rest

    def _level(self, pairs, t):
        w = reduce_pairs(pairs)
        while True:
            w = self._expand_top_squares(w, t)
            tops = [j for j, (i, _) in enumerate(w) if i == t]
            if len(tops) < 2:
                break
            p, q = tops[0], tops[1]
            ks, head, tail = self._normal_segment(w[p + 1:q], t)
            residue = self._push_right(head, t)
            middle = self._collide(tail, ks[-1], t)
            # the number of x_t letters drops by one on every pass
            w = reduce_pairs(w[:p] + residue + middle + w[q + 1:])
        if not tops:
            return self.normalize(w, t - 1) + (t + 1,)
        p = tops[0]
        ks, head, tail = self._normal_segment(w[p + 1:], t)
        residue = self._push_right(head, t)
        # x_t * y_{t-1,j} is y_{t,j}
        return self.normalize(w[:p] + residue, t - 1) + (ks[-1],)


def _find(w, pair):
    try:
        return w.index(pair)
    except ValueError:
        return None


_ENGINE = _Rewriter()


def normalize_word(w: Word, n: int, trace: list | None = None) -> NormalFormTuple:
    """Rewrite an x-word into normal form at degree n without evaluating it.

    If ``trace`` is a list, every local rewrite is appended to it as a
    :class:`RewriteStep`.
    """
    if n < 3:
        raise InvalidDegreeError(f"normal forms need n >= 3, got {n}")
    if w.letters and w.alphabet != LOCAL:
        raise ValueError("normalize_word expects a word over the x generators")
    top = w.max_index()
    if top > n - 2:
        raise IndexRangeError(f"letter index {top} exceeds n-2={n - 2}")
    engine = _ENGINE if trace is None else _Rewriter(trace)
    return NormalFormTuple(n, engine.normalize(w.pairs(), n - 2))


def canonical_word(w: Word, n: int) -> Word:
    return nf_to_word(normalize_word(w, n))


# -- permutation decoding --------------------------------------------------


def encode_perm(p: Permutation) -> NormalFormTuple:
    """The unique tuple whose canonical word evaluates to ``p``."""
    n = p.n
    if n < 3:
        raise InvalidDegreeError(f"normal forms need n >= 3, got {n}")
    if not is_even(p):
        raise NotEvenError(f"{list(p.images)} is odd, so not in A_{n}")
    ys = y_images(n)
    cur = p.images
    k = [0] * (n - 2)
    for m in range(n - 2, 0, -1):
        q = _raw_inverse(cur)[m + 1]
        if q == m + 2:
            km = m + 1
        elif q == 1:
            km = 0
        else:
            km = q - 1
        k[m - 1] = km
        cur = _raw_compose(cur, _raw_inverse(ys[m][km]))
    if cur != tuple(range(1, n + 1)):
        raise ConsistencyError(f"peeling {list(p.images)} left {list(cur)}")
    return NormalFormTuple(n, tuple(k))


# -- ranking ---------------------------------------------------------------


def order(n: int) -> int:
    """n!/2, the number of normal-form tuples at degree n."""
    return factorial(n) // 2


def rank(t: NormalFormTuple) -> int:
    """Little-endian mixed radix: k_1 is least significant, k_j has radix j+2."""
    r = 0
    for j in range(len(t.k), 0, -1):
        r = r * (j + 2) + t.k[j - 1]
    return r


def unrank(n: int, r: int) -> NormalFormTuple:
    if n < 3:
        raise InvalidDegreeError(f"normal forms need n >= 3, got {n}")
    if not 0 <= r < order(n):
        raise IndexRangeError(f"rank {r} outside 0..{order(n) - 1} for n={n}")
    k = []
    for j in range(1, n - 1):
        r, kj = divmod(r, j + 2)
        k.append(kj)
    return NormalFormTuple(n, tuple(k))


def enumerate_nf(n: int, start: int = 0, stop: int | None = None
                 ) -> Iterator[tuple[NormalFormTuple, Permutation]]:
    """Yield ``(tuple, permutation)`` for every rank in ``[start, stop)``, in rank order."""
    if n < 3:
        raise InvalidDegreeError(f"normal forms need n >= 3, got {n}")
    total = order(n)
    stop = total if stop is None else min(stop, total)
    start = max(0, start)
    if start >= stop:
        return
    ys = y_images(n)
    top = n - 2
    # block[m] = number of ranks spanned by one value of k_m
    block = [1] * (top + 2)
    for m in range(2, top + 1):
        block[m] = block[m - 1] * (m + 1)
    k = [0] * top

    def _descend(m, km, lo, right):
        # accumulate the product y_1 ... y_top from the top level down
        prod = _raw_compose(ys[m][km], right)
        if m == 1:
            yield NormalFormTuple(n, tuple(k)), Permutation(prod, check=False)
        else:
            yield from walk_inner(m - 1, lo, prod)

    def walk_inner(m, base, right):
        size = block[m]
        for km in range(m + 2):
            lo = base + km * size
            if lo + size <= start or lo >= stop:
                continue
            k[m - 1] = km
            yield from _descend(m, km, lo, right)

    yield from walk_inner(top, 0, tuple(range(1, n + 1)))


def letter_counts(w: Word) -> dict[int, int]:
    """Occurrences of each generator index; x^2 counts once."""
    counts: dict[int, int] = {}
    for l in w.letters:
        counts[l.index] = counts.get(l.index, 0) + 1
    return counts


def check_bijectivity(n: int) -> VerificationReport:
    """Enumerate all tuples at degree n and confirm they biject onto A_n."""
    seen = set()
    expected = order(n)
    count = 0
    for t, p in enumerate_nf(n):
        count += 1
        if not is_even(p):
            return VerificationReport("bijectivity", n, False, {"tuple": str(t), "odd": str(p)},
                                      {"checked": count})
        if p.images in seen:
            return VerificationReport("bijectivity", n, False,
                                      {"tuple": str(t), "duplicate": str(p)}, {"checked": count})
        seen.add(p.images)
        back = encode_perm(p)
        if back != t:
            return VerificationReport("bijectivity", n, False,
                                      {"tuple": str(t), "decoded": str(back)}, {"checked": count})
    if count != expected:
        return VerificationReport("bijectivity", n, False, {"count": count},
                                  {"checked": count, "expected": expected})
    return VerificationReport("bijectivity", n, True, None,
                              {"elements": count, "expected": expected})
