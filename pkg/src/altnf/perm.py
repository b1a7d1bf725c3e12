"""Permutations of {1..n} in one-line form.

Products follow function composition: in ``p * q`` the right factor ``q`` is
applied first, so ``(p * q)(v) == p(q(v))``.  Points are 1-based.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, IndexRangeError, InvalidDegreeError, ParseError

EVEN = "even"
ODD = "odd"


class Permutation:
    """An immutable bijection of {1..n}; ``images[p - 1]`` is the image of ``p``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], *, check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if n < 1:
                raise InvalidDegreeError("a permutation needs degree n >= 1")
            if sorted(images) != list(range(1, n + 1)):
                raise ValueError(f"{list(images)} is not a bijection of 1..{n}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return format_perm(self)

    def __iter__(self):
        return iter(self.images)

    def __len__(self):
        return len(self.images)


def identity(n: int) -> Permutation:
    if n < 1:
        raise InvalidDegreeError(f"degree must be >= 1, got {n}")
    return Permutation(range(1, n + 1), check=False)


def _raw_compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    return tuple([p[v - 1] for v in q])


def _raw_inverse(p: Sequence[int]) -> tuple:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p ∘ q`` (``q`` applied first)."""
    if p.n != q.n:
        raise DegreeMismatchError(f"cannot compose degree {p.n} with degree {q.n}")
    return Permutation(_raw_compose(p.images, q.images), check=False)


def inverse(p: Permutation) -> Permutation:
    return Permutation(_raw_inverse(p.images), check=False)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Non-trivial cycles, each starting at its minimum, sorted by minimum."""
    seen = set()
    out = []
    for start in range(1, p.n + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = p(start)
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = p(v)
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def _cycle_count(images: Sequence[int]) -> int:
    seen = [False] * len(images)
    count = 0
    for i in range(len(images)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = images[j] - 1
    return count


def parity(p: Permutation) -> str:
    return EVEN if (p.n - _cycle_count(p.images)) % 2 == 0 else ODD


def is_even(p: Permutation) -> bool:
    return parity(p) == EVEN


def three_cycle(i: int, n: int) -> Permutation:
    """The cycle (i, i+1, i+2) in degree n."""
    if not 1 <= i <= n - 2:
        raise IndexRangeError(f"generator index {i} outside admissible range 1..{n - 2} for n={n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i], images[i + 1] = i + 1, i + 2, i
    return Permutation(images, check=False)


def cycle_perm(cyc: Sequence[int], n: int) -> Permutation:
    """The single cycle ``cyc`` in degree n."""
    images = list(range(1, n + 1))
    for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
        images[a - 1] = b
    return Permutation(images)


def format_perm(p: Permutation, cycle: bool = False) -> str:
    if not cycle:
        return ",".join(map(str, p.images))
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


_TOKEN = re.compile(r"\s*(?:(\d+)|([(),])|(\S))")


def parse_perm(text: str, n: int) -> Permutation:
    """Parse one-line form ``"2,1,4,3"`` or cycle form ``"(1 2 3)(4 5)"``.

    Inside a cycle, points may be separated by spaces or commas.  Points not
    listed in cycle form are fixed.
    """
    if n < 1:
        raise InvalidDegreeError(f"degree must be >= 1, got {n}")
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty permutation text", text, 0)
    if stripped.startswith("("):
        return _parse_cycles(text, n)
    return _parse_one_line(text, n)


def _parse_one_line(text, n):
    values = []
    pos = 0
    expect_number = True
    for m in _TOKEN.finditer(text):
        num, punct, bad = m.groups()
        start = m.start(m.lastindex)
        if bad is not None or (punct is not None and punct != ","):
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        if expect_number:
            if num is None:
                raise ParseError("expected a point", text, start)
            values.append((int(num), start))
        elif num is not None:
            raise ParseError("expected ','", text, start)
        expect_number = not expect_number
        pos = m.end()
    if expect_number:
        raise ParseError("trailing ',' or empty input", text, pos)
    if len(values) != n:
        raise ParseError(f"expected {n} images, found {len(values)}", text, 0)
    seen = {}
    for v, start in values:
        if not 1 <= v <= n:
            raise ParseError(f"point {v} out of range 1..{n}", text, start)
        if v in seen:
            raise ParseError(f"value {v} repeated", text, start)
        seen[v] = start
    return Permutation([v for v, _ in values], check=False)


def _parse_cycles(text, n):
    images = list(range(1, n + 1))
    used = set()
    current = None
    pos = 0
    for m in _TOKEN.finditer(text):
        num, punct, bad = m.groups()
        start = m.start(m.lastindex)
        pos = m.end()
        if bad is not None:
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        if punct == "(":
            if current is not None:
                raise ParseError("nested '('", text, start)
            current = []
        elif punct == ")":
            if current is None:
                raise ParseError("unmatched ')'", text, start)
            for a, b in zip(current, current[1:] + current[:1]):
                images[a - 1] = b
            current = None
        elif punct == ",":
            if current is None:
                raise ParseError("',' outside a cycle", text, start)
        else:
            if current is None:
                raise ParseError("point outside a cycle", text, start)
            v = int(num)
            if not 1 <= v <= n:
                raise ParseError(f"point {v} out of range 1..{n}", text, start)
            if v in used:
                raise ParseError(f"point {v} repeated", text, start)
            used.add(v)
            current.append(v)
    if current is not None:
        raise ParseError("unterminated cycle", text, pos)
    return Permutation(images, check=False)
