"""Words over the local generators x_i or the Carmichael generators v_i.

Every generator has order 3, so exponents are stored canonically in {1, 2}
with 2 standing for the inverse.  A word has no degree of its own; the degree
is supplied when the word is evaluated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DegreeTooSmallError, InvalidDegreeError, ParseError
from .perm import Permutation, _raw_compose, identity, three_cycle

LOCAL = "x"
CARMICHAEL = "v"
ALPHABETS = (LOCAL, CARMICHAEL)


class Letter(NamedTuple):
    alphabet: str
    index: int
    exponent: int

    def __str__(self):
        return f"{self.alphabet}{self.index}" + ("^2" if self.exponent == 2 else "")


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        alphabets = {l.alphabet for l in self.letters}
        if len(alphabets) > 1:
            raise ValueError("a word cannot mix alphabets")
        for l in self.letters:
            if l.alphabet not in ALPHABETS or l.index < 1 or l.exponent not in (1, 2):
                raise ValueError(f"invalid letter {l!r}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], alphabet: str = LOCAL) -> "Word":
        """Build a word from ``(index, exponent)`` pairs; exponents are taken mod 3."""
        letters = []
        for i, e in pairs:
            e %= 3
            if e:
                letters.append(Letter(alphabet, i, e))
        return cls(tuple(letters))

    @property
    def alphabet(self) -> str | None:
        return self.letters[0].alphabet if self.letters else None

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((l.index, l.exponent) for l in self.letters)

    def max_index(self) -> int:
        return max((l.index for l in self.letters), default=0)

    def inverse(self) -> "Word":
        return Word(tuple(Letter(l.alphabet, l.index, 3 - l.exponent) for l in reversed(self.letters)))

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return format_word(self)


EMPTY = Word()

_LETTER = re.compile(r"([a-zA-Z])(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str) -> Word:
    """Parse ``"x1 x2^-1 x3"``; ``"e"`` is the empty word.

    Exponents are reduced mod 3 and letters with exponent 0 are dropped.
    Adjacent letters are not merged; see :func:`free_reduce`.
    """
    stripped = text.strip()
    if stripped == "e":
        return EMPTY
    if not stripped:
        raise ParseError("empty word (use 'e' for the identity)", text, 0)
    letters = []
    alphabet = None
    for m in re.finditer(r"\S+", text):
        token, start = m.group(), m.start()
        lm = _LETTER.fullmatch(token)
        if lm is None:
            raise ParseError(f"malformed letter {token!r}", text, start)
        sym, idx, exp = lm.group(1), int(lm.group(2)), lm.group(3)
        if sym not in ALPHABETS:
            raise ParseError(f"unknown generator symbol {sym!r}", text, start)
        if alphabet is None:
            alphabet = sym
        elif sym != alphabet:
            raise ParseError("mixed alphabets in one word", text, start)
        if idx < 1:
            raise ParseError("generator index must be >= 1", text, start + 1)
        e = 1 if exp is None else int(exp)
        if exp is not None and e == 0:
            raise ParseError("exponent 0 is not allowed", text, start)
        e %= 3
        if e:
            letters.append(Letter(sym, idx, e))
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    if not w.letters:
        return "e"
    return " ".join(map(str, w.letters))


def reduce_pairs(pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Merge adjacent equal-index letters mod 3 until none remain."""
    stack: list[tuple[int, int]] = []
    for i, e in pairs:
        if stack and stack[-1][0] == i:
            e = (stack.pop()[1] + e) % 3
        if e:
            stack.append((i, e))
    return stack


def free_reduce(w: Word) -> Word:
    alphabet = w.alphabet or LOCAL
    return Word.from_pairs(reduce_pairs(w.pairs()), alphabet)


def is_reduced(w: Word) -> bool:
    return all(a.index != b.index for a, b in zip(w.letters, w.letters[1:]))


def _letter_images(alphabet, n):
    if alphabet == CARMICHAEL:
        from .carmichael import v_perm as gen
    else:
        gen = three_cycle
    table = {}
    for i in range(1, n - 1):
        p = gen(i, n).images
        table[i, 1] = p
        table[i, 2] = _raw_compose(p, p)
    return table


_TABLES: dict[tuple[str, int], dict] = {}


def generator_table(alphabet: str, n: int) -> dict:
    """Map ``(index, exponent)`` to raw image tuples for degree n (cached)."""
    key = (alphabet, n)
    table = _TABLES.get(key)
    if table is None:
        table = _TABLES[key] = _letter_images(alphabet, n)
    return table


def evaluate(w: Word, n: int) -> Permutation:
    """The permutation of the word at degree n, rightmost letter applied first."""
    if n < 3:
        raise InvalidDegreeError(f"words are evaluated at degree n >= 3, got {n}")
    top = w.max_index()
    if top > n - 2:
        raise DegreeTooSmallError(
            f"letter index {top} needs degree n >= {top + 2}, got {n}", top + 2
        )
    if not w.letters:
        return identity(n)
    table = generator_table(w.alphabet, n)
    images = tuple(range(1, n + 1))
    for l in w.letters:
        images = _raw_compose(images, table[l.index, l.exponent])
    return Permutation(images, check=False)
