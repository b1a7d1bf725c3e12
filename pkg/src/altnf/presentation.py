"""Defining relations of S_n^+ and checks of generator assignments against them."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import DegreeMismatchError, IndexRangeError, InvalidDegreeError
from .perm import Permutation, _raw_compose, format_perm, three_cycle
from .report import VerificationReport
from .words import Word, format_word

KINDS = ("R", "S", "Q", "T", "Tprime")


@dataclass(frozen=True)
class RelationInstance:
    kind: str
    params: tuple[int, ...]
    lhs: Word
    rhs: Word

    def __str__(self):
        return f"{self.kind}{self.params}: {format_word(self.lhs)} = {format_word(self.rhs)}"

    @property
    def indices(self) -> set[int]:
        return {l.index for l in self.lhs} | {l.index for l in self.rhs}

    def relator(self) -> Word:
        """lhs * rhs^-1, a word equal to the identity."""
        return self.lhs + self.rhs.inverse()


def _w(*pairs):
    return Word.from_pairs(pairs)


def relation(kind: str, *params: int) -> RelationInstance:
    """Build one instance of a relation family.

    R(i): x_i^3 = 1; S(i): (x_i x_{i+1})^2 = 1; Q(i, j): x_i x_j = x_j x_i with
    |i - j| > 2; T(i): x_i x_{i+1}^-1 x_{i+2} = x_{i+2} x_i; Tprime(i):
    x_{i+1} = x_{i+2} x_i^-1 x_{i+2}^-1 x_i.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown relation kind {kind!r}")
    if kind == "Q":
        i, j = params
        if abs(i - j) <= 2 or min(i, j) < 1:
            raise IndexRangeError(f"Q needs |i-j| > 2, got ({i}, {j})")
        return RelationInstance("Q", (i, j), _w((i, 1), (j, 1)), _w((j, 1), (i, 1)))
    (i,) = params
    if i < 1:
        raise IndexRangeError(f"relation index must be >= 1, got {i}")
    if kind == "R":
        # three letters, kept unmerged so the relator reads literally
        return RelationInstance("R", (i,), Word(_w((i, 1)).letters * 3), Word())
    if kind == "S":
        return RelationInstance("S", (i,), _w((i, 1), (i + 1, 1), (i, 1), (i + 1, 1)), Word())
    if kind == "T":
        return RelationInstance("T", (i,), _w((i, 1), (i + 1, 2), (i + 2, 1)), _w((i + 2, 1), (i, 1)))
    return RelationInstance("Tprime", (i,), _w((i + 1, 1)),
                            _w((i + 2, 1), (i, 2), (i + 2, 2), (i, 1)))


def relation_instances(n: int) -> list[RelationInstance]:
    """Every instance of relations R, S, Q, T at degree n, in that order."""
    if n < 3:
        raise InvalidDegreeError(f"relations need n >= 3, got {n}")
    top = n - 2
    out = [relation("R", i) for i in range(1, top + 1)]
    out += [relation("S", i) for i in range(1, top)]
    out += [relation("Q", i, j) for i in range(1, top + 1) for j in range(i + 3, top + 1)]
    out += [relation("T", i) for i in range(1, top - 1)]
    return out


def eval_pairs(pairs: Iterable[tuple[int, int]], images: Mapping[int, tuple], n: int) -> tuple:
    """Evaluate (index, exponent) pairs with x_i sent to the raw tuple ``images[i]``."""
    p = tuple(range(1, n + 1))
    for i, e in pairs:
        g = images[i]
        p = _raw_compose(p, g)
        if e == 2:
            p = _raw_compose(p, g)
    return p


def holds(rel: RelationInstance, images: Mapping[int, tuple], n: int) -> bool:
    return eval_pairs(rel.lhs.pairs(), images, n) == eval_pairs(rel.rhs.pairs(), images, n)


def standard_images(n: int) -> dict[int, tuple]:
    return {i: three_cycle(i, n).images for i in range(1, n - 1)}


def _check_relations(check, n, relations, images, degree):
    counts: dict[str, int] = {}
    for rel in relations:
        counts[rel.kind] = counts.get(rel.kind, 0) + 1
        if not holds(rel, images, degree):
            lhs = Permutation(eval_pairs(rel.lhs.pairs(), images, degree), check=False)
            rhs = Permutation(eval_pairs(rel.rhs.pairs(), images, degree), check=False)
            return VerificationReport(check, n, False, {
                "relation": str(rel),
                "lhs": format_perm(lhs, cycle=True),
                "rhs": format_perm(rhs, cycle=True),
            }, {"checked": sum(counts.values()), **counts})
    return VerificationReport(check, n, True, None, {"checked": sum(counts.values()), **counts})


def check_assignment(images: Sequence[Permutation], n: int) -> VerificationReport:
    """Substitute ``images[i-1]`` for x_i in every relation instance of degree n."""
    if n < 3:
        raise InvalidDegreeError(f"relations need n >= 3, got {n}")
    if len(images) != n - 2:
        raise DegreeMismatchError(f"expected {n - 2} images for n={n}, got {len(images)}")
    for p in images:
        if p.n != n:
            raise DegreeMismatchError(f"image {p!r} has degree {p.n}, expected {n}")
    table = {i: p.images for i, p in enumerate(images, 1)}
    return _check_relations("relations", n, relation_instances(n), table, n)


def closure(generators: Iterable[tuple], n: int, limit: int | None = None) -> set[tuple]:
    """Breadth-first closure of raw permutation tuples; stops early past ``limit``."""
    gens = list(generators)
    e = tuple(range(1, n + 1))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _raw_compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if limit is not None and len(seen) > limit:
                        return seen
        frontier = nxt
    return seen


def generates_alternating(perms: Iterable[tuple], n: int) -> bool:
    target = factorial(n) // 2
    return len(closure(perms, n, limit=target)) == target


def check_stationarity(n: int) -> VerificationReport:
    """Index shift x_j -> x_{j+1} between <x_1..x_{n-3}> and <x_2..x_{n-2}> in A_n."""
    if n < 5:
        raise InvalidDegreeError(f"stationarity check needs n >= 5, got {n}")
    std = standard_images(n)
    expected = factorial(n - 1) // 2
    g1 = len(closure([std[i] for i in range(1, n - 2)], n))
    g2 = len(closure([std[i] for i in range(2, n - 1)], n))
    stats = {"order_G1": g1, "order_G2": g2, "expected_order": expected}
    if g1 != expected or g2 != expected:
        return VerificationReport("stationarity", n, False,
                                  {"orders": [g1, g2], "expected": expected}, stats)
    shifted = {j: std[j + 1] for j in range(1, n - 2)}
    sub = _check_relations("stationarity", n, relation_instances(n - 1), shifted, n)
    stats["shifted_relations_checked"] = sub.stats["checked"]
    if not sub.passed:
        return VerificationReport("stationarity", n, False, sub.counterexample, stats)
    commuting = 0
    for i in range(2, n - 1):
        for j in range(i + 3, n - 1):
            commuting += 1
            if _raw_compose(std[i], std[j]) != _raw_compose(std[j], std[i]):
                return VerificationReport("stationarity", n, False,
                                          {"non_commuting": [i, j]}, stats)
    stats["locality_pairs_checked"] = commuting
    return VerificationReport("stationarity", n, True, None, stats)

