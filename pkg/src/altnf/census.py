"""Census of generating tuples of A_n satisfying the defining relations.

A solution is a tuple (p_1, ..., p_{n-2}) of elements of A_n that satisfies
every relation instance and generates A_n.  Solutions are counted up to
simultaneous conjugation by S_n; the finer count up to conjugation by A_n is
reported alongside.  A generating tuple has trivial stabilizer, so every
S_n-orbit is the union of exactly two A_n-orbits.

The search fixes p_1 to one representative of each A_n-conjugacy class of
elements with p^3 = 1; every orbit meets exactly one such slice, and inside
the slice the orbits are those of the centralizer of p_1.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExhaustedError, InvalidDegreeError
from .perm import Permutation, _raw_compose, _raw_inverse, _cycle_count, format_perm
from .presentation import generates_alternating
from .report import VerificationReport

DEFAULT_BUDGET = 10_000_000


def alternating_elements(n: int) -> list[tuple]:
    return [p for p in itertools.permutations(range(1, n + 1))
            if (n - _cycle_count(p)) % 2 == 0]


def _conj(g, ginv, p):
    return _raw_compose(g, _raw_compose(p, ginv))


class _Search:
    def __init__(self, n, budget):
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.e = tuple(range(1, n + 1))
        self.group = alternating_elements(n)
        self.inverses = {g: _raw_inverse(g) for g in self.group}
        self.cube_roots = [p for p in self.group
                           if _raw_compose(p, _raw_compose(p, p)) == self.e]

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhaustedError(
                f"census at n={self.n} exceeded its budget of {self.budget} search nodes"
            )

    def _fits(self, tup, p):
        j = len(tup)  # p becomes p_{j+1}; indices below are 0-based
        e = self.e
        if j >= 1:
            q = _raw_compose(tup[j - 1], p)
            if _raw_compose(q, q) != e:
                return False
        for i in range(j - 2):
            if _raw_compose(tup[i], p) != _raw_compose(p, tup[i]):
                return False
        if j >= 2:
            a, b = tup[j - 2], tup[j - 1]
            lhs = _raw_compose(_raw_compose(a, self.inverses[b]), p)
            if lhs != _raw_compose(p, a):
                return False
        return True

    def extend(self, tup):
        if len(tup) == self.n - 2:
            yield tuple(tup)
            return
        for p in self.cube_roots:
            self._tick()
            if self._fits(tup, p):
                tup.append(p)
                yield from self.extend(tup)
                tup.pop()

    def classes(self):
        """A_n-classes of cube roots: rep -> centralizer, and element -> (rep, g) with g x g^-1 = rep."""
        to_rep = {}
        centralizers = {}
        for x in self.cube_roots:
            if x in to_rep:
                continue
            cent = []
            for g in self.group:
                y = _conj(g, self.inverses[g], x)
                if y == x:
                    cent.append(g)
                if y not in to_rep:
                    # g x g^-1 = y, so g^-1 y g = x
                    to_rep[y] = (x, self.inverses[g])
            centralizers[x] = cent
        return centralizers, to_rep


def census_solutions(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    if not 5 <= n <= 7:
        raise InvalidDegreeError(f"the census supports 5 <= n <= 7, got {n}")
    s = _Search(n, budget)
    centralizers, to_rep = s.classes()

    orbit_of: dict[tuple, int] = {}
    reps: list[tuple] = []
    total = 0
    for rep, cent in centralizers.items():
        class_size = len(s.group) // len(cent)
        for sol in s.extend([rep]):
            if sol in orbit_of or not generates_alternating(sol, n):
                continue
            idx = len(reps)
            reps.append(sol)
            for g in cent:
                ginv = s.inverses[g]
                orbit_of[tuple(_conj(g, ginv, p) for p in sol)] = idx
            total += class_size * len(cent)

    # conjugating by a transposition fuses A_n-orbits into S_n-orbits
    tau = (2, 1) + tuple(range(3, n + 1))
    parent = list(range(len(reps)))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for idx, sol in enumerate(reps):
        moved = tuple(_conj(tau, tau, p) for p in sol)
        rep, g = to_rep[moved[0]]
        ginv = _raw_inverse(g)
        other = orbit_of[tuple(_conj(g, ginv, p) for p in moved)]
        a, b = find(idx), find(other)
        parent[max(a, b)] = min(a, b)
    sn_classes = sorted({find(a) for a in range(len(reps))})

    std = tuple(tuple(range(1, i)) + (i + 1, i + 2, i) + tuple(range(i + 3, n + 1))
                for i in range(1, n - 1))
    rep, g = to_rep[std[0]]
    ginv = _raw_inverse(g)
    std_an = orbit_of.get(tuple(_conj(g, ginv, p) for p in std))

    stats = {
        "orbits": len(sn_classes),
        "orbits_an": len(reps),
        "standard_orbit": None if std_an is None else sn_classes.index(find(std_an)),
        "solutions": total,
        "search_nodes": s.nodes,
        "cube_roots": len(s.cube_roots),
    }
    if n == 7:
        stats["note"] = "uniqueness for n >= 8 is not checked by this census"
    if std_an is None:
        return VerificationReport("solutions", n, False,
                                  {"missing": "standard 3-cycle tuple"}, stats)
    stats["representatives"] = [
        [format_perm(Permutation(p, check=False), cycle=True) for p in reps[c]]
        for c in sn_classes
    ]
    stats["representatives_an"] = [
        [format_perm(Permutation(p, check=False), cycle=True) for p in sol] for sol in reps
    ]
    return VerificationReport("solutions", n, True, None, stats)


def same_orbit(a, b, n: int, symmetric: bool = True) -> bool:
    """Whether two tuples of permutations are simultaneously conjugate.

    Conjugators range over S_n, or over A_n when ``symmetric`` is false.
    """
    a = tuple(p.images if isinstance(p, Permutation) else tuple(p) for p in a)
    b = tuple(p.images if isinstance(p, Permutation) else tuple(p) for p in b)
    group = itertools.permutations(range(1, n + 1)) if symmetric else alternating_elements(n)
    for g in group:
        ginv = _raw_inverse(g)
        if tuple(_conj(g, ginv, p) for p in a) == b:
            return True
    return False
