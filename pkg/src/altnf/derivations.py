"""Derivation scripts: chains of words with a cited relation for every step.

A script is replayed at a concrete parameter and degree.  Level 1 (required)
checks that consecutive words evaluate to the same permutation and that every
cited relation holds.  Level 2 (best effort) checks that each step replaces a
single subword using the cited relation, modulo free reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import IndexRangeError, InvalidDegreeError
from .presentation import RelationInstance, eval_pairs, holds, relation, standard_images
from .report import VerificationReport
from .words import Word, format_word, parse_word, reduce_pairs


class Step(NamedTuple):
    word: Word
    relation: RelationInstance | None
    note: str = ""


@dataclass(frozen=True)
class DerivationScript:
    name: str
    description: str
    params: Callable[[int], range]
    min_degree: Callable[[int], int]
    build: Callable[[int], list[Step]]

    def steps(self, i: int) -> list[Step]:
        return self.build(i)


def _words(template: str, **idx) -> Word:
    """Parse a word written with placeholders, e.g. ``"x{a} x{b}^-1"``."""
    return parse_word(template.format(**idx))


def _theorem2(i):
    a, b, c, d = i, i + 1, i + 2, i + 3
    w = lambda s: _words(s, a=a, b=b, c=c, d=d)
    return [
        Step(w("x{d} x{b}^-1 x{d}^-1 x{b} x{c}^-1"), None, "Tprime at i+1, as a relator"),
        Step(w("x{d} x{b}^-1 x{d}^-1 x{b} x{c} x{c}"), relation("R", c)),
        Step(w("x{d} x{b}^-1 x{d}^-1 x{c}^-1 x{b}^-1 x{c}"), relation("S", b)),
        Step(w("x{d} x{b}^-1 x{c} x{d} x{b}^-1 x{c}"), relation("S", c)),
        Step(w("x{d} x{a}^-1 x{c} x{a} x{d} x{a}^-1 x{c} x{a}"), relation("Tprime", a),
             "both occurrences of x_{i+1}^-1"),
        Step(w("x{d} x{a}^-1 x{c} x{d} x{c} x{a}"), relation("Q", a, d)),
        Step(w("x{a}^-1 x{d} x{c} x{d} x{c} x{a}"), relation("Q", a, d)),
        Step(w("x{a}^-1 x{a}"), relation("S", c)),
    ]


def _xtop_square(t):
    w = lambda s: _words(s, t=t, s=t - 1)
    return [
        Step(w("x{t}^2"), None),
        Step(w("x{t}^-1"), relation("R", t)),
        Step(w("x{s} x{t} x{s}"), relation("S", t - 1)),
    ]


def _collision(t):
    w = lambda s: _words(s, t=t, s=t - 1, r=t - 2)
    return [
        Step(w("x{t} x{s} x{r} x{t}"), None),
        Step(w("x{s}^-1 x{t}^-1 x{r} x{t}"), relation("S", t - 1)),
        Step(w("x{s}^-1 x{r} x{t}^-1 x{s} x{t}"), relation("T", t - 2)),
        Step(w("x{s}^-1 x{r} x{t}^-2 x{s}^-1"), relation("S", t - 1)),
        Step(w("x{s}^2 x{r} x{t} x{s}^2"), relation("R", t)),
    ]


def _n4_special(_):
    return [
        Step(parse_word("x3 x2 x1^2 x3"), None),
        Step(parse_word("x3 x3 x1^-1 x3^-1 x1 x1^2 x3"), relation("Tprime", 1)),
        Step(parse_word("x3^2 x1^-1"), relation("R", 1)),
        Step(parse_word("x2 x3 x2 x1^-1"), relation("S", 2), "identity x_3^2 = x_2 x_3 x_2"),
    ]


def _n4_base(_):
    return [
        Step(parse_word("x2 x1 x1 x2"), None),
        Step(parse_word("x1^-1 x2^-1 x2^-1 x1^-1"), relation("S", 1), "applied twice"),
        Step(parse_word("x1^2 x2 x1^2"), relation("R", 2)),
    ]


def _sandwich(t):
    w = lambda s: _words(s, t=t, s=t - 1)
    return [
        Step(w("x{t} x{s} x{t}"), None),
        Step(w("x{s}^-1"), relation("S", t - 1)),
        Step(w("x{s}^2"), relation("R", t - 1)),
    ]


def _rule7(i):
    w = lambda s: _words(s, a=i, b=i + 1)
    return [
        Step(w("x{b}^2"), None),
        Step(w("x{b}^-1"), relation("R", i + 1)),
        Step(w("x{a} x{b} x{a}"), relation("S", i)),
    ]


def _rule8(i):
    w = lambda s: _words(s, a=i, b=i + 1, c=i + 2)
    return [
        Step(w("x{c} x{a}"), None),
        Step(w("x{a} x{b}^-1 x{c}"), relation("T", i)),
    ]


_SCRIPTS = [
    DerivationScript("theorem2", "relation T at i+1 from T at i and relations R, S, Q",
                     lambda n: range(1, n - 3), lambda i: i + 5, _theorem2),
    DerivationScript("xtop_square", "x_t^2 = x_{t-1} x_t x_{t-1}",
                     lambda n: range(2, n - 1), lambda t: t + 2, _xtop_square),
    DerivationScript("collision", "x_t x_{t-1} x_{t-2} x_t with a single x_t",
                     lambda n: range(3, n - 1), lambda t: t + 2, _collision),
    DerivationScript("n4_special", "x_3 x_2 x_1^2 x_3 = x_2 x_3 x_2 x_1^-1",
                     lambda n: range(3, 4) if n >= 5 else range(0), lambda t: 5, _n4_special),
    DerivationScript("n4_base", "x_2 x_1^2 x_2 = x_1^2 x_2 x_1^2",
                     lambda n: range(2, 3) if n >= 4 else range(0), lambda t: 4, _n4_base),
    DerivationScript("sandwich", "x_t x_{t-1} x_t = x_{t-1}^2",
                     lambda n: range(2, n - 1), lambda t: t + 2, _sandwich),
    DerivationScript("rule7", "x_{i+1}^2 = x_i x_{i+1} x_i",
                     lambda n: range(1, n - 2), lambda i: i + 3, _rule7),
    DerivationScript("rule8", "x_{i+2} x_i = x_i x_{i+1}^-1 x_{i+2}",
                     lambda n: range(1, n - 3), lambda i: i + 4, _rule8),
]


def builtin_scripts() -> list[DerivationScript]:
    return list(_SCRIPTS)


def get_script(name: str) -> DerivationScript:
    for s in _SCRIPTS:
        if s.name == name:
            return s
    raise KeyError(f"no derivation script named {name!r}")


def _cyclic_reduce(pairs):
    r = list(pairs)
    while len(r) > 1 and r[0][0] == r[-1][0]:
        i, e = r[0][0], (r[0][1] + r[-1][1]) % 3
        r = r[1:-1]
        if e:
            r = reduce_pairs([(i, e)] + r)
    return tuple(r)


def _rotations(pairs):
    c = _cyclic_reduce(pairs)
    return {c[k:] + c[:k] for k in range(max(len(c), 1))}


def single_application(before: Word, after: Word, rel: RelationInstance) -> bool:
    """Whether ``after`` arises from ``before`` by one use of ``rel``, modulo free reduction."""
    a = reduce_pairs(before.pairs())
    b = reduce_pairs(after.pairs())
    if a == b:
        return rel.kind == "R"
    rel_pairs = rel.relator().pairs()
    inv = [(i, 3 - e) for i, e in reversed(rel_pairs)]
    targets = _rotations(reduce_pairs(rel_pairs)) | _rotations(reduce_pairs(inv))
    prefix = 0
    while prefix < min(len(a), len(b)) and a[prefix] == b[prefix]:
        prefix += 1
    suffix = 0
    while suffix < min(len(a), len(b)) and a[-1 - suffix] == b[-1 - suffix]:
        suffix += 1
    for p in range(prefix + 1):
        for s in range(suffix + 1):
            if p + s > min(len(a), len(b)):
                break
            u = a[p:len(a) - s]
            v = b[p:len(b) - s]
            v_inv = [(i, 3 - e) for i, e in reversed(v)]
            if _cyclic_reduce(reduce_pairs(list(u) + v_inv)) in targets:
                return True
    return False


def verify_derivation(script: DerivationScript | str, i: int, n: int) -> VerificationReport:
    """Replay ``script`` at parameter ``i`` and degree ``n``.

    Words are evaluated at ``max(n, script.min_degree(i))`` so that every
    generator in the chain exists; the degree used is reported in the stats.
    """
    if isinstance(script, str):
        script = get_script(script)
    if n < 3:
        raise InvalidDegreeError(f"degree must be >= 3, got {n}")
    allowed = script.params(n)
    if i not in allowed:
        raise IndexRangeError(
            f"parameter {i} outside admissible range {list(allowed)} for {script.name!r} at n={n}"
        )
    degree = max(n, script.min_degree(i))
    images = standard_images(degree)
    steps = script.steps(i)
    check = f"derivation:{script.name}"
    syntactic = 0
    prev = steps[0].word
    prev_value = eval_pairs(prev.pairs(), images, degree)
    for k, step in enumerate(steps[1:], 1):
        value = eval_pairs(step.word.pairs(), images, degree)
        if value != prev_value:
            return VerificationReport(check, n, False, {
                "step": k, "before": format_word(prev), "after": format_word(step.word),
            }, {"steps": len(steps) - 1, "eval_degree": degree})
        if step.relation is not None:
            if not holds(step.relation, images, degree):
                return VerificationReport(check, n, False, {
                    "step": k, "relation": str(step.relation),
                }, {"steps": len(steps) - 1, "eval_degree": degree})
            if single_application(prev, step.word, step.relation):
                syntactic += 1
        prev, prev_value = step.word, value
    return VerificationReport(check, n, True, None, {
        "param": i,
        "steps": len(steps) - 1,
        "eval_degree": degree,
        "syntactic_steps": syntactic,
        "ends_at_identity": prev_value == tuple(range(1, degree + 1)),
    })


def verify_scripts(names: list[str], n: int, check: str) -> VerificationReport:
    """Replay each named script at every admissible parameter for degree n."""
    runs = 0
    syntactic = total_steps = 0
    for name in names:
        script = get_script(name)
        for i in script.params(n):
            report = verify_derivation(script, i, n)
            runs += 1
            if not report.passed:
                return VerificationReport(check, n, False,
                                          {"script": name, "param": i, **report.counterexample},
                                          {"runs": runs})
            total_steps += report.stats["steps"]
            syntactic += report.stats["syntactic_steps"]
    return VerificationReport(check, n, True, None, {
        "runs": runs, "steps": total_steps, "syntactic_steps": syntactic,
    })
