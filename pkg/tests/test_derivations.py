import pytest

from altnf.derivations import (
    builtin_scripts, get_script, single_application, verify_derivation, verify_scripts,
)
from altnf.errors import IndexRangeError
from altnf.presentation import relation
from altnf.words import parse_word

from oracle import eval_word


def test_builtin_catalogue():
    names = {s.name for s in builtin_scripts()}
    assert {"theorem2", "xtop_square", "collision", "n4_special"} <= names
    assert list(get_script("theorem2").params(9)) == list(range(1, 6))
    xsq = get_script("xtop_square").steps(4)
    assert len(xsq) - 1 == 2
    assert [s.relation.kind for s in xsq[1:]] == ["R", "S"]


def test_theorem2_example():
    report = verify_derivation("theorem2", 1, 7)
    assert report.passed
    assert report.stats["steps"] == 7
    assert report.stats["ends_at_identity"]


def test_collision_and_special_examples():
    assert verify_derivation("collision", 4, 6).passed
    assert verify_derivation("n4_special", 3, 5).passed


def test_parameter_out_of_range():
    with pytest.raises(IndexRangeError):
        verify_derivation("theorem2", 0, 7)
    with pytest.raises(IndexRangeError):
        verify_derivation("theorem2", 4, 7)
    with pytest.raises(IndexRangeError):
        verify_derivation("n4_special", 3, 4)


@pytest.mark.parametrize("n", range(5, 13))
def test_every_script_every_parameter(n):
    for script in builtin_scripts():
        for i in script.params(n):
            assert verify_derivation(script, i, n).passed, (script.name, i, n)


@pytest.mark.parametrize("script", [s.name for s in builtin_scripts()])
def test_chain_words_agree_under_oracle(script):
    s = get_script(script)
    for i in s.params(10):
        degree = max(10, s.min_degree(i))
        values = {tuple(eval_word(step.word.pairs(), degree)) for step in s.steps(i)}
        assert len(values) == 1


def test_broken_chain_is_caught():
    from altnf.derivations import DerivationScript, Step
    bad = DerivationScript(
        "bad", "", lambda n: range(1, 2), lambda i: 5,
        lambda i: [Step(parse_word("x1 x2"), None), Step(parse_word("x2 x1"), relation("S", 1))],
    )
    report = verify_derivation(bad, 1, 5)
    assert not report.passed
    assert report.counterexample["step"] == 1


def test_single_application():
    rel = relation("S", 2)
    assert single_application(parse_word("x3 x2 x1^2 x3"), parse_word("x2^2 x3^2 x1^2 x3"), rel)
    assert not single_application(parse_word("x3 x2 x1"), parse_word("x1 x2 x3"), rel)
    assert single_application(parse_word("x2^-1"), parse_word("x2 x2"), relation("R", 2))


def test_theorem2_syntactic_counts():
    report = verify_derivation("theorem2", 2, 8)
    # every step but the double substitution via Tprime is a single application
    assert report.stats["syntactic_steps"] == 6


def test_verify_scripts_aggregate():
    report = verify_scripts(["theorem2", "collision"], 8, "combined")
    assert report.passed
    assert report.stats["runs"] == 4 + 4
