"""Sequents, rule application, validation, ancestry."""

import random

import pytest

from rll.expr import Alphabet, Letter, ParseError, canonical, parse
from rll.calculus import (
    AXIOM_RULES,
    AncestryEdge,
    RuleInstance,
    Sequent,
    applicable_steps,
    canonical_rule_name,
    format_sequent,
    immediate_ancestry,
    make_instance,
    parse_sequent,
    validate_instance,
)
from rll.semantics import UPWord, member
from oracles import gen_expr, gen_word

AB = Alphabet("ab")


def e(text):
    return parse(text, AB)


def seq(text):
    return parse_sequent(text, AB)


# ---------------------------------------------------------------------------
# sequents


def test_sequent_round_trip_and_set_semantics():
    s = seq("a 0, a 0, mu X. X |- T")
    assert len(s.lhs) == 2  # duplicates collapse
    assert parse_sequent(format_sequent(s), AB) == s
    assert format_sequent(seq("|-")) == "|-"
    assert format_sequent(seq("a 0 |-")) == "a 0 |-"
    assert format_sequent(seq("|- a 0")) == "|- a 0"


def test_sequent_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_sequent("a 0", AB)
    with pytest.raises(ParseError):
        parse_sequent("a |- b |- c", AB)
    with pytest.raises(ValueError):
        Sequent([parse("a X", AB)], [], AB)  # open formula
    with pytest.raises(ValueError):
        Sequent([parse("a c 0", Alphabet("abc"))], [], AB)  # stray letter


def test_rule_name_aliases():
    assert canonical_rule_name("mu-l") == "μ-l"
    assert canonical_rule_name("cap-r") == "∩-r"
    assert canonical_rule_name("l-p") == "l-p"


# ---------------------------------------------------------------------------
# applicable steps: the worked examples


def test_steps_on_empty_versus_universal():
    steps = applicable_steps(seq("mu X. X |- nu X. X"))
    assert [i.rule for i in steps] == ["l-w", "r-w", "μ-l", "ν-r"]
    mu_l = steps[2]
    assert mu_l.premisses == (seq("mu X. X |- nu X. X"),)  # unfolds to itself


def test_steps_on_a_letter_clash():
    steps = applicable_steps(seq("a 0, b T |-"))
    assert [i.rule for i in steps] == ["l-p", "l-w", "l-w"]
    assert steps[0].premisses == ()


def test_steps_on_the_empty_sequent():
    steps = applicable_steps(seq("|-"))
    assert [i.rule for i in steps] == ["r-p"]
    assert steps[0].premisses == (seq("|-"), seq("|-"))


def test_letter_clash_needs_distinct_letters_and_bare_sides():
    assert "l-p" not in [i.rule for i in applicable_steps(seq("a 0, a T |-"))]
    assert "l-p" not in [i.rule for i in applicable_steps(seq("a 0, b T |- 0"))]
    assert "l-p" not in [i.rule for i in applicable_steps(seq("a 0, b T, b 0 |-"))]


def test_letter_strip_requires_a_common_head():
    assert "h_a" in [i.rule for i in applicable_steps(seq("a 0, a T |- a 0"))]
    assert "h_b" in [i.rule for i in applicable_steps(seq("b 0 |-"))]
    # mixed heads on the left, or an unmatched head on the right, block it
    for text in ["a 0, b 0 |-", "a 0 |- b 0", "|- a 0", "a 0, 0 |- a 0"]:
        assert not any(i.rule.startswith("h_") for i in applicable_steps(seq(text)))


def test_right_partition_collects_by_letter():
    steps = applicable_steps(seq("|- a 0, a T, b 0"))
    rp = [i for i in steps if i.rule == "r-p"][0]
    assert rp.premisses == (seq("|- 0, T"), seq("|- 0"))  # alphabet order


def test_every_sequent_has_a_step():
    rng = random.Random(11)
    for _ in range(200):
        lhs = [gen_expr(rng, AB, rng.randint(1, 4)) for _ in range(rng.randint(0, 3))]
        rhs = [gen_expr(rng, AB, rng.randint(1, 4)) for _ in range(rng.randint(0, 3))]
        s = Sequent(lhs, rhs, AB)
        assert applicable_steps(s), "no step applies to %s" % format_sequent(s)


def test_steps_are_deterministic_and_valid():
    rng = random.Random(12)
    for _ in range(100):
        lhs = [gen_expr(rng, AB, rng.randint(1, 4)) for _ in range(rng.randint(0, 2))]
        rhs = [gen_expr(rng, AB, rng.randint(1, 4)) for _ in range(rng.randint(0, 2))]
        s = Sequent(lhs, rhs, AB)
        steps = applicable_steps(s)
        assert steps == applicable_steps(s)
        assert len(set(steps)) == len(steps)
        for inst in steps:
            assert validate_instance(inst) is None
            assert inst.conclusion == s


# ---------------------------------------------------------------------------
# validation


def test_validation_side_conditions():
    # h_a on an empty left side
    bad = RuleInstance("h_a", seq("|- a 0"), "a", (seq("|- 0"),))
    assert "nonempty left side" in validate_instance(bad)
    # forged premiss
    bad = RuleInstance("h_a", seq("a 0 |-"), "a", (seq("T |-"),))
    assert validate_instance(bad) is not None
    # l-p needs distinct letters: the rule never concludes a same-letter pair
    bad = RuleInstance("l-p", seq("a 0, a T |-"), None, ())
    assert validate_instance(bad) is not None
    ok = make_instance("∩-l", seq("(a 0) & (b 0) |-"), e("(a 0) & (b 0)"))
    assert validate_instance(ok) is None


def test_validation_accepts_aliases_and_rejects_unknown_rules():
    inst = RuleInstance("mu-l", seq("mu X. X |-"), e("mu X. X"), (seq("mu X. X |-"),))
    assert validate_instance(inst) is None
    assert "unknown rule" in validate_instance(RuleInstance("cut", seq("|-"), None, ()))


def test_contextfree_plus_is_a_degenerate_case_only():
    conc = seq("a 0 + b 0, T |- 0")
    p = e("a 0 + b 0")
    contexted = make_instance("+-l", conc, p)
    assert contexted.premisses == (seq("a 0, T |- 0"), seq("b 0, T |- 0"))
    degenerate = RuleInstance("+-l", conc, p, (seq("a 0, T |- 0"), seq("b 0 |- 0")))
    assert validate_instance(degenerate) is not None
    assert validate_instance(degenerate, allow_contextfree_plus=True) is None
    # the relaxation does not swallow arbitrary premiss damage
    mangled = RuleInstance("+-l", conc, p, (seq("a 0 |- 0"), seq("b 0 |- 0")))
    assert validate_instance(mangled, allow_contextfree_plus=True) is not None


# ---------------------------------------------------------------------------
# ancestry


def _edges(inst):
    return {
        (d.premiss_index, d.premiss_side, d.premiss_formula, d.conclusion_formula, d.kind)
        for d in immediate_ancestry(inst)
    }


def test_ancestry_of_an_unfolding():
    inst = make_instance("μ-l", seq("T, mu X. a X |- 0"), e("mu X. a X"))
    assert _edges(inst) == {
        (0, "L", e("a mu X. a X"), e("mu X. a X"), "principal"),
        (0, "L", e("T"), e("T"), "identity"),
        (0, "R", e("0"), e("0"), "identity"),
    }


def test_ancestry_of_a_self_unfolding_records_both_edges():
    inst = make_instance("μ-l", seq("mu X. X |-"), e("mu X. X"))
    assert _edges(inst) == {
        (0, "L", e("mu X. X"), e("mu X. X"), "principal"),
        (0, "L", e("mu X. X"), e("mu X. X"), "identity"),
    }


def test_ancestry_of_the_letter_rules():
    h = make_instance("h_a", seq("a 0, a T |- a (mu X. X)"), "a")
    assert _edges(h) == {
        (0, "L", e("0"), e("a 0"), "letter"),
        (0, "L", e("T"), e("a T"), "letter"),
        (0, "R", e("mu X. X"), e("a mu X. X"), "letter"),
    }
    rp = make_instance("r-p", seq("|- a 0, b T"))
    assert _edges(rp) == {
        (0, "R", e("0"), e("a 0"), "letter"),
        (1, "R", e("T"), e("b T"), "letter"),
    }


def test_ancestry_of_weakening_drops_the_principal():
    inst = make_instance("l-w", seq("0, T |- a 0"), e("T"))
    assert _edges(inst) == {
        (0, "L", e("0"), e("0"), "identity"),
        (0, "R", e("a 0"), e("a 0"), "identity"),
    }


def test_axioms_have_no_ancestry():
    for text, rule, principal in [
        ("0, T |- a 0", "0-l", e("0")),
        ("a 0 |- T", "⊤-r", e("T")),
        ("a 0, b 0 |-", "l-p", None),
    ]:
        assert immediate_ancestry(make_instance(rule, seq(text), principal)) == []


def test_ancestry_edges_connect_the_actual_cedents():
    rng = random.Random(13)
    for _ in range(150):
        lhs = [gen_expr(rng, AB, rng.randint(1, 4)) for _ in range(rng.randint(0, 2))]
        rhs = [gen_expr(rng, AB, rng.randint(1, 4)) for _ in range(rng.randint(0, 2))]
        s = Sequent(lhs, rhs, AB)
        for inst in applicable_steps(s):
            for d in immediate_ancestry(inst):
                assert d.premiss_side == d.conclusion_side
                prem = inst.premisses[d.premiss_index]
                side = prem.lhs if d.premiss_side == "L" else prem.rhs
                conc = s.lhs if d.conclusion_side == "L" else s.rhs
                assert d.premiss_formula in side
                assert d.conclusion_formula in conc


# ---------------------------------------------------------------------------
# semantics of the rules, spot-checked on sampled words


def _valid_at(s, w):
    if all(member(w, f) for f in s.lhs):
        return any(member(w, f) for f in s.rhs)
    return True


CORPUS_SEQUENTS = [
    "mu X. X |- nu X. X",
    "mu X. (a X + b X + nu Y. b Y), mu X. (a X + b X + nu Y. a Y) |-",
    "nu X. a X |- nu X. mu Y. (a X + b Y)",
    "|- mu X. (a X + b X + nu Y. b Y), nu X. mu Y. (a X + b Y)",
    "a 0 + b 0, T |- 0",
    "(a 0) & (b 0) |- a (nu X. X)",
    "a nu X. a X, a T |- a nu X. mu Y. (a X + b Y)",
    "|- a 0, a T, b 0",
    "0 |-",
    "|- T, mu X. X",
]


def test_rules_are_locally_sound_on_sampled_words():
    rng = random.Random(14)
    words = [UPWord(*gen_word(rng, AB), AB) for _ in range(12)]
    for text in CORPUS_SEQUENTS:
        s = seq(text)
        for inst in applicable_steps(s):
            for w in words:
                if inst.rule.startswith("h_"):
                    a = inst.rule[2:]
                    lifted = UPWord(a + w.stem, w.loop, AB)
                    if _valid_at(inst.premisses[0], w):
                        assert _valid_at(s, lifted)
                elif inst.rule == "r-p":
                    for i, c in enumerate(AB):
                        if _valid_at(inst.premisses[i], w):
                            assert _valid_at(s, UPWord(c + w.stem, w.loop, AB))
                else:
                    if all(_valid_at(p, w) for p in inst.premisses):
                        assert _valid_at(s, w)


def test_logical_and_partition_rules_are_invertible_on_sampled_words():
    rng = random.Random(15)
    words = [UPWord(*gen_word(rng, AB), AB) for _ in range(12)]
    invertible = {"0-l", "⊤-l", "+-l", "∩-l", "μ-l", "ν-l", "0-r", "⊤-r", "+-r", "∩-r", "μ-r", "ν-r"}
    for text in CORPUS_SEQUENTS:
        s = seq(text)
        for inst in applicable_steps(s):
            if inst.rule in invertible:
                for w in words:
                    if _valid_at(s, w):
                        for p in inst.premisses:
                            assert _valid_at(p, w)
            elif inst.rule.startswith("h_"):
                a = inst.rule[2:]
                for w in words:
                    if _valid_at(s, UPWord(a + w.stem, w.loop, AB)):
                        assert _valid_at(inst.premisses[0], w)
            elif inst.rule == "r-p":
                for w in words:
                    for i, c in enumerate(AB):
                        if _valid_at(s, UPWord(c + w.stem, w.loop, AB)):
                            assert _valid_at(inst.premisses[i], w)
