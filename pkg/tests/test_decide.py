import pytest

from rll.calculus import parse_sequent
from rll.corpus import ALPHABET, DECISIONS, EXPRESSIONS
from rll.decide import (
    Proved,
    Refuted,
    UnguardedSequentError,
    decide,
    saturate,
    strategy_step,
)
from rll.expr import complement, parse
from rll.proof import check, check_local, serialize_proof
from rll.semantics import member

AB = ALPHABET


def _s(text):
    return parse_sequent(text, AB)


def _assert_refutes(s, w):
    for e in s.lhs_sorted:
        assert member(w, e), (str(w), e)
    for f in s.rhs_sorted:
        assert not member(w, f), (str(w), f)


# ---------------------------------------------------------------------------
# strategy


def test_a_left_zero_closes_before_anything_else():
    inst = strategy_step(_s("0, a 0 |- T"))
    assert inst.rule == "0-l"


def test_a_right_top_closes_next():
    inst = strategy_step(_s("a 0 |- T, mu X. a X"))
    assert inst.rule == "⊤-r"


def test_the_least_nonletter_formula_is_unfolded_first():
    inst = strategy_step(_s("a 0, mu X. a X |- b 0"))
    assert inst.rule == "μ-l" and inst.principal == parse("mu X. a X", AB)


def test_ties_between_sides_prefer_the_left():
    inst = strategy_step(_s("mu X. a X |- mu X. a X"))
    assert inst.rule == "μ-l"


def test_two_distinct_head_letters_lead_to_a_left_partition():
    assert strategy_step(_s("a 0, b 0 |-")).rule == "l-p"
    # remaining right formulas are weakened away first
    inst = strategy_step(_s("a 0, b 0 |- a 0"))
    assert inst.rule == "r-w" and inst.principal == parse("a 0", AB)
    # and extra left letters beyond a differing pair go first of all
    assert strategy_step(_s("a 0, a T, b 0 |-")).rule == "l-w"


def test_a_single_head_letter_strips_after_discarding_mismatches():
    inst = strategy_step(_s("a 0 |- b 0, a T"))
    assert inst.rule == "r-w" and inst.principal == parse("b 0", AB)
    inst = strategy_step(_s("a 0 |- a T"))
    assert inst.rule == "h_a" and inst.principal == "a"


def test_an_empty_left_side_partitions_on_the_right():
    assert strategy_step(_s("|- a 0")).rule == "r-p"
    assert strategy_step(_s("|-")).rule == "r-p"


# ---------------------------------------------------------------------------
# saturation


def test_saturation_builds_a_locally_valid_graph_rooted_at_n0():
    p = saturate(_s("mu X. a X + b X |- nu X. a X + b X"))
    assert p.root == "n0"
    assert not check_local(p)
    assert p.sequent("n0") == _s("mu X. a X + b X |- nu X. a X + b X")


def test_saturation_is_deterministic():
    s = _s("nu X. mu Y. a X + b Y |- mu X. a X + b X + nu Y. b Y")
    assert serialize_proof(saturate(s)) == serialize_proof(saturate(s))


def test_saturation_respects_its_node_budget():
    with pytest.raises(RuntimeError, match="exceeded"):
        saturate(_s("mu X. a X + b X |- nu X. a X + b X"), max_nodes=3)


# ---------------------------------------------------------------------------
# the decision procedure


def test_unguarded_inputs_are_rejected_up_front():
    with pytest.raises(UnguardedSequentError, match="not guarded"):
        decide(_s("mu X. X |-"))
    with pytest.raises(UnguardedSequentError):
        decide(_s("|- nu X. X + a X"))


@pytest.mark.parametrize("name, s, verdict", DECISIONS, ids=[d[0] for d in DECISIONS])
def test_the_bundled_decisions_come_out_as_recorded(name, s, verdict):
    out = decide(s)
    if verdict == "proved":
        assert isinstance(out, Proved)
        assert out.proof.sequent(out.proof.root) == s
        assert check(out.proof).ok
    else:
        assert isinstance(out, Refuted)
        _assert_refutes(s, out.word)


def test_decisions_are_reproducible_object_for_object():
    proved = _s("mu X. a X + b X + nu Y. b Y |- nu X. mu Y. b X + a Y")
    a, b = decide(proved), decide(proved)
    assert serialize_proof(a.proof) == serialize_proof(b.proof)
    refuted = _s("nu X. mu Y. a X + b Y |- mu X. a X + b X + nu Y. b Y")
    a, b = decide(refuted), decide(refuted)
    assert a.word == b.word


def test_countermodels_survive_an_independent_membership_check():
    for text in (
        "nu X. a X + b X |- nu X. mu Y. a X + b Y",
        "|- mu X. a X",
        "nu X. a X |- nu X. b X",
    ):
        s = _s(text)
        out = decide(s)
        assert isinstance(out, Refuted)
        _assert_refutes(s, out.word)


def test_an_expression_meets_and_joins_its_complement_as_expected():
    from rll.calculus import Sequent
    from rll.expr import Cap, Plus

    e = EXPRESSIONS["fin-a"]
    ce = complement(e, AB)
    total = decide(Sequent(set(), {Plus(e, ce)}, AB))
    assert isinstance(total, Proved) and check(total.proof).ok
    empty = decide(Sequent({Cap(e, ce)}, set(), AB))
    assert isinstance(empty, Proved) and check(empty.proof).ok
