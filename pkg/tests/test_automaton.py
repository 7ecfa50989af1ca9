"""Closure automata: states, transition structure, colouring, DOT export."""

import random

import pytest

from rll.expr import Alphabet, Mu, Nu, ast_size, canonical, fl_closure, parse, unfold
from rll.automaton import Apa, Coloring, apa_accepts, build_apa, default_coloring, export_dot
from rll.semantics import UPWord, member, parse_word
from oracles import gen_expr, gen_word

AB = Alphabet("ab")


def e(text):
    return parse(text, AB)


# ---------------------------------------------------------------------------
# colouring


def test_colouring_of_the_always_a_loop():
    fl = fl_closure(e("nu X. a X"))
    col = default_coloring(fl)
    assert col[e("nu X. a X")] == 0
    assert col[unfold(e("nu X. a X"))] == 0


def test_colouring_of_the_empty_fixpoint():
    fl = fl_closure(e("mu X. X"))
    assert default_coloring(fl)[e("mu X. X")] == 1


def test_colouring_of_infinitely_many_a():
    i_a = e("nu X. mu Y. (a X + b Y)")
    fl = fl_closure(i_a)
    col = default_coloring(fl)
    assert col[i_a] == 0
    assert col[unfold(i_a)] == 1  # the inner mu dominates the outer nu


def test_colouring_of_finitely_many_a():
    f_a = e("mu X. (a X + b X + nu Y. b Y)")
    fl = fl_closure(f_a)
    col = default_coloring(fl)
    assert col[f_a] == 1
    assert col[e("nu Y. b Y")] == 0
    assert col[e("b nu Y. b Y")] == 0
    assert col[unfold(f_a)] == 1


CORPUS = [
    "mu X. X",
    "nu X. X",
    "nu X. a X",
    "nu X. (a X + b X)",
    "mu X. (a X + b X + nu Y. b Y)",
    "mu X. (a X + b X + nu Y. a Y)",
    "nu X. mu Y. (a X + b Y)",
    "nu X. mu Y. (b X + a Y)",
    "(mu X. (a X + b X + nu Y. b Y)) & nu X. mu Y. (a X + b Y)",
]


@pytest.mark.parametrize("text", CORPUS)
def test_colouring_invariants(text):
    fl = fl_closure(e(text))
    col = default_coloring(fl)
    fixpoints = [m for m in fl.members if isinstance(m, (Mu, Nu))]
    for m in fixpoints:
        assert col[m] % 2 == (1 if isinstance(m, Mu) else 0)
    from rll.expr import subformula_leq

    for g in fixpoints:
        for m in fixpoints:
            if subformula_leq(g, m):
                assert col[g] <= col[m]
    for m in fl.members:
        if not isinstance(m, (Mu, Nu)):
            inner = [col[g] for g in fixpoints if subformula_leq(g, m)]
            assert col[m] == max(inner, default=0)
    assert max(col[m] for m in fl.members) <= max(len(fixpoints), 1)


def test_colouring_rejects_non_natural_colours():
    with pytest.raises(ValueError):
        Coloring({e("0"): -1})
    with pytest.raises(ValueError):
        Coloring({e("0"): 0.5})


# ---------------------------------------------------------------------------
# automaton construction


def test_automaton_of_the_empty_fixpoint():
    apa = build_apa(e("mu X. X"))
    s = e("mu X. X")
    assert apa.states == (s,)
    assert apa.initial == s
    assert apa.transitions == ((s, None, s),)  # a single epsilon self-loop
    assert s in apa.existential
    assert apa.colour[s] == 1


def test_automaton_of_the_always_a_loop():
    apa = build_apa(e("nu X. a X"))
    loop, step = e("nu X. a X"), unfold(e("nu X. a X"))
    assert set(apa.states) == {loop, step}
    assert set(apa.transitions) == {(loop, None, step), (step, "a", loop)}
    assert apa.universal == frozenset()


def test_universal_states_are_intersections_and_top():
    apa = build_apa(e("(a T) & (T + 0)"))
    assert e("(a T) & (T + 0)") in apa.universal
    assert e("T") in apa.universal
    assert e("T + 0") in apa.existential
    assert e("a T") in apa.existential


def test_state_count_is_bounded_by_the_expression_size():
    rng = random.Random(5)
    for _ in range(200):
        expr = canonical(gen_expr(rng, AB, rng.randint(1, 8)))
        apa = build_apa(expr)
        assert len(apa.states) <= ast_size(expr)
        # transitions mirror the closure's one-step reducts exactly
        fl = fl_closure(expr)
        expected = set()
        for m in fl.members:
            for kind, target in fl.successors[m]:
                letter = m.letter if kind == "letter-step" else None
                expected.add((m, letter, target))
        assert set(apa.transitions) == expected


def test_apa_validation():
    s = e("0")
    with pytest.raises(ValueError):
        Apa([s], [s], [s], [], s, Coloring({s: 0}))  # not a partition
    with pytest.raises(ValueError):
        Apa([s], [s], [], [(s, None, e("T"))], s, Coloring({s: 0}))
    with pytest.raises(ValueError):
        Apa([s], [s], [], [], e("T"), Coloring({s: 0}))


# ---------------------------------------------------------------------------
# acceptance


def test_acceptance_examples():
    aw = build_apa(e("nu X. a X"))
    assert apa_accepts(aw, parse_word("(a)^w", AB))
    assert not apa_accepts(aw, parse_word("a(b)^w", AB))
    i_a = build_apa(e("nu X. mu Y. (a X + b Y)"))
    assert apa_accepts(i_a, parse_word("(ab)^w", AB))
    assert not apa_accepts(i_a, parse_word("ab(b)^w", AB))


def test_acceptance_agrees_with_membership():
    rng = random.Random(33)
    for _ in range(300):
        expr = gen_expr(rng, AB, rng.randint(1, 7))
        stem, loop = gen_word(rng, AB)
        word = UPWord(stem, loop, AB)
        assert apa_accepts(build_apa(expr), word) is member(word, expr)


# ---------------------------------------------------------------------------
# DOT export


def test_dot_export_of_the_empty_fixpoint():
    assert export_dot(build_apa(e("mu X. X"))) == (
        "digraph apa {\n"
        "  rankdir=LR;\n"
        '  init [shape=point, label=""];\n'
        "  init -> s0;\n"
        '  s0 [shape=diamond, label="mu X. X | 1"];\n'
        '  s0 -> s0 [label="ε"];\n'
        "}\n"
    )


def test_dot_export_is_deterministic_and_complete():
    rng = random.Random(8)
    for _ in range(50):
        expr = gen_expr(rng, AB, rng.randint(1, 7))
        apa = build_apa(expr)
        dot = export_dot(apa)
        assert dot == export_dot(build_apa(expr))
        assert dot.count("[shape=") == len(apa.states) + 1  # + the init point
        for s in apa.universal:
            assert "shape=box" in dot
