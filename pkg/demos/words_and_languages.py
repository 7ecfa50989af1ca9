"""A tour of expressions as ω-languages.

Builds a few expressions over {a, b}, tests ultimately periodic words
against them, complements one, and writes an automaton rendering.

Equivalent shell one-liners:
    rll member --alphabet ab --word "(a)^w" --expr "nu X. a X"
    rll complement --alphabet ab --expr "nu X. a X"
    rll export-apa --alphabet ab --expr "i_a" --dot inf-a.dot
"""

from rll.automaton import build_apa, export_dot
from rll.expr import Alphabet, complement, parse, pretty
from rll.semantics import member, parse_word

AB = Alphabet("ab")

EXPRESSIONS = {
    "only a's forever": "nu X. a X",
    "finitely many a's": "mu X. (a X + b X + nu Y. b Y)",
    "infinitely many a's": "nu X. mu Y. (a X + b Y)",
}

WORDS = ["(a)^w", "(b)^w", "ab(b)^w", "(ab)^w", "bbb(ba)^w"]


def main():
    print("membership".center(60, "-"))
    header = " ".join("%10s" % w for w in WORDS)
    print("%28s %s" % ("", header))
    for label, text in EXPRESSIONS.items():
        e = parse(text, AB)
        row = " ".join(
            "%10s" % ("yes" if member(parse_word(w, AB), e) else "no") for w in WORDS
        )
        print("%28s %s" % (label, row))

    print()
    print("complement".center(60, "-"))
    e = parse("nu X. a X", AB)
    ce = complement(e, AB)
    print("the complement of %s is %s" % (pretty(e), pretty(ce)))
    for w in WORDS:
        word = parse_word(w, AB)
        assert member(word, e) != member(word, ce)
    print("checked: every sample word is in exactly one of the two")

    print()
    print("automaton".center(60, "-"))
    apa = build_apa(parse("nu X. mu Y. (a X + b Y)", AB))
    print(
        "'infinitely many a's' compiles to %d states, %d transitions"
        % (len(apa.states), len(apa.transitions))
    )
    with open("inf-a.dot", "w", encoding="utf-8") as f:
        f.write(export_dot(apa))
    print("wrote inf-a.dot (render with: dot -Tpng inf-a.dot -o inf-a.png)")


if __name__ == "__main__":
    main()
