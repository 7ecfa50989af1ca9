"""Deciding language inclusions, end to end.

Three runs of the decision procedure:

  1. a valid inclusion — we get a cyclic proof, serialize it, re-parse it
     and re-check it;
  2. an invalid one — we get an ultimately periodic countermodel and verify
     it by membership on both sides;
  3. an unguarded input — rejected up front.

Equivalent shell one-liners:
    rll decide --alphabet ab --sequent "only-a |- i_a" --emit-proof out.prf
    rll check out.prf
    rll decide --alphabet ab --sequent "i_a |- f_a"
"""

from rll.calculus import format_sequent, parse_sequent
from rll.decide import Proved, Refuted, UnguardedSequentError, decide
from rll.expr import Alphabet, pretty
from rll.proof import check, parse_proof, serialize_proof
from rll.semantics import member

AB = Alphabet("ab")


def main():
    # --- a valid inclusion: "only a's" has infinitely many a's -------------
    s = parse_sequent("nu X. a X |- nu X. mu Y. (a X + b Y)", AB)
    print("deciding:", format_sequent(s))
    out = decide(s)
    assert isinstance(out, Proved)
    text = serialize_proof(out.proof)
    print("proved; the cyclic proof has %d nodes:" % len(out.proof.order))
    print()
    print(text)
    reloaded = parse_proof(text)
    result = check(reloaded)
    print("re-parsed and re-checked: %s" % result.reason)

    # --- an invalid one: infinitely many a's vs finitely many a's ----------
    s = parse_sequent(
        "nu X. mu Y. (a X + b Y) |- mu X. (a X + b X + nu Y. b Y)", AB
    )
    print()
    print("deciding:", format_sequent(s))
    out = decide(s)
    assert isinstance(out, Refuted)
    w = out.word
    print("refuted by %s" % w)
    for e in s.lhs_sorted:
        print("  %s  is in  %s" % (w, pretty(e)))
        assert member(w, e)
    for f in s.rhs_sorted:
        print("  %s  is not in  %s" % (w, pretty(f)))
        assert not member(w, f)

    # --- an unguarded input -------------------------------------------------
    s = parse_sequent("mu X. (X + a X) |-", AB)
    print()
    print("deciding:", format_sequent(s))
    try:
        decide(s)
    except UnguardedSequentError as exc:
        print("rejected: %s" % exc)


if __name__ == "__main__":
    main()
