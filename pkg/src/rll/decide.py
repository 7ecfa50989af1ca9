"""Deciding guarded sequents by canonical proof search.

The search strategy is deterministic: apply closing axioms first, then the
logical rule on the least non-letter formula, and once every formula is
letter-prefixed either clash two distinct head letters (l-p, weakening the
rest away), strip a shared head letter (h_a, weakening mismatched RHS
formulas), or partition on the first letter (r-p) when the LHS is empty.
Saturating the strategy with memoised sequents yields a finite cyclic
preproof; the sequent is valid exactly when that preproof passes the
progress check, and a failing branch folds into an ultimately periodic
countermodel by reading off the letters consumed along its lasso.  Every
countermodel is re-verified by the membership solver before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expr import Cap, Letter, Mu, Nu, Plus, Top, Zero, expr_sort_key, is_guarded, pretty
from .semantics import UPWord, member
from .calculus import RuleInstance, Sequent, make_instance
from .proof import Lasso, ProofGraph, check_local, check_progress


class UnguardedSequentError(ValueError):
    """decide only handles sequents whose formulas are all guarded."""


_LOGICAL_L = {Zero: "0-l", Top: "⊤-l", Plus: "+-l", Cap: "∩-l", Mu: "μ-l", Nu: "ν-l"}
_LOGICAL_R = {Zero: "0-r", Top: "⊤-r", Plus: "+-r", Cap: "∩-r", Mu: "μ-r", Nu: "ν-r"}


def strategy_step(s: Sequent) -> RuleInstance:
    """The single rule the search strategy applies at s."""
    lhs, rhs = s.lhs_sorted, s.rhs_sorted
    for e in lhs:
        if isinstance(e, Zero):
            return make_instance("0-l", s, e)
    for f in rhs:
        if isinstance(f, Top):
            return make_instance("⊤-r", s, f)
    candidates = [(expr_sort_key(e), 0, e) for e in lhs if not isinstance(e, Letter)]
    candidates += [(expr_sort_key(f), 1, f) for f in rhs if not isinstance(f, Letter)]
    if candidates:
        _, side, e = min(candidates)
        rule = _LOGICAL_L[type(e)] if side == 0 else _LOGICAL_R[type(e)]
        return make_instance(rule, s, e)
    if lhs:
        heads = {e.letter for e in lhs}
        if len(heads) >= 2:
            first = lhs[0]
            second = next(e for e in lhs if e.letter != first.letter)
            for e in lhs:
                if e is not first and e is not second:
                    return make_instance("l-w", s, e)
            if rhs:
                return make_instance("r-w", s, rhs[0])
            return make_instance("l-p", s)
        head = lhs[0].letter
        for f in rhs:
            if f.letter != head:
                return make_instance("r-w", s, f)
        return make_instance("h_" + head, s, head)
    return make_instance("r-p", s)


def saturate(s: Sequent, max_nodes: int = 200000) -> ProofGraph:
    """Expand strategy_step breadth-first, memoising sequents into
    back-edges.  Terminates because only finitely many sequents arise."""
    memo = {s: "n0"}
    records = {}
    queue = [s]
    counter = 1
    while queue:
        current = queue.pop(0)
        inst = strategy_step(current)
        kids = []
        for prem in inst.premisses:
            if prem not in memo:
                if len(memo) >= max_nodes:
                    raise RuntimeError("proof search exceeded %d sequents" % max_nodes)
                memo[prem] = "n%d" % counter
                counter += 1
                queue.append(prem)
            kids.append(memo[prem])
        records[memo[current]] = (inst, tuple(kids))
    nodes = [("n%d" % i, *records["n%d" % i]) for i in range(len(records))]
    return ProofGraph(nodes, "n0")


def extract_countermodel(p: ProofGraph, lasso: Lasso) -> UPWord:
    """Fold a rejected branch into the word it consumes: h_a steps and r-p
    child indices contribute letters, all other rules none."""
    alphabet = p.alphabet

    def letters(nodes, edges):
        out = []
        for nid, j in zip(nodes, edges):
            inst = p.instance[nid]
            if inst.rule.startswith("h_"):
                out.append(inst.rule[2:])
            elif inst.rule == "r-p":
                out.append(alphabet.letters[j])
        return "".join(out)

    stem = letters(lasso.stem, lasso.stem_edges)
    cycle = letters(lasso.cycle, lasso.cycle_edges)
    if not cycle:
        raise RuntimeError("internal error: rejected branch consumes no letters on its cycle")
    return UPWord(stem, cycle, alphabet)


@dataclass(frozen=True)
class Proved:
    proof: ProofGraph


@dataclass(frozen=True)
class Refuted:
    word: UPWord


def decide(s: Sequent, max_nodes: int = 200000):
    """Proved(proof) with a checkable cyclic proof, or Refuted(word) with a
    membership-verified countermodel (in every LHS language, in no RHS one)."""
    for e in sorted(s.lhs | s.rhs, key=expr_sort_key):
        if not is_guarded(e):
            raise UnguardedSequentError(
                "decide requires guarded expressions, but %s is not guarded" % pretty(e)
            )
    p = saturate(s, max_nodes=max_nodes)
    violations = check_local(p)
    if violations:
        raise RuntimeError("internal error: search built an ill-formed proof: %s" % violations[0])
    lasso = check_progress(p)
    if lasso is None:
        return Proved(p)
    w = extract_countermodel(p, lasso)
    for e in s.lhs_sorted:
        if not member(w, e):
            raise RuntimeError(
                "internal error: countermodel %s fails LHS formula %s" % (w, pretty(e))
            )
    for f in s.rhs_sorted:
        if member(w, f):
            raise RuntimeError(
                "internal error: countermodel %s satisfies RHS formula %s" % (w, pretty(f))
            )
    return Refuted(w)
