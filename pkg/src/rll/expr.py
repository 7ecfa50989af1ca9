"""Right-linear lattice expressions.

The term language is

    e ::= X | a e | 0 | e + f | T | e & f | mu X. e | nu X. e

over a fixed alphabet of single-character letters.  An expression denotes a
language of infinite words: a letter prefixes, ``+`` and ``&`` are union and
intersection, ``0`` and ``T`` the empty and universal languages, and
``mu``/``nu`` bind least and greatest fixpoints.

This module is purely syntactic: construction, alpha-canonical renaming,
substitution, guardedness, the closure of an expression under one-step
decomposition/unfolding, the orders on that closure, and syntactic
complementation.  Everything is immutable after construction and all public
operations return canonically renamed terms, so structural equality is
equality up to renaming of bound variables.
"""

from __future__ import annotations

import re
from functools import lru_cache


class ParseError(ValueError):
    """Raised for malformed expression / word / sequent / proof text."""


class Alphabet:
    """Ordered alphabet of distinct single-character lowercase letters."""

    __slots__ = ("letters",)

    def __init__(self, letters):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must not be empty")
        for a in letters:
            if not (isinstance(a, str) and len(a) == 1 and a.isalpha() and a.islower()):
                raise ValueError("alphabet letters must be single lowercase characters, got %r" % (a,))
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet letters must be distinct: %r" % (letters,))
        self.letters = letters

    def index(self, a: str) -> int:
        return self.letters.index(a)

    def __contains__(self, a):
        return a in self.letters

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.letters == self.letters

    def __hash__(self):
        return hash(("alphabet", self.letters))

    def __str__(self):
        return "".join(self.letters)

    def __repr__(self):
        return "Alphabet(%r)" % (str(self),)


# ---------------------------------------------------------------------------
# AST


class Expr:
    """Base class for expression nodes.  Instances are immutable; do not
    assign to their fields after construction."""

    __slots__ = ("_hash",)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Expr[%s]" % pretty(self)


class Var(Expr):
    __slots__ = ("name",)

    def __init__(self, name: str):
        if not name or not isinstance(name, str):
            raise ValueError("variable name must be a nonempty string")
        self.name = name
        self._hash = hash(("var", name))

    def __eq__(self, other):
        return type(other) is Var and other.name == self.name

    __hash__ = Expr.__hash__


class Letter(Expr):
    """A letter-prefixed expression ``a e``."""

    __slots__ = ("letter", "body")

    def __init__(self, letter: str, body: Expr):
        if not (isinstance(letter, str) and len(letter) == 1 and letter.isalpha() and letter.islower()):
            raise ValueError("letter must be a single lowercase character, got %r" % (letter,))
        self.letter = letter
        self.body = body
        self._hash = hash(("letter", letter, body))

    def __eq__(self, other):
        return type(other) is Letter and other.letter == self.letter and other.body == self.body

    __hash__ = Expr.__hash__


class Zero(Expr):
    __slots__ = ()

    def __init__(self):
        self._hash = hash("zero")

    def __eq__(self, other):
        return type(other) is Zero

    __hash__ = Expr.__hash__


class Top(Expr):
    __slots__ = ()

    def __init__(self):
        self._hash = hash("top")

    def __eq__(self, other):
        return type(other) is Top

    __hash__ = Expr.__hash__


class Plus(Expr):
    __slots__ = ("left", "right")

    def __init__(self, left: Expr, right: Expr):
        self.left = left
        self.right = right
        self._hash = hash(("plus", left, right))

    def __eq__(self, other):
        return type(other) is Plus and other.left == self.left and other.right == self.right

    __hash__ = Expr.__hash__


class Cap(Expr):
    __slots__ = ("left", "right")

    def __init__(self, left: Expr, right: Expr):
        self.left = left
        self.right = right
        self._hash = hash(("cap", left, right))

    def __eq__(self, other):
        return type(other) is Cap and other.left == self.left and other.right == self.right

    __hash__ = Expr.__hash__


class Mu(Expr):
    __slots__ = ("var", "body")

    def __init__(self, var: str, body: Expr):
        self.var = var
        self.body = body
        self._hash = hash(("mu", var, body))

    def __eq__(self, other):
        return type(other) is Mu and other.var == self.var and other.body == self.body

    __hash__ = Expr.__hash__


class Nu(Expr):
    __slots__ = ("var", "body")

    def __init__(self, var: str, body: Expr):
        self.var = var
        self.body = body
        self._hash = hash(("nu", var, body))

    def __eq__(self, other):
        return type(other) is Nu and other.var == self.var and other.body == self.body

    __hash__ = Expr.__hash__


ZERO = Zero()
TOP = Top()

_BINDERS = (Mu, Nu)


# ---------------------------------------------------------------------------
# Basic structural queries


def free_vars(e: Expr) -> frozenset:
    """The set of free variable names of e."""
    if isinstance(e, Var):
        return frozenset((e.name,))
    if isinstance(e, Letter):
        return free_vars(e.body)
    if isinstance(e, (Plus, Cap)):
        return free_vars(e.left) | free_vars(e.right)
    if isinstance(e, _BINDERS):
        return free_vars(e.body) - {e.var}
    return frozenset()


def ast_size(e: Expr) -> int:
    """Number of AST nodes; the size measure for the closure bound."""
    if isinstance(e, Letter):
        return 1 + ast_size(e.body)
    if isinstance(e, (Plus, Cap)):
        return 1 + ast_size(e.left) + ast_size(e.right)
    if isinstance(e, _BINDERS):
        return 1 + ast_size(e.body)
    return 1


def _require_closed(e: Expr, op: str):
    fv = free_vars(e)
    if fv:
        raise ValueError("%s requires a closed expression; free: %s" % (op, ", ".join(sorted(fv))))


# ---------------------------------------------------------------------------
# Canonical renaming

# Bound variables are renamed to ".<n>" by binder depth.  The dot keeps the
# namespace disjoint from anything the parser can produce, so canonically
# renamed terms never collide with user variable names, and alpha-equivalent
# terms become structurally identical.


def canonical(e: Expr) -> Expr:
    """Rename bound variables positionally so structural equality is
    alpha-equivalence.  Free variables are left untouched."""
    base = 0
    for v in free_vars(e):
        if v.startswith(".") and v[1:].isdigit():
            base = max(base, int(v[1:]) + 1)

    def go(t, depth, env):
        if isinstance(t, Var):
            return Var(env[t.name]) if t.name in env else t
        if isinstance(t, Letter):
            return Letter(t.letter, go(t.body, depth, env))
        if isinstance(t, Plus):
            return Plus(go(t.left, depth, env), go(t.right, depth, env))
        if isinstance(t, Cap):
            return Cap(go(t.left, depth, env), go(t.right, depth, env))
        if isinstance(t, _BINDERS):
            fresh = ".%d" % (base + depth)
            inner = dict(env)
            inner[t.var] = fresh
            return type(t)(fresh, go(t.body, depth + 1, inner))
        return t

    return go(e, 0, {})


def substitute(e: Expr, name: str, repl: Expr) -> Expr:
    """Capture-avoiding substitution of repl for the free occurrences of
    Var(name) in e.  Binders shadow: substituting for X inside mu X. ... is a
    no-op on the bound occurrences."""
    repl_free = free_vars(repl)

    def freshen(base, avoid):
        i = 1
        cand = base + "_1"
        while cand in avoid:
            i += 1
            cand = base + "_%d" % i
        return cand

    def go(t):
        if isinstance(t, Var):
            return repl if t.name == name else t
        if isinstance(t, Letter):
            return Letter(t.letter, go(t.body))
        if isinstance(t, Plus):
            return Plus(go(t.left), go(t.right))
        if isinstance(t, Cap):
            return Cap(go(t.left), go(t.right))
        if isinstance(t, _BINDERS):
            if t.var == name:
                return t
            if name not in free_vars(t.body):
                return t
            if t.var in repl_free:
                # the binder would capture a free variable of repl: rename it
                fresh = freshen(t.var, repl_free | free_vars(t.body) | {name})
                body = substitute(t.body, t.var, Var(fresh))
                return type(t)(fresh, go(body))
            return type(t)(t.var, go(t.body))
        return t

    return go(e)


def unfold(e: Expr) -> Expr:
    """One unfolding of a fixpoint: sigma X. f  ->  f[X := sigma X. f]."""
    if not isinstance(e, _BINDERS):
        raise ValueError("unfold expects a fixpoint expression, got %s" % pretty(e))
    return canonical(substitute(e.body, e.var, e))


def is_guarded(e: Expr) -> bool:
    """True if every variable occurrence sits beneath at least one letter
    prefix inside its binder.  Requires a closed expression."""
    _require_closed(e, "is_guarded")

    def go(t, exposed):
        if isinstance(t, Var):
            return t.name not in exposed
        if isinstance(t, Letter):
            return go(t.body, frozenset())
        if isinstance(t, (Plus, Cap)):
            return go(t.left, exposed) and go(t.right, exposed)
        if isinstance(t, _BINDERS):
            return go(t.body, exposed | {t.var})
        return True

    return go(e, frozenset())


# ---------------------------------------------------------------------------
# Total order on expressions (used wherever a deterministic iteration order
# is required: strategy tie-breaks, set printing, colour linearisation).


def expr_sort_key(e: Expr):
    """Key for a total order on expressions: constructor rank, then
    components.  Every tuple has the shape (rank, child-keys, payload) so
    mixed comparisons never hit unlike types."""
    if isinstance(e, Zero):
        return (0, (), "")
    if isinstance(e, Top):
        return (1, (), "")
    if isinstance(e, Var):
        return (2, (), e.name)
    if isinstance(e, Letter):
        return (3, (expr_sort_key(e.body),), e.letter)
    if isinstance(e, Plus):
        return (4, (expr_sort_key(e.left), expr_sort_key(e.right)), "")
    if isinstance(e, Cap):
        return (5, (expr_sort_key(e.left), expr_sort_key(e.right)), "")
    if isinstance(e, Mu):
        return (6, (expr_sort_key(e.body),), e.var)
    return (7, (expr_sort_key(e.body),), e.var)


# ---------------------------------------------------------------------------
# Parsing


_TOKEN = re.compile(r"[().+&]|[A-Za-z][A-Za-z0-9_']*|0|\S")


def _tokenize(text):
    toks = []
    for m in _TOKEN.finditer(text):
        toks.append((m.group(0), m.start()))
    toks.append((None, len(text)))
    return toks


def parse(text: str, alphabet: Alphabet, names=None) -> Expr:
    """Parse the ASCII expression syntax over the given alphabet.

    Grammar (loosest to tightest): sums ``e + f``, intersections ``e & f``,
    letter prefixes ``a e``, then atoms ``0``, ``T``, variables, parentheses
    and the binders ``mu X. e`` / ``nu X. e``, which extend maximally to the
    right.  ``mu``/``nu`` are reserved words.  A lowercase word is looked up
    in `names` (pre-bound expressions such as the corpus entries) first;
    otherwise it must spell one or more letters of the alphabet, read as
    nested prefixes.  The result is canonically renamed.
    """
    names = names or {}
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos][0]

    def err(msg):
        at = toks[pos][1]
        raise ParseError("%s at position %d in %r" % (msg, at, text))

    def advance():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok[0]

    def parse_sum():
        e = parse_cap()
        while peek() == "+":
            advance()
            e = Plus(e, parse_cap())
        return e

    def parse_cap():
        e = parse_prefix()
        while peek() == "&":
            advance()
            e = Cap(e, parse_prefix())
        return e

    def parse_prefix():
        tok = peek()
        if tok is not None and re.fullmatch(r"[a-z][A-Za-z0-9_']*", tok) and tok not in ("mu", "nu") and tok not in names:
            # a run of letters acting as prefixes
            if all(c in alphabet for c in tok):
                advance()
                body = parse_prefix()
                for c in reversed(tok):
                    body = Letter(c, body)
                return body
            err("unknown name or letter outside alphabet: %r" % tok)
        return parse_atom()

    def parse_atom():
        tok = peek()
        if tok is None:
            err("unexpected end of input")
        if tok == "0":
            advance()
            return ZERO
        if tok == "T":
            advance()
            return TOP
        if tok == "(":
            advance()
            e = parse_sum()
            if peek() != ")":
                err("expected ')'")
            advance()
            return e
        if tok in ("mu", "nu"):
            advance()
            var = peek()
            if var is None or not re.fullmatch(r"[A-Z][A-Za-z0-9_']*", var):
                err("expected a variable after %r" % tok)
            advance()
            if peek() != ".":
                err("expected '.' after the bound variable")
            advance()
            body = parse_sum()
            return (Mu if tok == "mu" else Nu)(var, body)
        if re.fullmatch(r"[A-Z][A-Za-z0-9_']*", tok):
            advance()
            return Var(tok)
        if re.fullmatch(r"[a-z][A-Za-z0-9_']*", tok):
            if tok in names:
                advance()
                return names[tok]
            err("unknown name or letter outside alphabet: %r" % tok)
        err("unexpected token %r" % tok)

    e = parse_sum()
    if peek() is not None:
        err("trailing input")
    return canonical(e)


# ---------------------------------------------------------------------------
# Printing


def _display_candidates():
    seed = "XYZWVU"
    i = 0
    while True:
        suffix = "" if i == 0 else str(i)
        for ch in seed:
            yield ch + suffix
        i += 1


def pretty(e: Expr) -> str:
    """Render in the parseable ASCII syntax with minimal parentheses.
    Canonical bound names are displayed as X, Y, Z, ... by binder depth."""
    avoid = set(free_vars(e))

    def collect(t):
        if isinstance(t, Letter):
            collect(t.body)
        elif isinstance(t, (Plus, Cap)):
            collect(t.left)
            collect(t.right)
        elif isinstance(t, _BINDERS):
            avoid.add(t.var)
            collect(t.body)

    collect(e)
    display = []
    gen = _display_candidates()
    while len(display) < 64:
        cand = next(gen)
        if cand not in avoid:
            display.append(cand)

    def name_at(depth):
        return display[depth] if depth < len(display) else "V_%d" % depth

    def go(t, prec, tail, depth, env):
        if isinstance(t, Zero):
            return "0"
        if isinstance(t, Top):
            return "T"
        if isinstance(t, Var):
            return env.get(t.name, t.name)
        if isinstance(t, Letter):
            if prec > 3:
                return "(" + t.letter + " " + go(t.body, 3, True, depth, env) + ")"
            return t.letter + " " + go(t.body, 3, tail, depth, env)
        if isinstance(t, Plus):
            if prec > 1:
                return "(" + go(t.left, 1, False, depth, env) + " + " + go(t.right, 2, True, depth, env) + ")"
            return go(t.left, 1, False, depth, env) + " + " + go(t.right, 2, tail, depth, env)
        if isinstance(t, Cap):
            if prec > 2:
                return "(" + go(t.left, 2, False, depth, env) + " & " + go(t.right, 3, True, depth, env) + ")"
            return go(t.left, 2, False, depth, env) + " & " + go(t.right, 3, tail, depth, env)
        # binders
        shown = name_at(depth) if (t.var.startswith(".") and t.var[1:].isdigit()) else t.var
        inner = dict(env)
        inner[t.var] = shown
        kw = "mu" if isinstance(t, Mu) else "nu"
        body = go(t.body, 0, True, depth + 1, inner)
        s = "%s %s. %s" % (kw, shown, body)
        return s if tail else "(" + s + ")"

    return go(e, 0, True, 0, {})


# ---------------------------------------------------------------------------
# Closure under one-step decomposition


_EDGE_KINDS = ("letter-step", "plus-left", "plus-right", "cap-left", "cap-right", "unfold")


class FLClosure:
    """The least set containing the root and closed under one-step reducts:
    a letter prefix steps to its body, a sum or intersection to either
    component, and a fixpoint to its unfolding.

    `members` is ordered by breadth-first discovery from the root;
    `successors` maps each member to its tagged reducts in that fixed order.
    """

    __slots__ = ("root", "members", "successors", "_index")

    def __init__(self, root, members, successors):
        self.root = root
        self.members = tuple(members)
        self.successors = successors
        self._index = {m: i for i, m in enumerate(self.members)}

    def index(self, e: Expr) -> int:
        return self._index[e]

    def __contains__(self, e):
        return e in self._index

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _fl_steps(e: Expr):
    if isinstance(e, Letter):
        return (("letter-step", e.body),)
    if isinstance(e, Plus):
        return (("plus-left", e.left), ("plus-right", e.right))
    if isinstance(e, Cap):
        return (("cap-left", e.left), ("cap-right", e.right))
    if isinstance(e, _BINDERS):
        return (("unfold", unfold(e)),)
    return ()


@lru_cache(maxsize=None)
def fl_closure(e: Expr) -> FLClosure:
    """Closure of a closed expression under one-step decomposition."""
    root = canonical(e)
    _require_closed(root, "fl_closure")
    order = [root]
    seen = {root}
    successors = {}
    i = 0
    while i < len(order):
        t = order[i]
        i += 1
        steps = _fl_steps(t)
        successors[t] = steps
        for _, u in steps:
            if u not in seen:
                seen.add(u)
                order.append(u)
    return FLClosure(root, order, successors)


# ---------------------------------------------------------------------------
# Orders on closure members


def subformula_leq(f: Expr, g: Expr) -> bool:
    """True if f occurs as a subterm of g, modulo renaming of bound
    variables.  Reflexive."""
    target = canonical(f)

    def walk(t):
        if canonical(t) == target:
            return True
        if isinstance(t, Letter):
            return walk(t.body)
        if isinstance(t, (Plus, Cap)):
            return walk(t.left) or walk(t.right)
        if isinstance(t, _BINDERS):
            return walk(t.body)
        return False

    return walk(canonical(g))


def fl_leq(f: Expr, g: Expr) -> bool:
    """True if g reaches f in zero or more closure steps."""
    return canonical(f) in fl_closure(g)


def fl_lt(f: Expr, g: Expr) -> bool:
    """Strict version of fl_leq: g reaches f but not conversely."""
    return fl_leq(f, g) and not fl_leq(g, f)


def compare_dependency(e: Expr, f: Expr) -> str:
    """Compare in the dependency order: one of 'equal', 'less', 'greater',
    'incomparable'.  e comes strictly before f when e is strictly below f in
    the closure preorder, or the two are mutually reachable and f is a
    subterm of e."""
    ec, fc = canonical(e), canonical(f)
    if ec == fc:
        return "equal"

    def strictly_before(x, y):
        if fl_lt(x, y):
            return True
        return fl_leq(x, y) and fl_leq(y, x) and subformula_leq(y, x)

    if strictly_before(ec, fc):
        return "less"
    if strictly_before(fc, ec):
        return "greater"
    return "incomparable"


# ---------------------------------------------------------------------------
# Complement


def complement(e: Expr, alphabet: Alphabet) -> Expr:
    """Syntactic complement over the given alphabet: dualises 0/T, +/&, and
    mu/nu; a letter prefix ``a e`` becomes ``a e^c`` plus a one-letter branch
    ``b T`` for every other letter b, in alphabet order.  Free variables are
    kept as-is, so open bodies may be complemented.  Raises if e uses a
    letter not in the alphabet."""

    def go(t):
        if isinstance(t, Var):
            return t
        if isinstance(t, Zero):
            return TOP
        if isinstance(t, Top):
            return ZERO
        if isinstance(t, Plus):
            return Cap(go(t.left), go(t.right))
        if isinstance(t, Cap):
            return Plus(go(t.left), go(t.right))
        if isinstance(t, Mu):
            return Nu(t.var, go(t.body))
        if isinstance(t, Nu):
            return Mu(t.var, go(t.body))
        # letter prefix
        if t.letter not in alphabet:
            raise ValueError("letter %r is not in alphabet %s" % (t.letter, alphabet))
        parts = [Letter(t.letter, go(t.body))]
        for b in alphabet:
            if b != t.letter:
                parts.append(Letter(b, TOP))
        out = parts[0]
        for p in parts[1:]:
            out = Plus(out, p)
        return out

    return canonical(go(e))
