"""Terms, identities and quasi-identities over the difference operation.

Grammar: variables are identifiers, 0 is the constant, "-" is infix and
left-associative (x-y-z parses as (x-y)-z, matching the usual juxtaposition
convention), parentheses group.  Sentences combine terms with "=", "<="
(sugar: s <= t is stored as s-t = 0), "&" between premises, and "=>" before
the conclusion of a quasi-identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Union

from bckbench.core import BckError, FiniteBckAlgebra, RangeError


class ParseError(BckError, ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (column {position})")


class UnboundVariable(BckError):
    """A term was evaluated under an environment missing one of its variables."""


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


ZERO = Zero()


@dataclass(frozen=True)
class Diff:
    left: "Term"
    right: "Term"

    def __str__(self):
        right = str(self.right)
        if isinstance(self.right, Diff):
            right = f"({right})"
        return f"{self.left}-{right}"


Term = Union[Var, Zero, Diff]


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class QuasiIdentity:
    premises: tuple
    conclusion: Identity

    def __str__(self):
        return " & ".join(str(p) for p in self.premises) + f" => {self.conclusion}"


Sentence = Union[Identity, QuasiIdentity]

_TOKEN = re.compile(r"=>|<=|[()&=-]|0|[A-Za-z_][A-Za-z0-9_]*")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
            self.toks.append((m.group(), pos + 1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def pos(self):
        if self.i < len(self.toks):
            return self.toks[self.i][1]
        return len(self.text) + 1

    def expect(self, want):
        if self.peek() != want:
            raise ParseError(f"expected {want!r}", self.pos())
        return self.take()

    def primary(self):
        tok = self.peek()
        if tok == "0":
            self.take()
            return ZERO
        if tok == "(":
            self.take()
            t = self.term()
            self.expect(")")
            return t
        if tok is not None and tok[0].isidentifier():
            self.take()
            return Var(tok)
        raise ParseError("expected a term", self.pos())

    def term(self):
        node = self.primary()
        while self.peek() == "-":
            self.take()
            node = Diff(node, self.primary())
        return node

    def relation(self, lhs):
        op, pos = self.take()
        rhs = self.term()
        if op == "=":
            return Identity(lhs, rhs)
        if op == "<=":
            return Identity(Diff(lhs, rhs), ZERO)
        raise ParseError("expected '=' or '<='", pos)

    def atom(self):
        return self.relation(self.term())

    def sentence_or_term(self):
        lhs = self.term()
        if self.peek() not in ("=", "<="):
            return lhs
        first = self.relation(lhs)
        atoms = [first]
        while self.peek() == "&":
            self.take()
            atoms.append(self.atom())
        if self.peek() == "=>":
            self.take()
            return QuasiIdentity(tuple(atoms), self.atom())
        if len(atoms) > 1:
            raise ParseError("'&' joins premises and needs a '=>' conclusion", self.pos())
        return first

    def done(self):
        if self.i < len(self.toks):
            raise ParseError(f"trailing input {self.peek()!r}", self.pos())


def parse(text: str):
    """Parse a term, identity, inequality or quasi-identity.

    Printing the result with str() and re-parsing yields an equal AST.
    Raises ParseError with a 1-based column position.
    """
    p = _Parser(text)
    node = p.sentence_or_term()
    p.done()
    return node


def variables(node) -> tuple:
    """Variable names of a term or sentence, sorted."""
    names = set()

    def walk(t):
        if isinstance(t, Var):
            names.add(t.name)
        elif isinstance(t, Diff):
            walk(t.left)
            walk(t.right)
        elif isinstance(t, Identity):
            walk(t.lhs)
            walk(t.rhs)
        elif isinstance(t, QuasiIdentity):
            for p in t.premises:
                walk(p)
            walk(t.conclusion)

    walk(node)
    return tuple(sorted(names))


def evaluate(term, algebra: FiniteBckAlgebra, env) -> int:
    """Evaluate a term to an element index under env (variable -> element)."""
    if isinstance(term, Zero):
        return 0
    if isinstance(term, Var):
        try:
            v = env[term.name]
        except KeyError:
            raise UnboundVariable(term.name) from None
        if not 0 <= v < algebra.size:
            raise RangeError(f"environment value {v} outside 0..{algebra.size - 1}")
        return v
    return algebra.table[evaluate(term.left, algebra, env)][
        evaluate(term.right, algebra, env)
    ]


def _satisfied(sentence, algebra, env):
    if isinstance(sentence, Identity):
        return evaluate(sentence.lhs, algebra, env) == evaluate(
            sentence.rhs, algebra, env
        )
    for premise in sentence.premises:
        if not _satisfied(premise, algebra, env):
            return True
    return _satisfied(sentence.conclusion, algebra, env)


class Verdict(NamedTuple):
    holds: bool
    counterexample: dict | None

    def __bool__(self):
        return self.holds


def holds(sentence, algebra: FiniteBckAlgebra) -> Verdict:
    """Exhaustively check a sentence over all assignments.

    Assignments run in lexicographic element order with variables sorted by
    name, so the returned counterexample is the first one.
    """
    names = variables(sentence)
    for values in product(range(algebra.size), repeat=len(names)):
        env = dict(zip(names, values))
        if not _satisfied(sentence, algebra, env):
            return Verdict(False, env)
    return Verdict(True, None)


def iter_power(algebra: FiniteBckAlgebra, a: int, b: int, k: int) -> int:
    """The k-fold iterated difference (..((a-b)-b)..)-b; k = 0 gives a."""
    table = algebra.table
    cur = a
    for _ in range(k):
        cur = table[cur][b]
    return cur
