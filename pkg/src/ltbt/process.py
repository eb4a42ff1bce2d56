"""BCCSP process terms, their operational semantics and finite LTSs.

Terms are immutable and hashable, so structurally equal terms are the same
LTS state.  Concrete syntax::

    term   := sum
    sum    := prefix ("+" prefix)*
    prefix := action "." prefix | action | "0" | "(" sum ")"
    action := [a-z][a-zA-Z0-9_]*

``a`` abbreviates ``a.0`` and ``+`` associates to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Term", "Nil", "Prefix", "Choice", "NIL", "ParseError",
    "parse_term", "show", "step", "initials", "traces", "depth", "size",
    "actions_of", "alphabet_of", "summands", "Lts", "build_lts",
]


class ParseError(ValueError):
    """Syntax error in process or formula text, carrying the offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class Term:
    __slots__ = ()

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True, repr=False)
class Nil(Term):
    def __repr__(self) -> str:
        return "Nil()"


@dataclass(frozen=True, repr=False)
class Prefix(Term):
    action: str
    body: Term
    _hash: int = field(init=False, compare=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("P", self.action, self.body)))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Prefix({self.action!r}, {self.body!r})"


@dataclass(frozen=True, repr=False)
class Choice(Term):
    left: Term
    right: Term
    _hash: int = field(init=False, compare=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("C", self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Choice({self.left!r}, {self.right!r})"


NIL = Nil()

_TOKEN = re.compile(r"\s*(?:([a-z][a-zA-Z0-9_]*)|(0)|([.+()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unknown token", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("act", m.group(1), start))
        elif m.group(2):
            tokens.append(("nil", "0", start))
        else:
            tokens.append((m.group(3), m.group(3), start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = tok[1] or "end of input"
            raise ParseError(f"expected {kind!r}, found {what!r}", self.text, tok[2])
        self.i += 1
        return tok

    def sum(self) -> Term:
        t = self.prefix()
        while self.peek() == "+":
            self.take("+")
            t = Choice(t, self.prefix())
        return t

    def prefix(self) -> Term:
        kind = self.peek()
        if kind == "act":
            a = self.take("act")[1]
            if self.peek() == ".":
                self.take(".")
                return Prefix(a, self.prefix())
            return Prefix(a, NIL)
        if kind == "nil":
            self.take("nil")
            return NIL
        if kind == "(":
            self.take("(")
            t = self.sum()
            self.take(")")
            return t
        tok = self.tokens[self.i]
        raise ParseError(f"unexpected {tok[1] or 'end of input'!r}", self.text, tok[2])


def parse_term(text: str) -> Term:
    """Parse BCCSP concrete syntax into a term."""
    p = _TermParser(text)
    t = p.sum()
    p.take("eof")
    return t


def show(t: Term) -> str:
    """Print a term so that ``parse_term(show(t)) == t``."""
    if isinstance(t, Nil):
        return "0"
    if isinstance(t, Prefix):
        if isinstance(t.body, Nil):
            return t.action
        if isinstance(t.body, Choice):
            return f"{t.action}.({show(t.body)})"
        return f"{t.action}.{show(t.body)}"
    right = show(t.right)
    if isinstance(t.right, Choice):
        right = f"({right})"
    return f"{show(t.left)} + {right}"


@lru_cache(maxsize=None)
def step(t: Term) -> frozenset[tuple[str, Term]]:
    """All ``(a, t')`` with ``t -a-> t'``."""
    if isinstance(t, Prefix):
        return frozenset({(t.action, t.body)})
    if isinstance(t, Choice):
        return step(t.left) | step(t.right)
    return frozenset()


@lru_cache(maxsize=None)
def initials(t: Term) -> frozenset[str]:
    return frozenset(a for a, _ in step(t))


@lru_cache(maxsize=None)
def traces(t: Term) -> frozenset[tuple[str, ...]]:
    """Prefix-closed trace set, including the empty trace."""
    out = {()}
    for a, u in step(t):
        out.update((a,) + s for s in traces(u))
    return frozenset(out)


@lru_cache(maxsize=None)
def depth(t: Term) -> int:
    """Maximal prefix nesting, i.e. the length of the longest trace."""
    if isinstance(t, Prefix):
        return 1 + depth(t.body)
    if isinstance(t, Choice):
        return max(depth(t.left), depth(t.right))
    return 0


def size(t: Term) -> int:
    """Number of syntax-tree nodes."""
    if isinstance(t, Prefix):
        return 1 + size(t.body)
    if isinstance(t, Choice):
        return 1 + size(t.left) + size(t.right)
    return 1


def summands(t: Term) -> list[Term]:
    if isinstance(t, Choice):
        return summands(t.left) + summands(t.right)
    return [t]


def actions_of(t: Term) -> frozenset[str]:
    if isinstance(t, Prefix):
        return frozenset({t.action}) | actions_of(t.body)
    if isinstance(t, Choice):
        return actions_of(t.left) | actions_of(t.right)
    return frozenset()


def alphabet_of(terms: Iterable[Term], extra: Iterable[str] = ()) -> tuple[str, ...]:
    """Sorted union of the actions occurring in ``terms`` and ``extra``."""
    acts = set(extra)
    for t in terms:
        acts |= actions_of(t)
    return tuple(sorted(acts))


class Lts:
    """Reachable LTS of a list of root terms.

    States are integer ids; ``term_of[i]`` is the term of state ``i`` and
    ``succ[i]`` its sorted outgoing ``(action, target)`` pairs.  Derived
    data (simulation relations, local observations...) is memoised in
    ``cache`` by the modules that compute it.
    """

    def __init__(self, roots: Iterable[Term], alphabet: Iterable[str] = ()):
        roots = list(roots)
        self.index: dict[Term, int] = {}
        self.term_of: list[Term] = []
        stack = list(reversed(roots))
        while stack:
            t = stack.pop()
            if t in self.index:
                continue
            self.index[t] = len(self.term_of)
            self.term_of.append(t)
            for _, u in sorted(step(t), key=lambda x: (x[0], show(x[1]))):
                if u not in self.index:
                    stack.append(u)
        self.succ: list[tuple[tuple[str, int], ...]] = [
            tuple(sorted((a, self.index[u]) for a, u in step(t))) for t in self.term_of
        ]
        self.roots = tuple(self.index[t] for t in roots)
        self.alphabet = alphabet_of(roots, alphabet)
        self.cache: dict = {}

    @property
    def states(self) -> range:
        return range(len(self.term_of))

    @property
    def transitions(self) -> set[tuple[int, str, int]]:
        return {(i, a, j) for i, out in enumerate(self.succ) for a, j in out}

    def __len__(self) -> int:
        return len(self.term_of)

    def successors(self, i: int, a: str) -> list[int]:
        return [j for b, j in self.succ[i] if b == a]

    def initials(self, i: int) -> frozenset[str]:
        return frozenset(a for a, _ in self.succ[i])

    def state(self, t: Term) -> int:
        return self.index[t]


def build_lts(roots: Iterable[Term], alphabet: Iterable[str] = ()) -> Lts:
    return Lts(roots, alphabet)
