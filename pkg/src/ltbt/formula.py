"""Hennessy-Milner formulas.

Conjunctions are kept canonical: flattened, deduplicated, sorted and
unwrapped when singleton, so that syntactic equality is a usable notion of
identity.  ``TOP`` is the empty conjunction and ``BOT`` the empty
disjunction.  Disjunction exists only as sugar and is removed by
:func:`eliminate_disjunction` before classification.

Text grammar (lowest precedence first)::

    phi := conj ("|" conj)*
    conj := unary ("&" unary)*
    unary := "~" unary | "<" act ">" unary | act "." unary | act
           | "T" | "F" | "0" | "ref{" acts "}" | "off{" acts "}"
           | "AND(" [phi ("," phi)*] ")" | "OR(" ... ")" | "(" phi ")"

A bare action ``a`` stands for ``<a>T``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .process import ParseError, Term, step

__all__ = [
    "Formula", "And", "Dia", "Not", "Or", "TOP", "BOT", "conj", "disj", "dia", "neg",
    "parse_formula", "show_formula", "satisfies", "eliminate_disjunction",
    "deadlock", "refusal", "offer", "ready", "items_of", "formula_depth",
    "formula_size", "has_or", "SugarError",
]


class SugarError(ValueError):
    """A sugar atom mentions an action outside the alphabet."""


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return show_formula(self)

    def __lt__(self, other: "Formula") -> bool:
        return sort_key(self) < sort_key(other)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__,) + self._key()))

    def _cached_hash(self) -> int:
        return self._hash


@dataclass(frozen=True, repr=False, eq=True)
class And(Formula):
    items: tuple[Formula, ...]
    _hash: int = field(init=False, compare=False, default=0, repr=False)
    __hash__ = Formula._cached_hash

    def _key(self):
        return self.items

    def __repr__(self) -> str:
        return "TOP" if not self.items else f"And({list(self.items)!r})"


@dataclass(frozen=True, repr=False, eq=True)
class Dia(Formula):
    action: str
    body: Formula
    _hash: int = field(init=False, compare=False, default=0, repr=False)
    __hash__ = Formula._cached_hash

    def _key(self):
        return (self.action, self.body)

    def __repr__(self) -> str:
        return f"Dia({self.action!r}, {self.body!r})"


@dataclass(frozen=True, repr=False, eq=True)
class Not(Formula):
    body: Formula
    _hash: int = field(init=False, compare=False, default=0, repr=False)
    __hash__ = Formula._cached_hash

    def _key(self):
        return (self.body,)

    def __repr__(self) -> str:
        return f"Not({self.body!r})"


@dataclass(frozen=True, repr=False, eq=True)
class Or(Formula):
    items: tuple[Formula, ...]
    _hash: int = field(init=False, compare=False, default=0, repr=False)
    __hash__ = Formula._cached_hash

    def _key(self):
        return self.items

    def __repr__(self) -> str:
        return "BOT" if not self.items else f"Or({list(self.items)!r})"


TOP = And(())
BOT = Or(())


@lru_cache(maxsize=None)
def sort_key(f: Formula) -> str:
    return show_formula(f)


def items_of(f: Formula) -> tuple[Formula, ...]:
    """Conjuncts of ``f`` (``f`` itself unless it is a conjunction)."""
    return f.items if isinstance(f, And) else (f,)


def conj(*fs: Formula | Iterable[Formula]) -> Formula:
    """Canonical conjunction; accepts formulas or iterables of formulas."""
    flat: set[Formula] = set()
    for f in fs:
        group = [f] if isinstance(f, Formula) else list(f)
        for g in group:
            flat.update(items_of(g))
    if len(flat) == 1:
        return next(iter(flat))
    return And(tuple(sorted(flat, key=sort_key)))


def disj(*fs: Formula | Iterable[Formula]) -> Formula:
    flat: set[Formula] = set()
    for f in fs:
        group = [f] if isinstance(f, Formula) else list(f)
        for g in group:
            flat.update(g.items if isinstance(g, Or) else (g,))
    if len(flat) == 1:
        return next(iter(flat))
    return Or(tuple(sorted(flat, key=sort_key)))


def dia(action: str, body: Formula = TOP) -> Formula:
    return Dia(action, body)


def neg(body: Formula) -> Formula:
    return Not(body)


# -- sugar --------------------------------------------------------------------

def refusal(actions: Iterable[str]) -> Formula:
    """``~X``: none of ``actions`` is offered."""
    return conj(Not(Dia(a, TOP)) for a in actions)


def offer(actions: Iterable[str]) -> Formula:
    """All of ``actions`` are offered (partial offer)."""
    return conj(Dia(a, TOP) for a in actions)


def ready(actions: Iterable[str], alphabet: Sequence[str]) -> Formula:
    """The ready set is exactly ``actions``."""
    xs = set(actions)
    return conj(offer(xs), refusal(a for a in alphabet if a not in xs))


def deadlock(alphabet: Sequence[str]) -> Formula:
    """The formula 0, i.e. refusal of the whole alphabet."""
    return refusal(alphabet)


# -- printing -----------------------------------------------------------------

def show_formula(f: Formula) -> str:
    """Print in the parser's grammar; ``parse_formula`` inverts it."""
    if isinstance(f, And):
        if not f.items:
            return "T"
        return "(" + " & ".join(show_formula(g) for g in f.items) + ")"
    if isinstance(f, Or):
        if not f.items:
            return "F"
        return "(" + " | ".join(show_formula(g) for g in f.items) + ")"
    if isinstance(f, Dia):
        return f"<{f.action}>{show_formula(f.body)}"
    return f"~{show_formula(f.body)}"


# -- parsing ------------------------------------------------------------------

_FTOKEN = re.compile(
    r"(?P<kw>AND\(|OR\(|ref\{|off\{)|(?P<act>[a-z][a-zA-Z0-9_]*)|(?P<sym>[TF0~&|().,<>{}])"
)


class _FormulaParser:
    def __init__(self, text: str, alphabet: Sequence[str]):
        self.text = text
        self.alphabet = tuple(alphabet)
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _FTOKEN.match(text, pos)
            if m is None:
                raise ParseError("unknown token", text, pos)
            kind = m.lastgroup
            val = m.group(kind)
            self.tokens.append((val if kind != "act" else "act", val, pos))
            pos = m.end()
        self.tokens.append(("eof", "", len(text)))
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}",
                             self.text, tok[2])
        self.i += 1
        return tok

    def phi(self) -> Formula:
        parts = [self.conj()]
        while self.peek() == "|":
            self.take("|")
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else disj(parts)

    def conj(self) -> Formula:
        parts = [self.unary()]
        while self.peek() == "&":
            self.take("&")
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else conj(parts)

    def arglist(self) -> list[Formula]:
        args = []
        if self.peek() != ")":
            args.append(self.phi())
            while self.peek() == ",":
                self.take(",")
                args.append(self.phi())
        self.take(")")
        return args

    def actset(self) -> list[str]:
        acts = []
        if self.peek() != "}":
            acts.append(self.take("act")[1])
            while self.peek() == ",":
                self.take(",")
                acts.append(self.take("act")[1])
        tok = self.take("}")
        for a in acts:
            if a not in self.alphabet:
                raise SugarError(f"action {a!r} not in alphabet {self.alphabet} "
                                 f"(position {tok[2]})")
        return acts

    def unary(self) -> Formula:
        kind = self.peek()
        if kind == "~":
            self.take("~")
            return Not(self.unary())
        if kind == "<":
            self.take("<")
            a = self.take("act")[1]
            self.take(">")
            return Dia(a, self.unary())
        if kind == "act":
            a = self.take("act")[1]
            if self.peek() == ".":
                self.take(".")
                return Dia(a, self.unary())
            return Dia(a, TOP)
        if kind == "T":
            self.take("T")
            return TOP
        if kind == "F":
            self.take("F")
            return BOT
        if kind == "0":
            self.take("0")
            return deadlock(self.alphabet)
        if kind == "ref{":
            self.take("ref{")
            return refusal(self.actset())
        if kind == "off{":
            self.take("off{")
            return ready(self.actset(), self.alphabet)
        if kind == "AND(":
            self.take("AND(")
            return conj(self.arglist())
        if kind == "OR(":
            self.take("OR(")
            return disj(self.arglist())
        if kind == "(":
            self.take("(")
            f = self.phi()
            self.take(")")
            return f
        tok = self.tokens[self.i]
        raise ParseError(f"unexpected {tok[1] or 'end of input'!r}", self.text, tok[2])


def parse_formula(text: str, alphabet: Sequence[str] = ()) -> Formula:
    """Parse and desugar a formula relative to ``alphabet``.

    ``0``, ``ref{X}`` and ``off{X}`` expand to conjunctions of (negated)
    ``<a>T`` over the alphabet; ``off{X}`` denotes the exact ready set X.
    """
    p = _FormulaParser(text, alphabet)
    f = p.phi()
    p.take("eof")
    return f


# -- semantics ----------------------------------------------------------------

@lru_cache(maxsize=None)
def satisfies(p: Term, f: Formula) -> bool:
    if isinstance(f, And):
        return all(satisfies(p, g) for g in f.items)
    if isinstance(f, Dia):
        return any(a == f.action and satisfies(u, f.body) for a, u in step(p))
    if isinstance(f, Not):
        return not satisfies(p, f.body)
    if isinstance(f, Or):
        return any(satisfies(p, g) for g in f.items)
    raise TypeError(f"not a formula: {f!r}")


def has_or(f: Formula) -> bool:
    if isinstance(f, Or):
        return True
    if isinstance(f, And):
        return any(has_or(g) for g in f.items)
    return has_or(f.body)


def eliminate_disjunction(f: Formula, allow_negated: bool = False) -> set[Formula]:
    """Or-free formulas whose disjunction is equivalent to ``f``.

    Disjunctions float outwards through prefixes and conjunctions.  An Or
    below a negation cannot float; it is rejected unless ``allow_negated``
    (full HML, where De Morgan applies and the Or is rewritten in place).
    """
    if isinstance(f, Or):
        out: set[Formula] = set()
        for g in f.items:
            out |= eliminate_disjunction(g, allow_negated)
        return out
    if isinstance(f, Dia):
        return {Dia(f.action, g) for g in eliminate_disjunction(f.body, allow_negated)}
    if isinstance(f, And):
        choices = [eliminate_disjunction(g, allow_negated) for g in f.items]
        return {conj(combo) for combo in itertools.product(*choices)}
    if has_or(f.body):
        if not allow_negated:
            raise ValueError(f"disjunction under negation cannot be eliminated: {show_formula(f)}")
        return {conj(Not(g) for g in eliminate_disjunction(f.body, True))}
    return {f}


def formula_depth(f: Formula) -> int:
    if isinstance(f, (And, Or)):
        return max((formula_depth(g) for g in f.items), default=0)
    if isinstance(f, Dia):
        return 1 + formula_depth(f.body)
    return formula_depth(f.body)


def formula_size(f: Formula) -> int:
    if isinstance(f, (And, Or)):
        return 1 + sum(formula_size(g) for g in f.items)
    return 1 + formula_size(f.body)
