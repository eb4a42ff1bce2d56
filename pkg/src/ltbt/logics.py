"""Logic families: membership recognizers and bounded generators.

Four kinds of family exist:

* :class:`ConstraintLogic` -- the base formulas of a constraint N
  (``{T}``, ``{T, ~0}``, ``{T, ~0} + {<a>T}``, trace formulas, or the
  nested-simulation formulas of the constraint below);
* :class:`Closure` -- conjunctions of base formulas, of their negations
  (``neg``), or of both (``sym``);
* :class:`Unified` -- the logic of a registered semantics;
* :class:`Classic` -- the textbook logics of the classic spectrum, using
  only their mandatory rules.

Recognizers work on the canonical (flattened) form of a formula.  The
generators are written once against an *algebra* and are run either over
formulas (:func:`enumerate_formulas`) or over truth vectors on a finite LTS
(:func:`bounded_preorder`), where semantic duplicates collapse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .formula import (TOP, And, Dia, Formula, Not, conj, deadlock, formula_depth, formula_size,
                      has_or, items_of, show_formula)
from .linear import Kind
from .process import Lts, Term, alphabet_of, depth
from .semantics import BISIM, DET, LINEAR, SIM, SemanticsId, resolve
from .simulation import Constraint, constraint_by_name, shared_lts

__all__ = [
    "ConstraintLogic", "Closure", "Unified", "Classic", "CLASSIC_NAMES", "family_by_name",
    "logic_membership", "base_member", "closure_member", "enumerate_formulas",
    "formulas_of", "SyntaxAlgebra", "MaskAlgebra", "bounded_preorder", "bounded_witness",
    "default_bounds", "closure_kind_of",
]


@dataclass(frozen=True)
class ConstraintLogic:
    N: Constraint

    def __str__(self) -> str:
        return f"constraint:{self.N}"


@dataclass(frozen=True)
class Closure:
    N: Constraint
    kind: str  # "neg", "sym" or "pos"

    def __post_init__(self):
        if self.kind not in ("neg", "sym", "pos"):
            raise ValueError(f"unknown closure kind {self.kind!r}")

    def __str__(self) -> str:
        return f"closure:{self.N}:{self.kind}"


@dataclass(frozen=True)
class Unified:
    sem: SemanticsId

    def __str__(self) -> str:
        return f"unified:{self.sem}"


CLASSIC_NAMES = ("T", "CT", "F", "R", "FT", "RT", "PW", "S", "CS", "RS", "PF", "2S", "B")


@dataclass(frozen=True)
class Classic:
    name: str

    def __post_init__(self):
        if self.name not in CLASSIC_NAMES:
            raise ValueError(f"no classic logic for {self.name!r}")

    def __str__(self) -> str:
        return f"classic:{self.name}"


Family = ConstraintLogic | Closure | Unified | Classic


def family_by_name(text: str) -> Family:
    """``RT``, ``classic:RT``, ``constraint:I`` or ``closure:I:neg``."""
    parts = text.strip().split(":")
    if len(parts) == 1:
        return Unified(resolve(parts[0]))
    head = parts[0].lower()
    if head == "unified" and len(parts) == 2:
        return Unified(resolve(parts[1]))
    if head == "classic" and len(parts) == 2:
        return Classic(parts[1])
    if head == "constraint" and len(parts) == 2:
        return ConstraintLogic(constraint_by_name(parts[1]))
    if head == "closure" and len(parts) == 3:
        return Closure(constraint_by_name(parts[1]), parts[2])
    raise ValueError(f"unknown logic family {text!r}")


def closure_kind_of(kind: Kind) -> str:
    if kind in (Kind.LSUP, Kind.LFSUP):
        return "neg"
    if kind in (Kind.LSUB, Kind.LFSUB):
        return "pos"
    return "sym"


# -- recognizers -------------------------------------------------------------

BOTTOM = Not(TOP)


@lru_cache(maxsize=None)
def _notzero(alphabet: tuple) -> Formula:
    return Not(deadlock(alphabet))


@lru_cache(maxsize=None)
def _trace_member(f: Formula, alphabet: tuple) -> bool:
    if f == TOP or f == BOTTOM or f == _notzero(alphabet):
        return True
    if isinstance(f, Dia):
        return _trace_member(f.body, alphabet)
    if not isinstance(f, And):
        return False
    rest = [g for g in items_of(f) if g != BOTTOM]
    if not rest:
        return True
    return len(rest) == 1 and not isinstance(rest[0], And) and _trace_member(rest[0], alphabet)


@lru_cache(maxsize=None)
def base_member(N: Constraint, f: Formula, alphabet: tuple) -> bool:
    """Membership in the base formulas of N."""
    if f == TOP:
        return True
    if N.kind == "U":
        return False
    if f == _notzero(alphabet):
        return True
    if N.kind == "C":
        return False
    if N.kind == "I":
        return isinstance(f, Dia) and f.body == TOP
    if N.kind == "T":
        return _trace_member(f, alphabet)
    return _ns_member(N.lower, f, alphabet)


@lru_cache(maxsize=None)
def _ns_member(N: Constraint, f: Formula, alphabet: tuple) -> bool:
    if base_member(N, f, alphabet) or f == _notzero(alphabet):
        return True
    if isinstance(f, Not):
        return base_member(N, f.body, alphabet)
    if isinstance(f, Dia):
        return _ns_member(N, f.body, alphabet)
    if isinstance(f, And):
        return all(_ns_member(N, g, alphabet) for g in f.items)
    return False


def _closure_item(N: Constraint, kind: str, g: Formula, alphabet: tuple) -> bool:
    if kind != "neg" and base_member(N, g, alphabet):
        return True
    return kind != "pos" and isinstance(g, Not) and base_member(N, g.body, alphabet)


def closure_member(N: Constraint, kind: str, f: Formula, alphabet: tuple) -> bool:
    return all(_closure_item(N, kind, g, alphabet) for g in items_of(f))


@lru_cache(maxsize=None)
def _linear_member(N: Constraint, kind: Kind, f: Formula, alphabet: tuple) -> bool:
    if kind is Kind.LSUP_AND_F:
        return _linear_member(N, Kind.LSUP, f, alphabet) or _linear_member(N, Kind.LF, f, alphabet)
    if kind is Kind.LSUP_OR_F:
        return _linear_member(N, Kind.LSUP, f, alphabet) and _linear_member(N, Kind.LF, f, alphabet)
    ck = closure_kind_of(kind)
    if isinstance(f, Dia) and _linear_member(N, kind, f.body, alphabet):
        return True
    if kind.final_only:
        return closure_member(N, ck, f, alphabet)
    rest = [g for g in items_of(f) if not _closure_item(N, ck, g, alphabet)]
    if not rest:
        return True
    return (len(rest) == 1 and isinstance(rest[0], Dia)
            and _linear_member(N, kind, rest[0].body, alphabet))


@lru_cache(maxsize=None)
def _det_member(N: Constraint, f: Formula, alphabet: tuple) -> bool:
    rest = [g for g in items_of(f) if not _closure_item(N, "sym", g, alphabet)]
    acts = [g.action for g in rest if isinstance(g, Dia)]
    if len(acts) != len(rest) or len(set(acts)) != len(acts):
        return False
    return all(_det_member(N, g.body, alphabet) for g in rest)


def _unified_member(sem: SemanticsId, f: Formula, alphabet: tuple) -> bool:
    if sem.flavor == BISIM:
        return True
    if sem.flavor == SIM:
        return _ns_member(sem.constraint, f, alphabet)
    if sem.flavor == DET:
        return _det_member(sem.constraint, f, alphabet)
    return _linear_member(sem.constraint, sem.kind, f, alphabet)


# classic logics, mandatory rules only

def _is_offer(g: Formula) -> bool:
    return isinstance(g, Dia) and g.body == TOP


def _is_refuse(g: Formula) -> bool:
    return isinstance(g, Not) and _is_offer(g.body)


def _atom_action(g: Formula) -> str:
    return g.action if isinstance(g, Dia) else g.body.action


def _is_ready(f: Formula, alphabet: tuple) -> bool:
    """``f`` is exactly the ready-set formula of some X."""
    items = items_of(f)
    if not all(_is_offer(g) or _is_refuse(g) for g in items):
        return False
    acts = [_atom_action(g) for g in items]
    return sorted(acts) == list(alphabet)


def _union_of_readies(items: Sequence[Formula], alphabet: tuple) -> bool:
    """``items`` is a nonempty union of ready-set formulas (or empty)."""
    if not items:
        return True
    if not all(_is_offer(g) or _is_refuse(g) for g in items):
        return False
    seen = {_atom_action(g) for g in items}
    return seen >= set(alphabet) and seen <= set(alphabet)


@lru_cache(maxsize=None)
def _classic_member(name: str, f: Formula, alphabet: tuple) -> bool:
    if name == "B":
        return True
    rec = lambda g: _classic_member(name, g, alphabet)  # noqa: E731
    cont = lambda g: isinstance(g, Dia) and rec(g.body)  # noqa: E731
    if cont(f):
        return True
    items = items_of(f)
    if name == "T":
        return f == TOP
    if name == "CT":
        return f == TOP or f == deadlock(alphabet)
    if name == "F":
        return all(_is_refuse(g) for g in items)
    if name == "R":
        return f == TOP or _is_ready(f, alphabet)
    if name == "FT":
        rest = [g for g in items if not _is_refuse(g)]
        return len(rest) <= 1 and all(cont(g) for g in rest)
    if name == "RT":
        if f == TOP:
            return True
        if _union_of_readies(items, alphabet):
            return True
        # one continuation, the other conjuncts forming ready-set formulas
        for d in items:
            if cont(d):
                left = [g for g in items if g != d]
                if left and (_union_of_readies(left, alphabet)
                             or _union_of_readies(items, alphabet)):
                    return True
        return False
    if name == "PW":
        if _is_ready(f, alphabet):
            return True
        acts = [g.action for g in items if isinstance(g, Dia)]
        return len(acts) == len(items) and len(set(acts)) == len(acts) and all(cont(g) for g in items)
    if name == "S":
        return all(cont(g) for g in items)
    if name == "CS":
        negs = {g for g in items if isinstance(g, Not)}
        if negs and negs != set(items_of(deadlock(alphabet))):
            return False
        return all(isinstance(g, Not) or cont(g) for g in items)
    if name == "RS":
        negs = [g for g in items if isinstance(g, Not)]
        if not all(_is_refuse(g) for g in negs):
            return False
        atoms = [g for g in items if _is_offer(g) or _is_refuse(g)]
        if negs and not _union_of_readies(atoms, alphabet):
            return False
        return all(isinstance(g, Not) or cont(g) for g in items)
    if name == "PF":
        trace = lambda g: _classic_member("T", g, alphabet)  # noqa: E731
        return all(trace(g.body) if isinstance(g, Not) else trace(g) for g in items)
    if name == "2S":
        return all(_classic_member("S", g.body, alphabet) if isinstance(g, Not) else cont(g)
                   for g in items)
    raise AssertionError(name)


def logic_membership(f: Formula, family: Family, alphabet: Iterable[str]) -> bool:
    """Whether ``f`` is generated by the rules of ``family``.

    Disjunctions must be eliminated first, except in full HML.
    """
    alphabet = tuple(sorted(set(alphabet)))
    full = (isinstance(family, Unified) and family.sem.flavor == BISIM) or family == Classic("B")
    if full:
        return True
    if has_or(f):
        raise ValueError("eliminate disjunctions before classifying a formula")
    if isinstance(family, ConstraintLogic):
        return base_member(family.N, f, alphabet)
    if isinstance(family, Closure):
        return closure_member(family.N, family.kind, f, alphabet)
    if isinstance(family, Unified):
        return _unified_member(family.sem, f, alphabet)
    if isinstance(family, Classic):
        return _classic_member(family.name, f, alphabet)
    raise ValueError(f"unknown logic family {family!r}")


# -- algebras ------------------------------------------------------------------

class SyntaxAlgebra:
    """Values are formulas; ``level`` arguments are ignored."""

    def top(self, level: int):
        return TOP

    def dia(self, level: int, a: str, x):
        return Dia(a, x)

    def neg(self, level: int, x):
        return Not(x)

    def conj(self, level: int, xs):
        return conj(list(xs))


class MaskAlgebra:
    """Values are truth vectors (bitmasks over LTS states).

    A value at ``level`` j only records truth at the states reachable from
    the roots in exactly j steps, which is where a formula nested under j
    prefixes is evaluated.
    """

    def __init__(self, lts: Lts, roots: Sequence[int], levels: int):
        self.lts = lts
        self.levels = [0] * (levels + 1)
        frontier = set(roots)
        for j in range(levels + 1):
            self.levels[j] = sum(1 << i for i in frontier)
            frontier = {t for i in frontier for _, t in lts.succ[i]}
        self.succ: list[dict[str, int]] = []
        for i in range(len(lts)):
            d: dict[str, int] = {}
            for a, t in lts.succ[i]:
                d[a] = d.get(a, 0) | (1 << t)
            self.succ.append(d)

    def _states(self, level: int) -> Iterator[int]:
        m = self.levels[level]
        i = 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def top(self, level: int) -> int:
        return self.levels[level]

    def dia(self, level: int, a: str, x: int) -> int:
        out = 0
        for i in self._states(level):
            if self.succ[i].get(a, 0) & x:
                out |= 1 << i
        return out

    def neg(self, level: int, x: int) -> int:
        return self.levels[level] & ~x

    def conj(self, level: int, xs) -> int:
        out = self.levels[level]
        for x in xs:
            out &= x
        return out


# -- generators ----------------------------------------------------------------

class _Gen:
    """Bounded generation of a family's formulas at each nesting level."""

    def __init__(self, alg, alphabet: tuple, depth: int, width: int):
        self.alg = alg
        self.alphabet = alphabet
        self.depth = depth
        self.width = width
        self.memo: dict = {}

    def rem(self, j: int) -> int:
        return self.depth - j

    def cached(self, key, fn):
        if key not in self.memo:
            self.memo[key] = frozenset(fn())
        return self.memo[key]

    # helpers
    def conjs(self, j: int, atoms: Iterable, w: int) -> set:
        atoms = list(set(atoms))
        out = {self.alg.top(j)}
        frontier = set(out)
        for _ in range(w):
            new = {self.alg.conj(j, (m, a)) for m in frontier for a in atoms} - out
            if not new:
                break
            out |= new
            frontier = new
        return out

    def dias(self, j: int, inner) -> set:
        if self.rem(j) < 1:
            return set()
        body = inner(j + 1)
        return {self.alg.dia(j, a, x) for a in self.alphabet for x in body}

    def offer(self, j: int, a: str):
        return self.alg.dia(j, a, self.alg.top(j + 1))

    def zero(self, j: int):
        return self.alg.conj(j, [self.alg.neg(j, self.offer(j, a)) for a in self.alphabet])

    def notzero(self, j: int) -> set:
        return {self.alg.neg(j, self.zero(j))} if self.rem(j) >= 1 else set()

    def refusals(self, j: int) -> set:
        if self.rem(j) < 1:
            return {self.alg.top(j)}
        offs = {a: self.offer(j, a) for a in self.alphabet}
        return {self.alg.conj(j, [self.alg.neg(j, offs[a]) for a in xs])
                for r in range(len(self.alphabet) + 1)
                for xs in itertools.combinations(self.alphabet, r)}

    def readies(self, j: int) -> set:
        if self.rem(j) < 1:
            return {self.alg.top(j)} if not self.alphabet else set()
        offs = {a: self.offer(j, a) for a in self.alphabet}
        out = set()
        for r in range(len(self.alphabet) + 1):
            for xs in itertools.combinations(self.alphabet, r):
                out.add(self.alg.conj(j, [offs[a] if a in xs else self.alg.neg(j, offs[a])
                                          for a in self.alphabet]))
        return out

    # constraint layer
    def base(self, N: Constraint, j: int) -> frozenset:
        def go():
            out = {self.alg.top(j)}
            if N.kind == "U":
                return out
            out |= self.notzero(j)
            if N.kind == "C":
                return out
            if N.kind == "I":
                if self.rem(j) >= 1:
                    out |= {self.offer(j, a) for a in self.alphabet}
                return out
            if N.kind == "T":
                return self.traces(j)
            return self.ns(N.lower, j)
        return self.cached(("base", N, j), go)

    def traces(self, j: int) -> frozenset:
        def go():
            bot = self.alg.neg(j, self.alg.top(j))
            ends = self.notzero(j) | self.dias(j, self.traces)
            return {self.alg.top(j), bot} | ends | {self.alg.conj(j, (bot, x)) for x in ends}
        return self.cached(("traces", j), go)

    def ns(self, N: Constraint, j: int) -> frozenset:
        def go():
            base = self.base(N, j)
            atoms = set(base) | {self.alg.neg(j, x) for x in base} | self.notzero(j)
            atoms |= self.dias(j, lambda k: self.ns(N, k))
            return self.conjs(j, atoms, self.width)
        return self.cached(("ns", N, j), go)

    def closure(self, N: Constraint, kind: str, j: int, w: int) -> frozenset:
        def go():
            base = self.base(N, j)
            items = set()
            if kind != "neg":
                items |= base
            if kind != "pos":
                items |= {self.alg.neg(j, x) for x in base}
            return self.conjs(j, items, w)
        return self.cached(("closure", N, kind, j, w), go)

    def linear(self, N: Constraint, kind: Kind, j: int) -> frozenset:
        def go():
            if kind is Kind.LSUP_AND_F:
                return self.linear(N, Kind.LSUP, j) | self.linear(N, Kind.LF, j)
            if kind is Kind.LSUP_OR_F:
                return self.meet(N, j)
            ck = closure_kind_of(kind)
            rec = self.dias(j, lambda k: self.linear(N, kind, k))
            out = set(self.closure(N, ck, j, self.width)) | rec
            if not kind.final_only:
                out |= {self.alg.conj(j, (s, x))
                        for s in self.closure(N, ck, j, self.width - 1) for x in rec}
            return out
        return self.cached(("linear", N, kind, j), go)

    def meet(self, N: Constraint, j: int) -> frozenset:
        if N.kind not in ("U", "C", "I"):
            raise ValueError(f"meet logic generation is not available for constraint {N}")

        def go():
            out = set(self.closure(N, "neg", j, self.width))
            if N.kind == "I" and self.rem(j) >= 1:
                out |= {self.alg.conj(j, (s, self.offer(j, a)))
                        for s in self.closure(N, "neg", j, self.width - 1) for a in self.alphabet}
            return out | self.dias(j, lambda k: self.meet(N, k))
        return self.cached(("meet", N, j), go)

    def det(self, N: Constraint, j: int) -> frozenset:
        def go():
            out = set()
            body = self.det(N, j + 1) if self.rem(j) >= 1 else frozenset()
            acts = self.alphabet if self.rem(j) >= 1 else ()
            for r in range(min(len(acts), self.width) + 1):
                for xs in itertools.combinations(acts, r):
                    branches = {self.alg.top(j)}
                    for a in xs:
                        branches = {self.alg.conj(j, (b, self.alg.dia(j, a, x)))
                                    for b in branches for x in body}
                    sigma = self.closure(N, "sym", j, self.width - r)
                    out |= {self.alg.conj(j, (s, b)) for s in sigma for b in branches}
            return out
        return self.cached(("det", N, j), go)

    def full(self, j: int) -> frozenset:
        def go():
            prefixed = self.dias(j, self.full)
            lits = prefixed | {self.alg.neg(j, x) for x in prefixed}
            conjs = self.conjs(j, lits, self.width)
            return conjs | {self.alg.neg(j, x) for x in conjs}
        return self.cached(("full", j), go)

    # classic logics
    def classic(self, name: str, j: int) -> frozenset:
        def go():
            rec = lambda: self.dias(j, lambda k: self.classic(name, k))  # noqa: E731
            top = self.alg.top(j)
            if name == "T":
                return {top} | rec()
            if name == "CT":
                return {top} | ({self.zero(j)} if self.rem(j) >= 1 else set()) | rec()
            if name == "F":
                return self.refusals(j) | rec()
            if name == "R":
                return {top} | self.readies(j) | rec()
            if name == "FT":
                tails = {top} | rec()
                return {self.alg.conj(j, (r, x)) for r in self.refusals(j) for x in tails}
            if name == "RT":
                tails = {top} | rec()
                return tails | {self.alg.conj(j, (r, x)) for r in self.readies(j) for x in tails}
            if name == "PW":
                out = set(self.readies(j))
                body = self.classic(name, j + 1) if self.rem(j) >= 1 else frozenset()
                acts = self.alphabet if self.rem(j) >= 1 else ()
                for r in range(len(acts) + 1):
                    for xs in itertools.combinations(acts, r):
                        branches = {top}
                        for a in xs:
                            branches = {self.alg.conj(j, (b, self.alg.dia(j, a, x)))
                                        for b in branches for x in body}
                        out |= branches
                return out
            if name == "S":
                return self.conjs(j, rec(), self.width)
            if name == "CS":
                extra = {self.zero(j)} if self.rem(j) >= 1 else set()
                return self.conjs(j, rec() | extra, self.width)
            if name == "RS":
                return self.conjs(j, rec() | self.readies(j), self.width)
            if name == "PF":
                tr = self.classic("T", j)
                return rec() | self.conjs(j, set(tr) | {self.alg.neg(j, x) for x in tr}, self.width)
            if name == "2S":
                sim = self.classic("S", j)
                return self.conjs(j, rec() | {self.alg.neg(j, x) for x in sim}, self.width)
            if name == "B":
                return self.full(j)
            raise AssertionError(name)
        return self.cached(("classic", name, j), go)

    def family(self, family: Family, j: int = 0) -> frozenset:
        if isinstance(family, ConstraintLogic):
            return self.base(family.N, j)
        if isinstance(family, Closure):
            return self.closure(family.N, family.kind, j, self.width)
        if isinstance(family, Classic):
            return self.classic(family.name, j)
        sem = family.sem
        if sem.flavor == BISIM:
            return self.full(j)
        if sem.flavor == SIM:
            return self.ns(sem.constraint, j)
        if sem.flavor == DET:
            return self.det(sem.constraint, j)
        return self.linear(sem.constraint, sem.kind, j)


def formulas_of(family: Family, alphabet: Sequence[str], depth: int, width: int, algebra) -> frozenset:
    """All values the family's rules produce within the bounds, in ``algebra``."""
    gen = _Gen(algebra, tuple(sorted(set(alphabet))), depth, width)
    return gen.family(family)


def enumerate_formulas(family: Family, alphabet: Sequence[str], depth_bound: int,
                       width_bound: int) -> Iterator[Formula]:
    """Family members of prefix depth <= ``depth_bound`` built with conjunctions
    of at most ``width_bound`` generated parts, smallest first."""
    alphabet = tuple(sorted(set(alphabet)))
    found = formulas_of(family, alphabet, depth_bound, width_bound, SyntaxAlgebra())
    keep = [f for f in found
            if formula_depth(f) <= depth_bound and logic_membership(f, family, alphabet)]
    keep.sort(key=lambda f: (formula_depth(f), formula_size(f), show_formula(f)))
    return iter(keep)


def default_bounds(p: Term, q: Term, alphabet: Sequence[str]) -> tuple[int, int]:
    """Depth ``max depth + 1`` and width ``2 |Act|``."""
    return max(depth(p), depth(q)) + 1, 2 * len(alphabet)


def _masks(family: Family, p: Term, q: Term, alphabet, depth_bound, width_bound):
    alphabet = tuple(sorted(set(alphabet))) if alphabet is not None else alphabet_of([p, q])
    d0, w0 = default_bounds(p, q, alphabet)
    d = d0 if depth_bound is None else depth_bound
    w = w0 if width_bound is None else width_bound
    lts = shared_lts(p, q, alphabet=alphabet)
    alg = MaskAlgebra(lts, [lts.state(p), lts.state(q)], d)
    return formulas_of(family, alphabet, d, w, alg), lts.state(p), lts.state(q)


def bounded_preorder(family: Family | SemanticsId, p: Term, q: Term, alphabet=None,
                     depth_bound: int | None = None, width_bound: int | None = None) -> bool:
    """Every bounded family formula true of ``p`` is true of ``q``.

    Formulas are evaluated as truth vectors, so the check is exhaustive
    over the bounded family while only distinct meanings are kept.
    """
    if isinstance(family, SemanticsId):
        family = Unified(family)
    masks, i, j = _masks(family, p, q, alphabet, depth_bound, width_bound)
    return not any(m >> i & 1 and not m >> j & 1 for m in masks)


def bounded_witness(family: Family | SemanticsId, p: Term, q: Term, alphabet=None,
                    depth_bound: int | None = None, width_bound: int | None = None) -> bool:
    """Negation of :func:`bounded_preorder` (some bounded formula separates)."""
    return not bounded_preorder(family, p, q, alphabet, depth_bound, width_bound)
