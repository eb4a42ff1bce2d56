"""Seeded random terms and pairs of related terms."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .process import NIL, Choice, Prefix, Term, depth, size, summands

__all__ = ["RandomTermSpec", "random_term", "random_terms", "random_pairs", "mutate"]


@dataclass(frozen=True)
class RandomTermSpec:
    seed: int
    max_size: int
    alphabet: tuple[str, ...] = ("a", "b", "c")
    choice_bias: float = 0.4
    max_depth: int | None = None

    def __post_init__(self):
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")
        if not 0 <= self.choice_bias <= 1:
            raise ValueError("choice_bias must lie in [0, 1]")


def _grow(rng: random.Random, budget: int, depth_left: int, spec: RandomTermSpec) -> Term:
    if budget <= 1 or depth_left <= 0 and budget < 3:
        return NIL
    if budget >= 3 and (depth_left <= 0 or rng.random() < spec.choice_bias):
        left = rng.randint(1, budget - 2)
        return Choice(_grow(rng, left, depth_left, spec),
                      _grow(rng, budget - 1 - left, depth_left, spec))
    return Prefix(rng.choice(spec.alphabet), _grow(rng, budget - 1, depth_left - 1, spec))


def _draw(rng: random.Random, spec: RandomTermSpec) -> Term:
    limit = spec.max_depth if spec.max_depth is not None else spec.max_size
    return _grow(rng, rng.randint(1, spec.max_size), limit, spec)


def random_term(spec: RandomTermSpec) -> Term:
    """One term of at most ``spec.max_size`` nodes; a function of ``spec`` alone."""
    return _draw(random.Random(spec.seed), spec)


def random_terms(spec: RandomTermSpec) -> Iterator[Term]:
    """Endless deterministic stream of terms (the first one is ``random_term(spec)``)."""
    rng = random.Random(spec.seed)
    while True:
        yield _draw(rng, spec)


def _sum(parts: list[Term]) -> Term:
    if not parts:
        return NIL
    t = parts[0]
    for u in parts[1:]:
        t = Choice(t, u)
    return t


def _rename(t: Term, old: str, new: str) -> Term:
    if isinstance(t, Prefix):
        return Prefix(new if t.action == old else t.action, _rename(t.body, old, new))
    if isinstance(t, Choice):
        return Choice(_rename(t.left, old, new), _rename(t.right, old, new))
    return t


def _local(rng: random.Random, t: Term, spec: RandomTermSpec) -> Term:
    parts = summands(t)
    op = rng.choice(["distribute", "add", "drop", "duplicate", "rename", "factor"])
    if op == "distribute":
        # a.(x + y) -> a.x + a.y
        cands = [i for i, s in enumerate(parts) if isinstance(s, Prefix) and isinstance(s.body, Choice)]
        if cands:
            i = rng.choice(cands)
            s = parts[i]
            parts[i:i + 1] = [Prefix(s.action, u) for u in summands(s.body)]
            return _sum(parts)
    if op == "factor":
        # a.x + a.y -> a.(x + y)
        by: dict[str, list[int]] = {}
        for i, s in enumerate(parts):
            if isinstance(s, Prefix):
                by.setdefault(s.action, []).append(i)
        groups = [ix for ix in by.values() if len(ix) > 1]
        if groups:
            ix = rng.choice(groups)[:2]
            a = parts[ix[0]].action
            merged = Prefix(a, Choice(parts[ix[0]].body, parts[ix[1]].body))
            rest = [s for k, s in enumerate(parts) if k not in ix]
            return _sum(rest + [merged])
    if op == "add":
        return _sum(parts + [_grow(rng, rng.randint(2, 4), 2, spec)])
    if op == "drop" and len(parts) > 1:
        del parts[rng.randrange(len(parts))]
        return _sum(parts)
    if op == "duplicate":
        s = rng.choice(parts)
        return _sum(parts + [mutate(rng, s, spec) if isinstance(s, Prefix) else s])
    if op == "rename":
        acts = sorted({s.action for s in parts if isinstance(s, Prefix)})
        if acts:
            return _rename(t, rng.choice(acts), rng.choice(spec.alphabet))
    return t


def mutate(rng: random.Random, t: Term, spec: RandomTermSpec) -> Term:
    """Apply one local rewrite at a random position of ``t``."""
    if isinstance(t, Prefix) and rng.random() < 0.5:
        return Prefix(t.action, mutate(rng, t.body, spec))
    if isinstance(t, Choice) and rng.random() < 0.3:
        parts = summands(t)
        i = rng.randrange(len(parts))
        parts[i] = mutate(rng, parts[i], spec)
        return _sum(parts)
    return _local(rng, t, spec)


def random_pairs(seed: int, count: int, max_size: int = 12, alphabet=("a", "b", "c"),
                 max_depth: int = 4, choice_bias: float = 0.4) -> list[tuple[Term, Term]]:
    """``count`` pairs within the size and depth limits.

    About half are independent draws; the rest pair a term with a small
    rewrite of itself, which yields many closely related pairs.
    """
    spec = RandomTermSpec(seed, max_size, tuple(alphabet), choice_bias, max_depth)
    rng = random.Random(seed)
    ok = lambda t: size(t) <= max_size and depth(t) <= max_depth  # noqa: E731
    out: list[tuple[Term, Term]] = []
    while len(out) < count:
        p = _draw(rng, spec)
        if rng.random() < 0.5:
            q = _draw(rng, spec)
        else:
            q = p
            for _ in range(rng.randint(1, 2)):
                q = mutate(rng, q, spec)
            for _ in range(3):
                if q != p:
                    break
                q = mutate(rng, q, spec)
        if ok(p) and ok(q):
            out.append((p, q))
    return out
