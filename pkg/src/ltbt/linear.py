"""Linear general observations and the linear orders built on them.

An lgo of ``p`` is the sequence ``X0 a1 X1 ... an Xn`` read along a path
``p = p0 -a1-> p1 ... -an-> pn`` with ``Xi = L_N(pi)``.  It is stored as a
flat tuple alternating labels and actions.  Sets of lgos are compared with
one of the :class:`Kind` orders; for N = I these give ready traces (L),
failure traces (LSUP), readiness (LF), failures (LFSUP), and the partial
offer, join and meet semantics.

:func:`classic_oracle` computes the textbook observation sets directly on
terms, without going through lgos, for differential testing.
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from .process import Lts, Term, alphabet_of, initials, step, traces
from .simulation import Constraint, local_obs, shared_lts

__all__ = [
    "Kind", "Lgo", "lgo_set", "lgo_preorder", "lgo_below", "lgo_failing",
    "meet_union_form", "classic_oracle", "classic_preorder", "show_lgo", "lgo_json",
    "lgo_labels", "lgo_actions",
]

Lgo = tuple


class Kind(enum.Enum):
    L = "l"
    LSUP = "l⊇"
    LF = "lf"
    LFSUP = "lf⊇"
    LSUB = "l⊆"
    LFSUB = "lf⊆"
    LSUP_AND_F = "l⊇∧f"
    LSUP_OR_F = "l⊇∨f"

    @property
    def needs_sets(self) -> bool:
        return self not in (Kind.L, Kind.LF)

    @property
    def final_only(self) -> bool:
        return self in (Kind.LF, Kind.LFSUP, Kind.LFSUB, Kind.LSUP_OR_F)


def lgo_labels(o: Lgo) -> tuple:
    return o[0::2]


def lgo_actions(o: Lgo) -> tuple:
    return o[1::2]


def _lgos_lts(N: Constraint, lts: Lts) -> list[frozenset]:
    key = ("lgo", N)
    if key in lts.cache:
        return lts.cache[key]
    obs = local_obs(N, lts)
    memo: dict[int, frozenset] = {}

    def go(i: int) -> frozenset:
        if i not in memo:
            out = {(obs[i],)}
            for a, j in lts.succ[i]:
                out.update((obs[i], a) + rest for rest in go(j))
            memo[i] = frozenset(out)
        return memo[i]

    res = [go(i) for i in range(len(lts))]
    lts.cache[key] = res
    return res


def lgo_set(N: Constraint, p: Term, lts: Lts | None = None) -> frozenset:
    """``LGO_N(p)``; ``lts`` must contain ``p`` when given."""
    lts = lts or shared_lts(p)
    return _lgos_lts(N, lts)[lts.state(p)]


def _check_kind(N: Constraint, kind: Kind) -> None:
    if kind.needs_sets and N.kind == "S":
        raise ValueError(f"order {kind.value} needs set-valued observations; {N} has classes")


def _sup(N: Constraint, x, y) -> bool:
    return x >= y if N.set_valued else x == y


def _sub(N: Constraint, x, y) -> bool:
    return x <= y if N.set_valued else x == y


def lgo_below(N: Constraint, kind: Kind, x: Lgo, candidates: Iterable[Lgo]) -> bool:
    """``{x} <= candidates`` under ``kind``.

    ``candidates`` must all carry the same actions as ``x``.  For the
    unit and boolean observations of U and C every comparison is equality.
    """
    xs = lgo_labels(x)
    ys_all = [lgo_labels(y) for y in candidates]
    last = len(xs) - 1
    if kind is Kind.L:
        return any(ys == xs for ys in ys_all)
    if kind is Kind.LF:
        return any(ys[last] == xs[last] for ys in ys_all)
    if kind is Kind.LFSUP:
        return any(_sup(N, xs[last], ys[last]) for ys in ys_all)
    if kind is Kind.LFSUB:
        return any(_sub(N, xs[last], ys[last]) for ys in ys_all)
    if kind is Kind.LSUP:
        return any(all(_sup(N, a, b) for a, b in zip(xs, ys)) for ys in ys_all)
    if kind is Kind.LSUB:
        return any(all(_sub(N, a, b) for a, b in zip(xs, ys)) for ys in ys_all)
    if kind is Kind.LSUP_AND_F:
        return any(all(_sup(N, a, b) for a, b in zip(xs[:last], ys[:last]))
                   and xs[last] == ys[last] for ys in ys_all)
    # meet: some final below X_n, and every element of X_n is covered by one
    finals = [ys[last] for ys in ys_all if _sub(N, ys[last], xs[last])]
    if not finals:
        return False
    if not N.set_valued:
        return True
    return all(any(e in y for y in finals) for e in xs[last])


def meet_union_form(N: Constraint, x: Lgo, candidates: Iterable[Lgo]) -> bool:
    """Union formulation of the meet order: ``X_n`` is the union of a
    nonempty family of matching finals (test oracle for :func:`lgo_below`)."""
    xs = lgo_labels(x)
    finals = [lgo_labels(y)[-1] for y in candidates]
    if not N.set_valued:
        return any(f == xs[-1] for f in finals)
    below = [f for f in finals if f <= xs[-1]]
    return bool(below) and frozenset().union(*below) == xs[-1]


def _by_actions(lgos: Iterable[Lgo]) -> dict[tuple, list[Lgo]]:
    idx: dict[tuple, list[Lgo]] = {}
    for o in lgos:
        idx.setdefault(lgo_actions(o), []).append(o)
    return idx


def lgo_failing(N: Constraint, kind: Kind, p: Term, q: Term, lts: Lts | None = None) -> list[Lgo]:
    """Lgos of ``p`` not matched in ``q``, shortest first."""
    _check_kind(N, kind)
    lts = lts or shared_lts(p, q)
    mine = lgo_set(N, p, lts)
    idx = _by_actions(lgo_set(N, q, lts))
    bad = [x for x in mine if not lgo_below(N, kind, x, idx.get(lgo_actions(x), ()))]
    return sorted(bad, key=lambda o: (len(o), show_lgo(o)))


def lgo_preorder(N: Constraint, kind: Kind, p: Term, q: Term, lts: Lts | None = None) -> bool:
    _check_kind(N, kind)
    lts = lts or shared_lts(p, q)
    idx = _by_actions(lgo_set(N, q, lts))
    return all(lgo_below(N, kind, x, idx.get(lgo_actions(x), ()))
               for x in lgo_set(N, p, lts))


def _show_label(x) -> str:
    if x is None:
        return "."
    if isinstance(x, bool):
        return "dead" if x else "live"
    if isinstance(x, frozenset):
        if all(isinstance(e, tuple) for e in x):
            return "{" + ",".join(sorted("".join(t) or "ε" for t in x)) + "}"
        return "{" + ",".join(sorted(x)) + "}"
    return f"[{x}]"


def show_lgo(o: Lgo) -> str:
    """``{a,b} -a-> {b} -b-> {}`` style rendering."""
    parts = [_show_label(o[0])]
    for i in range(1, len(o), 2):
        parts.append(f"-{o[i]}->")
        parts.append(_show_label(o[i + 1]))
    return " ".join(parts)


def _json_label(x):
    if x is None or isinstance(x, bool):
        return x
    if isinstance(x, frozenset):
        return sorted("".join(t) if isinstance(t, tuple) else t for t in x)
    return str(x)


def lgo_json(o: Lgo) -> list:
    return [_json_label(e) if i % 2 == 0 else e for i, e in enumerate(o)]


# -- textbook observation sets -------------------------------------------------

def _subsets(xs: Sequence[str]) -> list[frozenset]:
    return [frozenset(c) for r in range(len(xs) + 1) for c in itertools.combinations(xs, r)]


@lru_cache(maxsize=None)
def _failures(t: Term, alphabet: tuple) -> frozenset:
    refusable = [a for a in alphabet if a not in initials(t)]
    out = {((), x) for x in _subsets(refusable)}
    for a, u in step(t):
        out.update(((a,) + s, x) for s, x in _failures(u, alphabet))
    return frozenset(out)


@lru_cache(maxsize=None)
def _readies(t: Term) -> frozenset:
    out = {((), initials(t))}
    for a, u in step(t):
        out.update(((a,) + s, x) for s, x in _readies(u))
    return frozenset(out)


@lru_cache(maxsize=None)
def _failure_traces(t: Term, alphabet: tuple) -> frozenset:
    refusable = [a for a in alphabet if a not in initials(t)]
    here = _subsets(refusable)
    out = {(x,) for x in here}
    for a, u in step(t):
        for rest in _failure_traces(u, alphabet):
            out.update((x, a) + rest for x in here)
    return frozenset(out)


@lru_cache(maxsize=None)
def _ready_traces(t: Term) -> frozenset:
    out = {(initials(t),)}
    for a, u in step(t):
        out.update((initials(t), a) + rest for rest in _ready_traces(u))
    return frozenset(out)


@lru_cache(maxsize=None)
def _complete_traces(t: Term) -> frozenset:
    out = set() if step(t) else {()}
    for a, u in step(t):
        out.update((a,) + s for s in _complete_traces(u))
    return frozenset(out)


@lru_cache(maxsize=None)
def _possible_futures(t: Term) -> frozenset:
    out = {((), traces(t))}
    for a, u in step(t):
        out.update(((a,) + s, x) for s, x in _possible_futures(u))
    return frozenset(out)


@lru_cache(maxsize=None)
def _revivals(t: Term, alphabet: tuple) -> frozenset:
    init = initials(t)
    refusable = [a for a in alphabet if a not in init]
    out = set()
    for x in _subsets(refusable):
        out.add(((), x, None))
        out.update(((), x, a) for a in init)
    for a, u in step(t):
        out.update(((a,) + s, x, b) for s, x, b in _revivals(u, alphabet))
    return frozenset(out)


CLASSIC_KINDS = ("traces", "complete_traces", "failures", "readies", "failure_traces",
                 "ready_traces", "possible_futures", "revivals")


def classic_oracle(kind: str, p: Term, alphabet: Sequence[str] | None = None) -> frozenset:
    """Textbook observation set of ``p``.

    ``failures``: ``(trace, refused set)``; ``readies``: ``(trace, ready
    set)``; ``failure_traces``/``ready_traces``: alternating tuples like
    lgos; ``possible_futures``: ``(trace, trace set)``; ``revivals``:
    ``(trace, refused set, offered action or None)``.
    The alphabet defaults to the actions of ``p``.
    """
    alphabet = tuple(sorted(alphabet)) if alphabet is not None else alphabet_of([p])
    if kind == "traces":
        return traces(p)
    if kind == "complete_traces":
        return _complete_traces(p)
    if kind == "failures":
        return _failures(p, alphabet)
    if kind == "readies":
        return _readies(p)
    if kind == "failure_traces":
        return _failure_traces(p, alphabet)
    if kind == "ready_traces":
        return _ready_traces(p)
    if kind == "possible_futures":
        return _possible_futures(p)
    if kind == "revivals":
        return _revivals(p, alphabet)
    raise ValueError(f"unknown observation kind {kind!r}")


def classic_preorder(kind: str, p: Term, q: Term, alphabet: Sequence[str] | None = None) -> bool:
    """Inclusion of textbook observation sets; CT also requires trace inclusion."""
    alphabet = alphabet if alphabet is not None else alphabet_of([p, q])
    incl = classic_oracle(kind, p, alphabet) <= classic_oracle(kind, q, alphabet)
    if kind == "complete_traces":
        return incl and traces(p) <= traces(q)
    return incl
