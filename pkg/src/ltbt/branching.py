"""Branching general observations.

A bgo of ``p`` is a finite tree ``<L_N(p), S>`` where ``S`` is any set of
arcs ``(a, t)`` with ``t`` a bgo of some a-derivative of ``p``.  The full
set is exponential, so enumeration is guarded by a cap on the number of
observations (``SPECTRUM_CAP`` in the environment, default two million).
Deterministic bgos carry at most one arc per action.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from .linear import _json_label, _show_label
from .process import Lts, Term
from .simulation import Constraint, constrained_simulation, local_obs, shared_lts

__all__ = [
    "Bgo", "CapExceeded", "default_cap", "bgo_set", "dbgo_set", "bgo_included",
    "det_branching_preorder", "dbgo_failing", "is_deterministic", "show_bgo", "bgo_json",
    "bgo_member", "bgo_size",
]


class CapExceeded(RuntimeError):
    """Observation enumeration would exceed the configured cap."""

    def __init__(self, needed: int | str, cap: int):
        super().__init__(f"observation count {needed} exceeds cap {cap}")
        self.needed = needed
        self.cap = cap


def default_cap() -> int:
    return int(float(os.environ.get("SPECTRUM_CAP", "2e6")))


@dataclass(frozen=True, eq=True)
class Bgo:
    label: object
    children: frozenset = frozenset()
    _hash: int = field(init=False, compare=False, default=0, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.label, self.children)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return show_bgo(self)

    def arcs(self) -> list[tuple[str, "Bgo"]]:
        return sorted(self.children, key=lambda c: (c[0], show_bgo(c[1])))


def is_deterministic(t: Bgo) -> bool:
    acts = [a for a, _ in t.children]
    return len(acts) == len(set(acts)) and all(is_deterministic(c) for _, c in t.children)


def bgo_size(t: Bgo) -> int:
    return 1 + sum(bgo_size(c) for _, c in t.children)


def show_bgo(t: Bgo) -> str:
    """``{a}{a:{}}``: the label, then arcs in braces when present."""
    head = _show_label(t.label)
    if not t.children:
        return head
    return head + "{" + ",".join(f"{a}:{show_bgo(c)}" for a, c in t.arcs()) + "}"


def bgo_json(t: Bgo) -> dict:
    return {"label": _json_label(t.label), "children": [[a, bgo_json(c)] for a, c in t.arcs()]}


def _enumerate(N: Constraint, lts: Lts, deterministic: bool, cap: int) -> dict[int, frozenset]:
    key = ("dbgo" if deterministic else "bgo", N, cap)
    if key in lts.cache:
        return lts.cache[key]
    obs = local_obs(N, lts)
    memo: dict[int, frozenset] = {}
    intern: dict[Bgo, Bgo] = {}

    def node(label, arcs) -> Bgo:
        t = Bgo(label, frozenset(arcs))
        return intern.setdefault(t, t)

    def go(i: int) -> frozenset:
        if i in memo:
            return memo[i]
        pools: dict[str, set] = {}
        for a, j in lts.succ[i]:
            pools.setdefault(a, set()).update(go(j))
        if deterministic:
            count = 1
            for pool in pools.values():
                count *= len(pool) + 1
            if count > cap:
                raise CapExceeded(count, cap)
        else:
            arcs_total = sum(len(p) for p in pools.values())
            if arcs_total >= cap.bit_length() or 2 ** arcs_total > cap:
                raise CapExceeded(f"2^{arcs_total}", cap)
        label = obs[i]
        if deterministic:
            choices = [[None] + sorted(((a, t) for t in pool), key=lambda c: show_bgo(c[1]))
                       for a, pool in sorted(pools.items())]
            out = {node(label, [c for c in combo if c is not None])
                   for combo in itertools.product(*choices)}
        else:
            arcs = [(a, t) for a, pool in sorted(pools.items()) for t in pool]
            out = {node(label, sub) for r in range(len(arcs) + 1)
                   for sub in itertools.combinations(arcs, r)}
        memo[i] = frozenset(out)
        return memo[i]

    for r in lts.roots:
        go(r)
    lts.cache[key] = memo
    return memo


def bgo_set(N: Constraint, p: Term, lts: Lts | None = None, cap: int | None = None) -> frozenset:
    """``BGO_N(p)``; raises :class:`CapExceeded` when too large."""
    lts = lts or shared_lts(p)
    return _enumerate(N, lts, False, cap or default_cap())[lts.state(p)]


def dbgo_set(N: Constraint, p: Term, lts: Lts | None = None, cap: int | None = None) -> frozenset:
    """Deterministic members of ``BGO_N(p)``, enumerated directly."""
    lts = lts or shared_lts(p)
    return _enumerate(N, lts, True, cap or default_cap())[lts.state(p)]


def bgo_member(N: Constraint, t: Bgo, p: Term, lts: Lts | None = None) -> bool:
    """``t`` in ``BGO_N(p)`` without enumerating: every arc has a matching move."""
    lts = lts or shared_lts(p)
    obs = local_obs(N, lts)

    def at(t: Bgo, i: int) -> bool:
        if obs[i] != t.label:
            return False
        return all(any(b == a and at(c, j) for b, j in lts.succ[i]) for a, c in t.children)

    return at(t, lts.state(p))


def bgo_included(N: Constraint, p: Term, q: Term, mode: str = "via_simulation",
                 lts: Lts | None = None, cap: int | None = None) -> bool:
    """``BGO_N(p)`` is a subset of ``BGO_N(q)``.

    ``enumerate`` materialises both sets; ``via_simulation`` asks the
    constrained simulation fixpoint instead.
    """
    lts = lts or shared_lts(p, q)
    if mode == "via_simulation":
        return constrained_simulation(N, p, q, lts)
    if mode != "enumerate":
        raise ValueError(f"unknown mode {mode!r}")
    return bgo_set(N, p, lts, cap) <= bgo_set(N, q, lts, cap)


def _order(t: Bgo):
    return (bgo_size(t), show_bgo(t))


def dbgo_failing(N: Constraint, p: Term, q: Term, lts: Lts | None = None,
                 cap: int | None = None) -> Bgo | None:
    """Smallest deterministic observation of ``p`` that ``q`` lacks."""
    lts = lts or shared_lts(p, q)
    missing = dbgo_set(N, p, lts, cap) - dbgo_set(N, q, lts, cap)
    return min(missing, key=_order) if missing else None


def det_branching_preorder(N: Constraint, p: Term, q: Term, lts: Lts | None = None,
                           cap: int | None = None) -> bool:
    lts = lts or shared_lts(p, q)
    return dbgo_set(N, p, lts, cap) <= dbgo_set(N, q, lts, cap)
