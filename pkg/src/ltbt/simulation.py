"""Constraints, local observations and constrained simulation preorders.

A constraint N is an equivalence on states given by equality of a local
observation ``L_N``: nothing (U), deadlock status (C), initial actions (I),
the trace set (T) or the (k-1)-nested simulation class (S for k = 2, and
``KS(k)`` in general).  The N-constrained simulation preorder is the
greatest relation inside N that is closed under matching transitions.

All relations are computed on a shared :class:`~ltbt.process.Lts`, so that
simulation class identifiers are comparable between the related terms.
Relations are stored as a list of bitmasks: bit ``j`` of ``rel[i]`` is set
iff ``(i, j)`` is in the relation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .process import Lts, Term, show, size, traces

__all__ = [
    "Constraint", "U", "C", "I", "T", "S", "KS", "constraint_by_name",
    "local_obs", "constraint_relation", "simulation_relation",
    "constrained_simulation", "bisimilar", "bisimulation_relation",
    "shared_lts", "pairs_of",
]


@dataclass(frozen=True, order=True)
class Constraint:
    """``kind`` is one of U, C, I, T, S; ``k`` is the nesting level for S.

    ``S`` (k = 2) observes plain simulation classes; ``k = 3`` observes
    2-nested simulation classes, and so on.
    """

    kind: str
    k: int = 0

    def __str__(self) -> str:
        if self.kind != "S":
            return self.kind
        return "S" if self.k == 2 else f"{self.k - 1}S"

    @property
    def lower(self) -> "Constraint":
        """Constraint of the simulation whose classes this constraint observes."""
        if self.kind != "S":
            raise ValueError(f"{self} is not a simulation-class constraint")
        return U if self.k == 2 else Constraint("S", self.k - 1)

    @property
    def set_valued(self) -> bool:
        return self.kind in ("I", "T")


U = Constraint("U")
C = Constraint("C")
I = Constraint("I")
T = Constraint("T")
S = Constraint("S", 2)


def KS(k: int) -> Constraint:
    """Constraint observing (k-1)-nested simulation classes; ``KS(2) == S``."""
    if not 2 <= k <= 5:
        raise ValueError("nesting depth k must satisfy 2 <= k <= 5")
    return Constraint("S", k)


def constraint_by_name(name: str) -> Constraint:
    name = name.strip()
    if name in ("U", "C", "I", "T", "S"):
        return {"U": U, "C": C, "I": I, "T": T, "S": S}[name]
    if name.endswith("S") and name[:-1].isdigit():
        return KS(int(name[:-1]) + 1)
    raise ValueError(f"unknown constraint {name!r}")


def shared_lts(*terms: Term, alphabet=()) -> Lts:
    return Lts(terms, alphabet)


def pairs_of(rel: list[int]):
    for i, mask in enumerate(rel):
        j = 0
        while mask:
            if mask & 1:
                yield i, j
            mask >>= 1
            j += 1


def local_obs(N: Constraint, lts: Lts) -> list:
    """``L_N`` for every state of ``lts``.

    U gives ``None``; C gives True iff the state is deadlocked; I the
    frozenset of initials; T the frozenset of traces; S-kinds a canonical
    representative term of the state's simulation class in ``lts``.
    """
    key = ("obs", N)
    if key in lts.cache:
        return lts.cache[key]
    n = len(lts)
    if N.kind == "U":
        obs = [None] * n
    elif N.kind == "C":
        obs = [not lts.succ[i] for i in range(n)]
    elif N.kind == "I":
        obs = [lts.initials(i) for i in range(n)]
    elif N.kind == "T":
        obs = [traces(lts.term_of[i]) for i in range(n)]
    else:
        rel = simulation_relation(N.lower, lts)
        obs = []
        for i in range(n):
            members = [j for j in range(n) if rel[i] >> j & 1 and rel[j] >> i & 1]
            rep = min(members, key=lambda j: (size(lts.term_of[j]), show(lts.term_of[j])))
            obs.append(lts.term_of[rep])
    lts.cache[key] = obs
    return obs


def constraint_relation(N: Constraint, lts: Lts) -> list[int]:
    """All pairs of states with equal local observations."""
    obs = local_obs(N, lts)
    n = len(lts)
    groups: dict = {}
    for i, o in enumerate(obs):
        groups[o] = groups.get(o, 0) | (1 << i)
    return [groups[obs[i]] for i in range(n)]


def simulation_relation(N: Constraint, lts: Lts) -> list[int]:
    """Greatest N-constrained simulation on ``lts`` as bitmasks."""
    key = ("sim", N)
    if key in lts.cache:
        return lts.cache[key]
    n = len(lts)
    rel = constraint_relation(N, lts)
    # succ_mask[j][a]: bitmask of a-successors of j
    succ_mask: list[dict[str, int]] = []
    for j in range(n):
        d: dict[str, int] = {}
        for a, t in lts.succ[j]:
            d[a] = d.get(a, 0) | (1 << t)
        succ_mask.append(d)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            mask = rel[i]
            keep = mask
            j = 0
            m = mask
            while m:
                if m & 1:
                    for a, x in lts.succ[i]:
                        if not rel[x] & succ_mask[j].get(a, 0):
                            keep &= ~(1 << j)
                            break
                m >>= 1
                j += 1
            if keep != mask:
                rel[i] = keep
                changed = True
    lts.cache[key] = rel
    return rel


def constrained_simulation(N: Constraint, p: Term, q: Term, lts: Lts | None = None) -> bool:
    """``p`` is N-simulated by ``q``."""
    lts = lts or shared_lts(p, q)
    rel = simulation_relation(N, lts)
    return bool(rel[lts.state(p)] >> lts.state(q) & 1)


def bisimulation_relation(lts: Lts) -> list[int]:
    key = ("bisim",)
    if key in lts.cache:
        return lts.cache[key]
    n = len(lts)
    full = (1 << n) - 1
    rel = [full] * n

    def ok(x: int, y: int) -> bool:
        for a, x2 in lts.succ[x]:
            if not any(b == a and rel[x2] >> y2 & 1 for b, y2 in lts.succ[y]):
                return False
        for b, y2 in lts.succ[y]:
            if not any(a == b and rel[x2] >> y2 & 1 for a, x2 in lts.succ[x]):
                return False
        return True

    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if rel[i] >> j & 1 and not ok(i, j):
                    rel[i] &= ~(1 << j)
                    rel[j] &= ~(1 << i)
                    changed = True
    lts.cache[key] = rel
    return rel


def bisimilar(p: Term, q: Term, lts: Lts | None = None) -> bool:
    lts = lts or shared_lts(p, q)
    return bool(bisimulation_relation(lts)[lts.state(p)] >> lts.state(q) & 1)
