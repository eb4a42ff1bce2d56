"""One entry point for every registered semantics.

``holds`` dispatches to the decision procedure of a semantics, ``compare``
checks both directions and attaches witnesses, and ``hierarchy_check``
tests the finer-than edges in :data:`EDGES` on a pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .branching import det_branching_preorder
from .formula import Formula
from .linear import lgo_preorder
from .normal import distinguishing_formula
from .process import Term, alphabet_of, show
from .semantics import BISIM, DET, LINEAR, REGISTERED, SIM, SemanticsId, name_of, resolve
from .simulation import bisimilar, constrained_simulation, shared_lts

__all__ = ["EDGES", "Verdict", "holds", "compare", "matrix", "matrix_json", "hierarchy_check",
           "relation_of"]

#: (finer, coarser) pairs: the finer preorder implies the coarser one
EDGES: tuple[tuple[str, str], ...] = (
    ("B", "3S"), ("3S", "2S"), ("B", "2S"), ("2S", "TS"), ("TS", "RS"), ("RS", "CS"), ("CS", "S"),
    ("RS", "PW"), ("PW", "RT"), ("RT", "FT"), ("RT", "R"), ("FT", "F"), ("R", "F"),
    ("F", "CT"), ("CT", "T"), ("CS", "CT"), ("S", "T"), ("TS", "PF"), ("PF", "IF"),
    ("PF", "R"), ("IF", "F"), ("RT", "RFT"), ("RFT", "R"), ("RFT", "FT"), ("R", "RV"),
    ("FT", "RV"), ("RV", "F"), ("RT", "POT"), ("POT", "PO"), ("R", "PO"), ("PO", "T"),
)


def _sem(s: SemanticsId | str) -> SemanticsId:
    return resolve(s) if isinstance(s, str) else s


def holds(sem: SemanticsId | str, p: Term, q: Term, alphabet: Sequence[str] | None = None) -> bool:
    """``p`` is below ``q`` in the preorder of ``sem``."""
    sem = _sem(sem)
    alphabet = tuple(sorted(set(alphabet))) if alphabet is not None else alphabet_of([p, q])
    lts = shared_lts(p, q, alphabet=alphabet)
    N = sem.constraint
    if sem.flavor == SIM:
        return constrained_simulation(N, p, q, lts)
    if sem.flavor == LINEAR:
        return lgo_preorder(N, sem.kind, p, q, lts)
    if sem.flavor == DET:
        return det_branching_preorder(N, p, q, lts)
    if sem.flavor == BISIM:
        return bisimilar(p, q, lts)
    raise ValueError(f"no decision procedure for {sem}")


def relation_of(forward: bool, backward: bool) -> str:
    if forward and backward:
        return "equivalent"
    if forward:
        return "strictly-below"
    if backward:
        return "strictly-above"
    return "incomparable"


@dataclass(frozen=True)
class Verdict:
    semantics: str
    forward: bool
    backward: bool
    witness_forward: Formula | None = None
    witness_backward: Formula | None = None
    relation: str = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "relation", relation_of(self.forward, self.backward))

    def to_json(self) -> dict:
        out = {"semantics": self.semantics, "forward": self.forward,
               "backward": self.backward, "relation": self.relation}
        wit = {}
        if self.witness_forward is not None:
            wit["forward"] = str(self.witness_forward)
        if self.witness_backward is not None:
            wit["backward"] = str(self.witness_backward)
        if wit:
            out["witness"] = wit
        return out


def compare(sem: SemanticsId | str, p: Term, q: Term, alphabet: Sequence[str] | None = None,
            witnesses: bool = True) -> Verdict:
    """Both directions; a failing direction carries a verified witness
    (true of the left process of that direction, false of the right)."""
    sem = _sem(sem)
    alphabet = tuple(sorted(set(alphabet))) if alphabet is not None else alphabet_of([p, q])
    fwd, bwd = holds(sem, p, q, alphabet), holds(sem, q, p, alphabet)
    wf = wb = None
    if witnesses:
        wf = None if fwd else distinguishing_formula(sem, p, q, alphabet)
        wb = None if bwd else distinguishing_formula(sem, q, p, alphabet)
    return Verdict(name_of(sem), fwd, bwd, wf, wb)


def matrix(p: Term, q: Term, alphabet: Sequence[str] | None = None,
           names: Iterable[str] = REGISTERED, witnesses: bool = True) -> dict[str, Verdict]:
    """Verdicts for every registered semantics, in registry order."""
    return {n: compare(n, p, q, alphabet, witnesses) for n in names}


def matrix_json(p: Term, q: Term, alphabet: Sequence[str] | None = None) -> dict:
    alphabet = tuple(sorted(set(alphabet))) if alphabet is not None else alphabet_of([p, q])
    cells = matrix(p, q, alphabet)
    return {"p": show(p), "q": show(q), "alphabet": list(alphabet),
            "cells": [v.to_json() for v in cells.values()]}


def hierarchy_check(p: Term, q: Term, alphabet: Sequence[str] | None = None,
                    edges: Iterable[tuple[str, str]] = EDGES) -> list[tuple[str, str]]:
    """Edges ``(A, B)`` with ``p`` below ``q`` under A but not under B."""
    alphabet = tuple(sorted(set(alphabet))) if alphabet is not None else alphabet_of([p, q])
    memo: dict[str, bool] = {}

    def h(n: str) -> bool:
        if n not in memo:
            memo[n] = holds(n, p, q, alphabet)
        return memo[n]

    return [(a, b) for a, b in edges if h(a) and not h(b)]
