"""Names of the semantics and what they resolve to."""

from __future__ import annotations

from dataclasses import dataclass

from .linear import Kind
from .simulation import C, I, KS, S, T, U, Constraint

__all__ = ["SemanticsId", "SIM", "LINEAR", "DET", "BISIM", "resolve", "REGISTERED", "name_of"]

SIM = "simulation"
LINEAR = "linear"
DET = "det-branching"
BISIM = "bisimulation"


@dataclass(frozen=True)
class SemanticsId:
    constraint: Constraint
    flavor: str
    kind: Kind | None = None

    def __str__(self) -> str:
        return name_of(self)


_TABLE: dict[str, SemanticsId] = {
    "T": SemanticsId(U, LINEAR, Kind.L),
    "CT": SemanticsId(C, LINEAR, Kind.L),
    "F": SemanticsId(I, LINEAR, Kind.LFSUP),
    "R": SemanticsId(I, LINEAR, Kind.LF),
    "FT": SemanticsId(I, LINEAR, Kind.LSUP),
    "RT": SemanticsId(I, LINEAR, Kind.L),
    "RV": SemanticsId(I, LINEAR, Kind.LSUP_OR_F),
    "RFT": SemanticsId(I, LINEAR, Kind.LSUP_AND_F),
    "PO": SemanticsId(I, LINEAR, Kind.LFSUB),
    "POT": SemanticsId(I, LINEAR, Kind.LSUB),
    "PW": SemanticsId(I, DET),
    "S": SemanticsId(U, SIM),
    "CS": SemanticsId(C, SIM),
    "RS": SemanticsId(I, SIM),
    "TS": SemanticsId(T, SIM),
    "2S": SemanticsId(S, SIM),
    "3S": SemanticsId(KS(3), SIM),
    "PF": SemanticsId(T, LINEAR, Kind.LF),
    "IF": SemanticsId(T, LINEAR, Kind.LFSUP),
    "B": SemanticsId(U, BISIM),
}

_SYNONYMS = {"R∨FT": "RV", "R|FT": "RV", "R∧FT": "RFT", "R&FT": "RFT", "IS": "RS", "US": "S"}

#: registry order used by matrices and reports
REGISTERED = ("B", "3S", "2S", "TS", "RS", "CS", "S", "PW", "RT", "RFT", "FT", "R", "RV", "F",
              "POT", "PO", "PF", "IF", "CT", "T")

_NAMES = {v: k for k, v in _TABLE.items()}


def resolve(name: str) -> SemanticsId:
    """Semantics for a name such as ``RS``, ``PF`` or ``4S``.

    Raises ``ValueError`` for unknown names.
    """
    name = _SYNONYMS.get(name.strip(), name.strip())
    if name in _TABLE:
        return _TABLE[name]
    if name.endswith("S") and name[:-1].isdigit():
        return SemanticsId(KS(int(name[:-1])), SIM)
    raise ValueError(f"unknown semantics {name!r}")


def name_of(sem: SemanticsId) -> str:
    if sem in _NAMES:
        return _NAMES[sem]
    if sem.flavor == SIM and sem.constraint.kind == "S":
        return f"{sem.constraint.k}S"
    kind = f",{sem.kind.value}" if sem.kind else ""
    return f"({sem.constraint},{sem.flavor}{kind})"
