"""Normal formulas, their link to observations, and distinguishing formulas.

A :class:`NormalFormula` is ``(G1, G2, B)`` denoting
``/\\G1 /\\ /\\{~s | s in G2} /\\ /\\{<a>n | (a, n) in B}``.  Prefix atoms
such as ``<a>T`` go to ``B`` when normalizing; base atoms that are not
prefixes (``~0``), trace atoms and nested-simulation atoms stay in the
``G`` sets.

Observations map to formulas by turning every label into a label formula:
exact (ready set, trace set, deadlock flag, simulation class), negative
(the label bounds the state's from above) or positive (from below), as the
order of the semantics requires.  For trace sets the exact formula lists
the maximal traces and refuses the minimal non-traces; for simulation
classes it is relative to the LTS the class was computed on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .branching import Bgo, dbgo_failing
from .formula import TOP, And, Dia, Formula, Not, conj, deadlock, eliminate_disjunction, items_of, satisfies
from .linear import Kind, lgo_actions, lgo_failing, lgo_labels, lgo_set
from .logics import Unified, base_member, logic_membership
from .process import Lts, Term, alphabet_of
from .semantics import BISIM, DET, LINEAR, SIM, SemanticsId
from .simulation import Constraint, bisimulation_relation, local_obs, shared_lts, simulation_relation

__all__ = [
    "NormalFormula", "TOP_NODE", "denote", "normalize", "complete_normal", "is_complete",
    "obs_to_normal", "obs_to_formula", "formula_to_obs", "distinguishing_formula",
    "WitnessError", "trace_formula", "max_traces", "min_nontraces", "label_atoms",
]


class WitnessError(AssertionError):
    """A synthesised witness failed verification."""


@dataclass(frozen=True, eq=True)
class NormalFormula:
    gamma1: frozenset = frozenset()
    gamma2: frozenset = frozenset()
    branches: frozenset = frozenset()
    _hash: int = field(init=False, compare=False, default=0, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.gamma1, self.gamma2, self.branches)))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        g1 = sorted(map(str, self.gamma1))
        g2 = sorted(map(str, self.gamma2))
        br = sorted(f"({a}, {n!r})" for a, n in self.branches)
        return f"NF({g1}, {g2}, [{', '.join(br)}])"


TOP_NODE = NormalFormula()


def denote(n: NormalFormula) -> Formula:
    return conj(list(n.gamma1), [Not(s) for s in n.gamma2],
                [Dia(a, denote(c)) for a, c in n.branches])


def normal_depth(n: NormalFormula) -> int:
    return 1 + max((normal_depth(c) for _, c in n.branches), default=0)


# -- traces and label atoms ----------------------------------------------------

def trace_formula(s: Sequence[str]) -> Formula:
    f: Formula = TOP
    for a in reversed(s):
        f = Dia(a, f)
    return f


def _formula_trace(f: Formula) -> tuple | None:
    out = []
    while isinstance(f, Dia):
        out.append(f.action)
        f = f.body
    return tuple(out) if f == TOP else None


def max_traces(X: Iterable[tuple]) -> list[tuple]:
    X = set(X)
    ext = {s[:-1] for s in X if s}
    return sorted(s for s in X if s not in ext)


def min_nontraces(X: Iterable[tuple], alphabet: Sequence[str]) -> list[tuple]:
    X = set(X)
    return sorted({s + (a,) for s in X for a in alphabet} - X)


def _prefix_closure(ts: Iterable[tuple]) -> frozenset:
    return frozenset(s[:k] for s in ts for k in range(len(s) + 1)) | {()}


def _notzero(alphabet) -> Formula:
    return Not(deadlock(tuple(alphabet)))


class _Context:
    """Shared LTS plus memoised simulation witnesses for class labels."""

    def __init__(self, lts: Lts, alphabet: Sequence[str]):
        self.lts = lts
        self.alphabet = tuple(alphabet)
        self.memo: dict = {}

    def char(self, N: Constraint, i: int) -> Formula:
        """True exactly at states that N-simulate state ``i`` (within the LTS)."""
        key = ("char", N, i)
        if key not in self.memo:
            g1, g2 = label_atoms(N, local_obs(N, self.lts)[i], "exact", self.alphabet, self)
            self.memo[key] = conj(list(g1), [Not(s) for s in g2],
                                  [Dia(a, self.char(N, j)) for a, j in self.lts.succ[i]])
        return self.memo[key]

    def ns_dist(self, N: Constraint, i: int, j: int) -> Formula | None:
        """Formula of the N-simulation logic true at ``i`` and false at ``j``."""
        key = ("ns", N, i, j)
        if key in self.memo:
            return self.memo[key]
        rel = simulation_relation(N, self.lts)
        out = None
        if not rel[i] >> j & 1:
            obs = local_obs(N, self.lts)
            if obs[i] != obs[j]:
                out = self.label_dist(N, i, j)
            else:
                for a, i2 in self.lts.succ[i]:
                    targets = [j2 for b, j2 in self.lts.succ[j] if b == a]
                    if not any(rel[i2] >> j2 & 1 for j2 in targets):
                        out = Dia(a, conj([self.ns_dist(N, i2, j2) for j2 in targets]))
                        break
            if out is None:
                raise WitnessError("simulation failure without a failing move")
        self.memo[key] = out
        return out

    def label_dist(self, N: Constraint, i: int, j: int) -> Formula:
        """Base formula or negated base formula separating two labels."""
        obs = local_obs(N, self.lts)
        x, y = obs[i], obs[j]
        if N.kind == "C":
            return Not(_notzero(self.alphabet)) if x else _notzero(self.alphabet)
        if N.kind == "I":
            if x - y:
                return Dia(min(x - y), TOP)
            return Not(Dia(min(y - x), TOP))
        if N.kind == "T":
            key = lambda s: (len(s), s)  # noqa: E731
            if x - y:
                return trace_formula(min(x - y, key=key))
            return Not(trace_formula(min(y - x, key=key)))
        if N.kind == "S":
            low = N.lower
            rel = simulation_relation(low, self.lts)
            if not rel[i] >> j & 1:
                return self.ns_dist(low, i, j)
            return Not(self.ns_dist(low, j, i))
        raise WitnessError(f"labels of {N} cannot differ")

    def bisim_dist(self, i: int, j: int) -> Formula | None:
        key = ("bis", i, j)
        if key in self.memo:
            return self.memo[key]
        rel = bisimulation_relation(self.lts)
        out = None
        if not rel[i] >> j & 1:
            succ = self.lts.succ
            for a, i2 in succ[i]:
                targets = [j2 for b, j2 in succ[j] if b == a]
                if not any(rel[i2] >> j2 & 1 for j2 in targets):
                    out = Dia(a, conj([self.bisim_dist(i2, j2) for j2 in targets]))
                    break
            else:
                for a, j2 in succ[j]:
                    sources = [i2 for b, i2 in succ[i] if b == a]
                    if not any(rel[i2] >> j2 & 1 for i2 in sources):
                        out = Not(Dia(a, conj([self.bisim_dist(j2, i2) for i2 in sources])))
                        break
            if out is None:
                raise WitnessError("bisimulation failure without a failing move")
        self.memo[key] = out
        return out


def label_atoms(N: Constraint, x, mode: str, alphabet: Sequence[str],
                ctx: _Context | None = None) -> tuple[frozenset, frozenset]:
    """``(G1, G2)`` for label ``x`` of constraint N.

    ``mode`` is ``exact`` (states with label x), ``neg`` (labels included
    in x) or ``pos`` (labels including x).  Unit and boolean labels are
    always exact.
    """
    alphabet = tuple(alphabet)
    if N.kind == "U":
        return frozenset(), frozenset()
    if N.kind == "C":
        nz = frozenset({_notzero(alphabet)})
        return (frozenset(), nz) if x else (nz, frozenset())
    if N.kind == "I":
        pos = frozenset(Dia(a, TOP) for a in x)
        neg = frozenset(Dia(a, TOP) for a in alphabet if a not in x)
        return (pos if mode != "neg" else frozenset(), neg if mode != "pos" else frozenset())
    if N.kind == "T":
        pos = frozenset(trace_formula(s) for s in max_traces(x) if s)
        neg = frozenset(trace_formula(s) for s in min_nontraces(x, alphabet))
        return (pos if mode != "neg" else frozenset(), neg if mode != "pos" else frozenset())
    if mode != "exact":
        raise ValueError(f"class labels of {N} have no ordered label formulas")
    if ctx is None:
        raise ValueError(f"class labels of {N} need the LTS they were computed on")
    lts = ctx.lts
    r = lts.state(x)
    low = N.lower
    rel = simulation_relation(low, lts)
    g1 = frozenset(items_of(ctx.char(low, r)))
    g2 = frozenset(ctx.ns_dist(low, y, r) for y in range(len(lts))
                   if rel[r] >> y & 1 and not rel[y] >> r & 1)
    return g1, g2


# -- normalisation -------------------------------------------------------------

def _atomic(N: Constraint, f: Formula, alphabet: tuple) -> bool:
    if f == _notzero(alphabet):
        return True
    if not base_member(N, f, alphabet) or f == TOP:
        return False
    return not isinstance(f, Dia) or N.kind in ("T", "S")


def _norm(N: Constraint, f: Formula, alphabet: tuple) -> NormalFormula:
    g1, g2, br = set(), set(), set()
    for g in items_of(f):
        if _atomic(N, g, alphabet):
            g1.add(g)
        elif isinstance(g, Not) and base_member(N, g.body, alphabet):
            g2.add(g.body)
        elif isinstance(g, Dia):
            br.add((g.action, _norm(N, g.body, alphabet)))
        else:
            raise ValueError(f"{g} is not a conjunct of a normal formula for {N}")
    return NormalFormula(frozenset(g1), frozenset(g2), frozenset(br))


def normalize(f: Formula, sem: SemanticsId, alphabet: Sequence[str]) -> set[NormalFormula]:
    """Normal formulas whose disjunction is equivalent to ``f``.

    ``f`` may contain liftable disjunctions; every disjunct must belong to
    the logic of ``sem``.
    """
    if sem.flavor == BISIM:
        raise ValueError("full HML has no normal formulas of this shape")
    alphabet = tuple(sorted(set(alphabet)))
    out = set()
    for g in eliminate_disjunction(f):
        if not logic_membership(g, Unified(sem), alphabet):
            raise ValueError(f"{g} is not in the logic of {sem}")
        out.add(_norm(sem.constraint, g, alphabet))
    return out


# -- completion ----------------------------------------------------------------

def _trivial(n: NormalFormula) -> bool:
    return n == TOP_NODE


def is_complete(n: NormalFormula, N: Constraint, alphabet: Sequence[str], final_only: bool = False) -> bool:
    """Every level (only the last one if ``final_only``) fixes its label."""
    alphabet = tuple(sorted(set(alphabet)))
    universe = _universe(N, alphabet)
    last = all(_trivial(c) for _, c in n.branches)
    if (last or not final_only) and universe is not None:
        if n.gamma1 | n.gamma2 != universe or n.gamma1 & n.gamma2:
            return False
    return all(is_complete(c, N, alphabet, final_only) for _, c in n.branches if not _trivial(c))


def _universe(N: Constraint, alphabet: tuple) -> frozenset | None:
    if N.kind == "U":
        return frozenset()
    if N.kind == "C":
        return frozenset({_notzero(alphabet)})
    if N.kind == "I":
        return frozenset(Dia(a, TOP) for a in alphabet)
    return None


def _labels_for(N: Constraint, n: NormalFormula, alphabet: tuple) -> list[tuple[frozenset, frozenset]]:
    nz = _notzero(alphabet)
    branch_acts = {a for a, _ in n.branches}
    if N.kind == "U":
        return [] if n.gamma1 or n.gamma2 else [(frozenset(), frozenset())]
    if N.kind == "C":
        out = []
        for live in (True, False):
            if not live and (branch_acts or nz in n.gamma1):
                continue
            if live and nz in n.gamma2:
                continue
            if n.gamma1 - {nz} or n.gamma2 - {nz}:
                continue
            out.append((frozenset({nz}), frozenset()) if live else (frozenset(), frozenset({nz})))
        return out
    out = []
    allowed = {Dia(a, TOP) for a in alphabet} | {nz}
    if not n.gamma1 <= allowed or not n.gamma2 <= allowed:
        return []
    need = {g.action for g in n.gamma1 if isinstance(g, Dia)} | branch_acts
    forbid = {g.action for g in n.gamma2 if isinstance(g, Dia)}
    free = [a for a in alphabet if a not in need and a not in forbid]
    if need & forbid or not need <= set(alphabet):
        return []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            X = need | set(extra)
            if nz in n.gamma1 and not X or nz in n.gamma2 and X:
                continue
            out.append((frozenset(Dia(a, TOP) for a in X),
                        frozenset(Dia(a, TOP) for a in alphabet if a not in X)))
    return out


def complete_normal(n: NormalFormula, N: Constraint, alphabet: Sequence[str],
                    final_only: bool = False) -> set[NormalFormula]:
    """Complete normal formulas whose disjunction is equivalent to ``n``.

    Every under-specified label is split into all consistent exact labels;
    ``<a>T`` branches are absorbed into the label where it records ``a``.
    With ``final_only`` only the last level is completed.  Supported for
    U, C and I, whose label formulas range over a finite set of atoms.
    """
    alphabet = tuple(sorted(set(alphabet)))
    if N.kind not in ("U", "C", "I"):
        raise ValueError(f"completion over {N} labels is not finite")
    return _complete(n, N, alphabet, final_only)


def _complete(n: NormalFormula, N: Constraint, alphabet: tuple, final_only: bool) -> set[NormalFormula]:
    nz = _notzero(alphabet)
    if N.kind == "U" and nz in n.gamma1:
        # ~0 is not a U label: some move exists, implied by any branch
        g1 = n.gamma1 - {nz}
        if n.branches:
            return _complete(NormalFormula(g1, n.gamma2, n.branches), N, alphabet, final_only)
        out: set[NormalFormula] = set()
        for a in alphabet:
            out |= _complete(NormalFormula(g1, n.gamma2, frozenset({(a, TOP_NODE)})), N, alphabet, final_only)
        return out
    real = [(a, c) for a, c in n.branches if not _trivial(c)]
    last = not real
    absorb = N.kind == "I"
    kids = [[(a, k) for k in _complete(c, N, alphabet, final_only)] for a, c in real]
    if last or not final_only:
        labels = _labels_for(N, n, alphabet)
    else:
        labels = [(n.gamma1, n.gamma2)]
    out = set()
    trivial = [(a, c) for a, c in n.branches if _trivial(c)]
    for g1, g2 in labels:
        keep = [] if absorb and (last or not final_only) else trivial
        for combo in itertools.product(*kids):
            out.add(NormalFormula(g1, g2, frozenset(list(combo) + keep)))
    return out


# -- observations <-> formulas -------------------------------------------------

def _mode(kind: Kind, last: bool) -> str | None:
    if kind in (Kind.L,):
        return "exact"
    if kind is Kind.LSUP:
        return "neg"
    if kind is Kind.LSUB:
        return "pos"
    if kind is Kind.LSUP_AND_F:
        return "exact" if last else "neg"
    if not last:
        return None
    return {Kind.LF: "exact", Kind.LFSUP: "neg", Kind.LFSUB: "pos"}[kind]


def _atoms(N: Constraint, x, mode: str | None, alphabet, ctx) -> tuple[frozenset, frozenset]:
    if mode is None:
        return frozenset(), frozenset()
    if N.kind in ("U", "C"):
        mode = "exact"
    return label_atoms(N, x, mode, alphabet, ctx)


def obs_to_normal(theta, sem: SemanticsId, alphabet: Sequence[str], lts: Lts | None = None) -> NormalFormula:
    """Normal formula ``n`` with ``p |= denote(n)`` iff ``{theta}`` is below the
    observations of ``p`` in the order of ``sem``.

    ``theta`` is an lgo tuple for linear semantics and a :class:`Bgo`
    otherwise.  ``lts`` is required for simulation-class labels.
    """
    alphabet = tuple(sorted(set(alphabet)))
    ctx = _Context(lts, alphabet) if lts is not None else None
    N = sem.constraint
    if sem.flavor in (SIM, DET):
        if not isinstance(theta, Bgo):
            raise ValueError(f"{sem} observations are trees")
        return _tree_normal(N, theta, alphabet, ctx)
    if sem.flavor != LINEAR or isinstance(theta, Bgo):
        raise ValueError(f"no observation domain matches {sem} and {theta!r}")
    labels, acts = lgo_labels(theta), lgo_actions(theta)
    if sem.kind is Kind.LSUP_OR_F:
        return _meet_normal(N, labels, acts, alphabet, ctx)
    n = len(labels) - 1
    node = None
    for i in range(n, -1, -1):
        g1, g2 = _atoms(N, labels[i], _mode(sem.kind, i == n), alphabet, ctx)
        branches = frozenset({(acts[i], node)}) if i < n else frozenset()
        node = NormalFormula(g1, g2, branches)
    return node


def _chain(acts: Sequence[str], end: NormalFormula) -> NormalFormula:
    node = end
    for a in reversed(acts):
        node = NormalFormula(branches=frozenset({(a, node)}))
    return node


def _meet_normal(N, labels, acts, alphabet, ctx) -> NormalFormula:
    if not N.set_valued:
        return obs_to_normal(tuple(_interleave(labels, acts)), SemanticsId(N, LINEAR, Kind.LF),
                             alphabet, ctx.lts if ctx else None)
    x = labels[-1]
    g1, g2 = label_atoms(N, x, "neg", alphabet, ctx)
    ends = [NormalFormula(frozenset(), g2)]
    for e in sorted(x):
        atom = Dia(e, TOP) if N.kind == "I" else trace_formula(e)
        if atom != TOP:
            ends.append(NormalFormula(frozenset({atom}), g2))
    if not acts:
        return NormalFormula(frozenset().union(*(e.gamma1 for e in ends)), g2)
    first = [_chain(acts[1:], e) for e in ends]
    return NormalFormula(branches=frozenset((acts[0], c) for c in first))


def _interleave(labels, acts):
    out = [labels[0]]
    for a, x in zip(acts, labels[1:]):
        out += [a, x]
    return out


def _tree_normal(N: Constraint, t: Bgo, alphabet, ctx) -> NormalFormula:
    g1, g2 = label_atoms(N, t.label, "exact", alphabet, ctx)
    kids = frozenset((a, _tree_normal(N, c, alphabet, ctx)) for a, c in t.children)
    return NormalFormula(g1, g2, kids)


def obs_to_formula(theta, sem: SemanticsId, alphabet: Sequence[str], lts: Lts | None = None) -> Formula:
    """Formula of :func:`obs_to_normal`.

    For the join and meet orders the result combines label formulas of
    both components, so it can fall outside their (union or intersection)
    logic; witnesses for those orders are built per component instead.
    """
    return denote(obs_to_normal(theta, sem, alphabet, lts))


def _read_label(N: Constraint, n: NormalFormula, mode: str, alphabet: tuple, lts: Lts | None):
    if N.kind == "U":
        return None
    if N.kind == "C":
        return _notzero(alphabet) in n.gamma2
    if N.kind == "I":
        if mode == "neg":
            return frozenset(a for a in alphabet if Dia(a, TOP) not in n.gamma2)
        return frozenset(g.action for g in n.gamma1 if isinstance(g, Dia))
    if N.kind == "T":
        if mode == "neg":
            bad = [_formula_trace(g) for g in n.gamma2]
            limit = max((len(s) for s in bad), default=0)
            out = {()}
            frontier = [()]
            for _ in range(limit - 1):
                frontier = [s + (a,) for s in frontier for a in alphabet
                            if not any((s + (a,))[:k] in bad for k in range(1, len(s) + 2))]
                out.update(frontier)
            return frozenset(out)
        return _prefix_closure(_formula_trace(g) for g in n.gamma1)
    if lts is None:
        raise ValueError(f"class labels of {N} need an LTS")
    f = conj(list(n.gamma1), [Not(s) for s in n.gamma2])
    obs = local_obs(N, lts)
    hits = {obs[i] for i in range(len(lts)) if satisfies(lts.term_of[i], f)}
    if len(hits) != 1:
        raise ValueError("label formula does not pick out one class")
    return hits.pop()


def _filler(N: Constraint, acts: Sequence[str], i: int, final, alphabet):
    """Smallest label consistent with the rest of a chain (final kinds)."""
    if N.kind == "U":
        return None
    if N.kind == "C":
        return False
    if N.kind == "I":
        return frozenset({acts[i]})
    rest = tuple(acts[i:])
    return _prefix_closure(rest + s for s in final)


def formula_to_obs(n: NormalFormula, sem: SemanticsId, alphabet: Sequence[str], lts: Lts | None = None):
    """Observation of a normal formula built by :func:`obs_to_normal`."""
    alphabet = tuple(sorted(set(alphabet)))
    N = sem.constraint
    if sem.flavor in (SIM, DET):
        def tree(m: NormalFormula) -> Bgo:
            return Bgo(_read_label(N, m, "exact", alphabet, lts),
                       frozenset((a, tree(c)) for a, c in m.branches))
        return tree(n)
    nodes, acts = [n], []
    while nodes[-1].branches:
        a, c = min(nodes[-1].branches, key=lambda b: (b[0], repr(b[1])))
        acts.append(a)
        nodes.append(c)
    kind = sem.kind
    if kind is Kind.LSUP_OR_F:
        final = frozenset(a for a in alphabet if Dia(a, TOP) not in nodes[-1].gamma2) \
            if N.kind == "I" else _read_label(N, nodes[-1], "neg", alphabet, lts)
        if not N.set_valued:
            final = _read_label(N, nodes[-1], "exact", alphabet, lts)
        kind, labels = Kind.LF, None
    last = len(nodes) - 1
    modes = [_mode(kind, i == last) for i in range(last + 1)]
    if N.kind in ("U", "C"):
        modes = [m and "exact" for m in modes]
    if sem.kind is Kind.LSUP_OR_F:
        labels = [None] * last + [final]
    else:
        labels = [_read_label(N, m, mode, alphabet, lts) if mode else None
                  for m, mode in zip(nodes, modes)]
    if labels[last] is None and N.kind != "U":
        labels[last] = _read_label(N, nodes[last], "exact", alphabet, lts)
    if N.kind == "S" and last and any(m is None for m in modes[:last]):
        labels[:last] = _path_labels(N, acts, labels[last], lts)
    elif N.kind != "S":
        for i in range(last):
            if modes[i] is None or labels[i] is None:
                labels[i] = _filler(N, acts, i, labels[last], alphabet)
    return tuple(_interleave(labels, acts))


def _path_labels(N: Constraint, acts: Sequence[str], final, lts: Lts | None) -> list:
    """Class labels along some path of ``lts`` with these actions that ends
    in the class ``final``."""
    if lts is None:
        raise ValueError(f"class labels of {N} need an LTS")
    obs = local_obs(N, lts)

    def walk(i: int, k: int) -> list | None:
        if k == len(acts):
            return [] if obs[i] == final else None
        for b, j in lts.succ[i]:
            if b == acts[k]:
                rest = walk(j, k + 1)
                if rest is not None:
                    return [obs[i]] + rest
        return None

    for i in range(len(lts)):
        found = walk(i, 0)
        if found is not None:
            return found
    raise ValueError("no path of the LTS carries this observation")


# -- distinguishing formulas -----------------------------------------------------

def _trace_witness(N: Constraint, theta, q_lgos, alphabet) -> Formula:
    labels, acts = lgo_labels(theta), lgo_actions(theta)
    if not any(lgo_actions(y) == acts for y in q_lgos):
        return trace_formula(acts)
    if N.kind == "C" and labels[-1]:
        return trace_formula(acts) if not acts else _chain_formula(acts, Not(_notzero(alphabet)))
    raise WitnessError("no trace-level witness")


def _chain_formula(acts: Sequence[str], end: Formula) -> Formula:
    f = end
    for a in reversed(acts):
        f = Dia(a, f)
    return f


def _linear_witness(sem: SemanticsId, p: Term, q: Term, lts: Lts, alphabet) -> Formula | None:
    N, kind = sem.constraint, sem.kind
    if kind is Kind.LSUP_AND_F:
        for part in (Kind.LSUP, Kind.LF):
            f = _linear_witness(SemanticsId(N, LINEAR, part), p, q, lts, alphabet)
            if f is not None:
                return f
        return None
    if N.kind in ("U", "C"):
        bad = lgo_failing(N, Kind.L, p, q, lts)
        if not bad:
            return None
        theta = bad[0]
        q_lgos = lgo_set(N, q, lts)
        labels, acts = lgo_labels(theta), lgo_actions(theta)
        if not any(lgo_actions(y) == acts for y in q_lgos):
            return trace_formula(acts)
        if labels[-1]:
            return _chain_formula(acts, Not(_notzero(alphabet)))
        b = min(a for a, _ in _after(lts, lts.state(p), acts))
        return trace_formula(tuple(acts) + (b,))
    bad = lgo_failing(N, kind, p, q, lts)
    if not bad:
        return None
    theta = bad[0]
    if kind is not Kind.LSUP_OR_F:
        return obs_to_formula(theta, sem, alphabet, lts)
    labels, acts = lgo_labels(theta), lgo_actions(theta)
    x = labels[-1]
    finals = [lgo_labels(y)[-1] for y in lgo_set(N, q, lts) if lgo_actions(y) == acts]
    _, g2 = label_atoms(N, x, "neg", alphabet)
    below = [y for y in finals if y <= x]
    end = conj([Not(s) for s in g2])
    if below:
        e = min((e for e in x if not any(e in y for y in below)), key=lambda e: (len(e), e))
        end = conj(end, Dia(e, TOP) if N.kind == "I" else trace_formula(e))
    return _chain_formula(acts, end)


def _after(lts: Lts, i: int, acts: Sequence[str]) -> list[tuple[str, int]]:
    """Moves available after some path labelled ``acts`` from ``i``."""
    states = {i}
    for a in acts:
        states = {j for s in states for b, j in lts.succ[s] if b == a}
    return [m for s in sorted(states) for m in lts.succ[s]]


def distinguishing_formula(sem: SemanticsId, p: Term, q: Term,
                           alphabet: Sequence[str] | None = None) -> Formula | None:
    """A formula of the logic of ``sem`` true for ``p`` and false for ``q``,
    or None when ``p`` is below ``q``.  Every witness is re-checked."""
    alphabet = tuple(sorted(set(alphabet))) if alphabet is not None else alphabet_of([p, q])
    lts = shared_lts(p, q, alphabet=alphabet)
    ctx = _Context(lts, alphabet)
    i, j = lts.state(p), lts.state(q)
    N = sem.constraint
    if sem.flavor == BISIM:
        f = ctx.bisim_dist(i, j)
    elif sem.flavor == SIM:
        f = ctx.ns_dist(N, i, j)
    elif sem.flavor == DET:
        theta = dbgo_failing(N, p, q, lts)
        f = None if theta is None else obs_to_formula(theta, sem, alphabet, lts)
    else:
        f = _linear_witness(sem, p, q, lts, alphabet)
    if f is None:
        return None
    if not satisfies(p, f) or satisfies(q, f):
        raise WitnessError(f"witness {f} does not separate the processes")
    if not logic_membership(f, Unified(sem), alphabet):
        raise WitnessError(f"witness {f} is outside the logic of {sem}")
    return f
