"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

The lines are collected in ``REPORT``, printed as each test runs and
repeated in the terminal summary (see ``conftest.py``).
"""

from __future__ import annotations

import time

import pytest

from ltbt.branching import CapExceeded, bgo_included, det_branching_preorder
from ltbt.formula import parse_formula, satisfies, show_formula
from ltbt.linear import Kind, classic_preorder, lgo_preorder
from ltbt.logics import Classic, Unified, bounded_preorder, bounded_witness, logic_membership
from ltbt.normal import distinguishing_formula
from ltbt.process import alphabet_of, show
from ltbt.randomterms import random_pairs
from ltbt.selftest import CORPUS, JOIN_PAIR, INCOMPARABLE, PW_PAIR, STRICT_EDGES, WORLDS
from ltbt.semantics import REGISTERED, resolve
from ltbt.simulation import C, I, S, T, U, constrained_simulation, shared_lts
from ltbt.spectrum import EDGES, hierarchy_check, holds

REPORT: dict[int, str] = {}
SEED, COUNT, CAP = 2024, 1000, 16384


@pytest.fixture(scope="module")
def pairs():
    return random_pairs(SEED, COUNT)


def report(n: int, title: str, problems: list, started: float, extra: str = "") -> None:
    status = "PASS" if not problems else "FAIL"
    took = f"{time.time() - started:.1f}s" + (f", {extra}" if extra else "")
    line = f"{status} criterion {n:>2}: {title} ({took})"
    REPORT[n] = line
    print(line)
    assert not problems, problems[:5]


def _p(name):
    return CORPUS[name]


def test_criterion_01_corpus():
    t0, bad = time.time(), []

    def below(sems, x, y, want):
        for s in sems:
            if holds(s, _p(x), _p(y)) != want:
                bad.append(f"{x} below {y} under {s} should be {want}")

    def equiv(sems, x, y):
        below(sems, x, y, True)
        below(sems, y, x, True)

    def wit(text, x, y):
        p, q = _p(x), _p(y)
        f = parse_formula(text, alphabet_of([p, q]))
        if not (satisfies(p, f) and not satisfies(q, f)):
            bad.append(f"{text} does not separate {x} from {y}")

    below(["F", "R", "FT", "RT", "RS"], "P1", "P2", False)
    wit("a.(~b & ~c)", "P1", "P2")
    equiv(["F"], "P2", "P3")
    below(["R", "FT", "RT", "RS"], "P2", "P3", False)
    wit("a.(~e & c)", "P2", "P3")
    equiv(["F", "R"], "P3", "P4")
    below(["FT"], "P3", "P4", False)
    wit("a.(~c & b.(~e & d))", "P3", "P4")
    equiv(["F", "FT"], "P5", "P6")
    below(["R"], "P5", "P6", False)
    wit("a.b.(c & d)", "P5", "P6")
    equiv(["F", "R", "RT", "FT"], "P6", "P7")
    below(["RS"], "P7", "P6", False)
    wit("a.(b.c & b.d)", "P7", "P6")
    equiv(["F", "R", "RT", "FT", "RS"], "P7", "P8")
    report(1, "corpus, six bullets and stated witnesses", bad, t0)


def test_criterion_02_sup_sub_counterexample():
    t0 = time.time()
    p, q, r = INCOMPARABLE
    lts = shared_lts(p, q, r)
    facts = {
        "p ~l-sup r": lgo_preorder(I, Kind.LSUP, p, r, lts) and lgo_preorder(I, Kind.LSUP, r, p, lts),
        "r not lf-sub below p": not lgo_preorder(I, Kind.LFSUB, r, p, lts),
        "q ~l-sub r": lgo_preorder(I, Kind.LSUB, q, r, lts) and lgo_preorder(I, Kind.LSUB, r, q, lts),
        "r not lf-sup below q": not lgo_preorder(I, Kind.LFSUP, r, q, lts),
    }
    report(2, "sup/sub counterexample on a.b+a.c, a.(b+c) and their sum",
           [k for k, ok in facts.items() if not ok], t0)


def test_criterion_03_possible_worlds():
    t0, bad = time.time(), []
    p, q = PW_PAIR
    al = ("a", "b", "c", "d")
    if det_branching_preorder(I, p, q, shared_lts(p, q, alphabet=al)):
        bad.append("dBGO inclusion does not separate the pair")
    f = distinguishing_formula(resolve("PW"), p, q, al)
    if f is None or not satisfies(p, f) or satisfies(q, f):
        bad.append(f"synthesised witness {f} does not verify")
    elif not logic_membership(f, Unified(resolve("PW")), al):
        bad.append(f"witness {f} is outside the deterministic logic")
    for x, y in ((p, q), (q, p)):
        if bounded_witness(Classic("PW"), x, y, al, 3):
            bad.append("a classic PW formula of depth <= 3 separates the pair")
    report(3, "possible worlds: dBGO separates, classic logic to depth 3 does not", bad, t0,
           f"witness {show_formula(f)}")


def test_criterion_04_join_vs_ready_traces():
    t0, bad = time.time(), []
    p, q = JOIN_PAIR
    al = alphabet_of([p, q])
    if not (holds("RFT", p, q) and holds("RFT", q, p)):
        bad.append("p and q are not R&FT equivalent")
    if holds("RT", p, q) and holds("RT", q, p):
        bad.append("p and q are RT equivalent")
    sem = resolve("RT")
    for x, y in ((p, q), (q, p)):
        if not holds(sem, x, y, al):
            f = distinguishing_formula(sem, x, y, al)
            if f is None or not satisfies(x, f) or satisfies(y, f):
                bad.append(f"RT witness {f} does not verify")
    report(4, "R&FT equivalent, RT distinct, verified RT witness", bad, t0)


def test_criterion_05_bgo_enumeration_vs_simulation(pairs):
    t0, bad, checked, skipped = time.time(), [], 0, 0
    for p, q in pairs:
        lts = shared_lts(p, q)
        try:
            for N in (U, C, I, T, S):
                if bgo_included(N, p, q, "enumerate", lts, cap=CAP) != constrained_simulation(N, p, q, lts):
                    bad.append(f"{N}: {show(p)} vs {show(q)}")
            checked += 1
        except CapExceeded:
            skipped += 1
    if checked < 500:
        bad.append(f"only {checked} pairs within the enumeration cap")
    report(5, "BGO enumeration inclusion equals constrained simulation for U, C, I, T, S", bad, t0,
           f"{checked} pairs checked, {skipped} over cap {CAP}")


CLASSIC_OF = {Kind.L: "ready_traces", Kind.LSUP: "failure_traces", Kind.LF: "readies",
              Kind.LFSUP: "failures"}


def test_criterion_06_classic_oracles(pairs):
    t0, bad = time.time(), []
    for p, q in pairs:
        al = alphabet_of([p, q])
        lts = shared_lts(p, q, alphabet=al)
        for kind, classic in CLASSIC_OF.items():
            if lgo_preorder(I, kind, p, q, lts) != classic_preorder(classic, p, q, al):
                bad.append(f"{kind.name}/{classic}: {show(p)} vs {show(q)}")
    report(6, "initials-constrained L, LSup, Lf, LfSup equal RT, FT, R, F inclusion", bad, t0,
           f"{len(pairs)} pairs")


def test_criterion_07_collapse(pairs):
    t0, bad = time.time(), []
    for p, q in pairs:
        lts = shared_lts(p, q)
        for N, classic in ((U, "traces"), (C, "complete_traces")):
            want = classic_preorder(classic, p, q)
            got = {k: lgo_preorder(N, k, p, q, lts) for k in Kind}
            if set(got.values()) != {want}:
                bad.append(f"{N}: {show(p)} vs {show(q)} {got}")
    report(7, "every linear kind collapses to trace / completed trace inclusion for U and C", bad, t0,
           f"{len(pairs)} pairs, {len(Kind)} kinds")


def test_criterion_08_possible_futures(pairs):
    t0 = time.time()
    bad = [f"{show(p)} vs {show(q)}" for p, q in pairs
           if lgo_preorder(T, Kind.LF, p, q) != classic_preorder("possible_futures", p, q)]
    report(8, "trace-set constrained Lf equals possible futures inclusion", bad, t0, f"{len(pairs)} pairs")


def test_criterion_09_hierarchy(pairs):
    t0, bad = time.time(), []
    bundled = list(CORPUS.values()) + list(INCOMPARABLE) + list(PW_PAIR) + list(JOIN_PAIR) + list(WORLDS)
    pool = list(pairs) + [(x, y) for x in bundled for y in bundled]
    for p, q in pool:
        for a, b in hierarchy_check(p, q):
            bad.append(f"{a} > {b} violated on {show(p)} vs {show(q)}")
    for a, b in STRICT_EDGES:
        if not any(holds(b, x, y) and not holds(a, x, y) for x in bundled for y in bundled):
            bad.append(f"no bundled pair shows {a} > {b} is strict")
    report(9, "no hierarchy violations, bundled pairs make the separated edges strict", bad, t0,
           f"{len(pool)} pairs, {len(EDGES)} edges, {len(STRICT_EDGES)} strict")


def test_criterion_10_logic_matches_observations(pairs):
    t0, bad, negatives = time.time(), [], 0
    for p, q in pairs:
        al = alphabet_of([p, q])
        for name in REGISTERED:
            sem = resolve(name)
            verdict = holds(sem, p, q, al)
            if bounded_preorder(sem, p, q, al) != verdict:
                bad.append(f"{name}: bounded logic disagrees on {show(p)} vs {show(q)}")
            try:
                f = distinguishing_formula(sem, p, q, al)
            except AssertionError as e:
                bad.append(f"{name}: witness rejected on {show(p)} vs {show(q)}: {e}")
                continue
            if verdict != (f is None):
                bad.append(f"{name}: verdict {verdict} but witness {f}")
            elif f is not None:
                negatives += 1
                if not satisfies(p, f) or satisfies(q, f):
                    bad.append(f"{name}: witness {f} does not separate {show(p)} from {show(q)}")
    report(10, "bounded unified logic agrees with every semantics, all witnesses verify", bad, t0,
           f"{len(pairs)} pairs x {len(REGISTERED)} semantics, {negatives} witnesses")
