"""Shared strategies, corpora and naive oracles for the test suite.

The oracles work on terms directly (no LTS, no bitmasks) so they share no
code with the library's fixpoints.
"""

from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from ltbt.formula import TOP, And, Dia, Not
from ltbt.process import NIL, Choice, Prefix, initials, step, traces
from ltbt.randomterms import random_pairs

settings.register_profile("ltbt", deadline=None, max_examples=60)
settings.load_profile("ltbt")

ACTS = ("a", "b", "c")


def terms(acts=ACTS, leaves=6):
    return st.recursive(
        st.just(NIL),
        lambda ch: st.one_of(st.builds(Prefix, st.sampled_from(acts), ch),
                             st.builds(Choice, ch, ch)),
        max_leaves=leaves,
    )


def formulas(acts=ACTS, leaves=5):
    atom = st.just(TOP)
    return st.recursive(
        atom,
        lambda ch: st.one_of(
            st.builds(Dia, st.sampled_from(acts), ch),
            st.builds(Not, ch),
            st.lists(ch, min_size=2, max_size=3).map(lambda xs: And(tuple(xs))),
        ),
        max_leaves=leaves,
    )


@pytest.fixture(scope="session")
def corpus():
    """Seeded random pairs: |Act| <= 3, depth <= 4, size <= 12."""
    return random_pairs(2024, 600)


# -- naive oracles -------------------------------------------------------------

def _subterms(t):
    out, todo = set(), [t]
    while todo:
        u = todo.pop()
        if u not in out:
            out.add(u)
            todo.extend(v for _, v in step(u))
    return out


def naive_label(kind: str, k: int, t):
    if kind == "U":
        return None
    if kind == "C":
        return bool(step(t))
    if kind == "I":
        return initials(t)
    if kind == "T":
        return traces(t)
    raise AssertionError(kind)


@lru_cache(maxsize=None)
def naive_sim(kind: str, k: int, p, q) -> bool:
    """Greatest N-simulation by iterated removal over explicit pairs."""
    states = sorted(_subterms(p) | _subterms(q), key=repr)

    def related(x, y):
        if kind == "S":
            low = ("U", 0) if k == 2 else ("S", k - 1)
            return naive_sim(*low, x, y) and naive_sim(*low, y, x)
        return naive_label(kind, k, x) == naive_label(kind, k, y)

    rel = {(x, y) for x in states for y in states if related(x, y)}
    changed = True
    while changed:
        changed = False
        for x, y in list(rel):
            for a, x2 in step(x):
                if not any(b == a and (x2, y2) in rel for b, y2 in step(y)):
                    rel.discard((x, y))
                    changed = True
                    break
    return (p, q) in rel


@lru_cache(maxsize=None)
def naive_bisim(p, q) -> bool:
    states = sorted(_subterms(p) | _subterms(q), key=repr)
    rel = {(x, y) for x in states for y in states}
    changed = True
    while changed:
        changed = False
        for x, y in list(rel):
            fwd = all(any(b == a and (x2, y2) in rel for b, y2 in step(y)) for a, x2 in step(x))
            bwd = all(any(b == a and (x2, y2) in rel for b, x2 in step(x)) for a, y2 in step(y))
            if not (fwd and bwd):
                rel.discard((x, y))
                changed = True
    return (p, q) in rel


def naive_lgos(label, t) -> frozenset:
    """Every path from ``t``, labels interleaved with actions."""
    here = label(t)
    out = {(here,)}
    for a, u in step(t):
        out |= {(here, a) + o for o in naive_lgos(label, u)}
    return frozenset(out)


def naive_eval(f, t) -> bool:
    """HML satisfaction by structural recursion (mirror-free reference)."""
    if isinstance(f, And):
        return all(naive_eval(g, t) for g in f.items)
    if isinstance(f, Not):
        return not naive_eval(f.body, t)
    if isinstance(f, Dia):
        return any(a == f.action and naive_eval(f.body, u) for a, u in step(t))
    return any(naive_eval(g, t) for g in f.items)


def pytest_terminal_summary(terminalreporter):
    import sys
    lines = getattr(sys.modules.get("test_acceptance"), "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
