import itertools
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltbt.branching import Bgo, bgo_member, bgo_set, dbgo_set
from ltbt.formula import TOP, Dia, Not, conj, parse_formula, satisfies
from ltbt.linear import Kind, lgo_below, lgo_set
from ltbt.logics import Unified, enumerate_formulas, logic_membership
from ltbt.normal import (TOP_NODE, NormalFormula, WitnessError, complete_normal, denote,
                         distinguishing_formula, formula_to_obs, is_complete, normalize,
                         obs_to_formula, obs_to_normal)
from ltbt.process import NIL, Choice, Prefix, alphabet_of, parse_term
from ltbt.semantics import BISIM, DET, LINEAR, REGISTERED, SIM, SemanticsId, resolve
from ltbt.simulation import C, I, S, T, U, shared_lts

from conftest import terms

ABC = ("a", "b", "c")
a_, b_, c_ = (Dia(x, TOP) for x in ABC)


@lru_cache(maxsize=None)
def all_terms(n: int, acts=ABC) -> tuple:
    """Every term with at most ``n`` syntax nodes."""
    if n <= 0:
        return ()
    out = {NIL}
    for t in all_terms(n - 1, acts):
        out.update(Prefix(x, t) for x in acts)
    for k in range(1, n - 1):
        for l in all_terms(k, acts):
            for r in all_terms(n - 1 - k, acts):
                out.add(Choice(l, r))
    return tuple(sorted(out, key=repr))


SMALL = all_terms(6)


def equivalent_on_small(f, g) -> bool:
    return all(satisfies(t, f) == satisfies(t, g) for t in SMALL)


def test_small_universe_is_nontrivial():
    assert len(SMALL) > 300 and parse_term("a.b + c") in SMALL


def test_normalize_examples():
    rt = resolve("RT")
    assert normalize(TOP, rt, ABC) == {NormalFormula()}
    phi = Dia("a", conj(b_, Not(c_)))
    inner = NormalFormula(frozenset(), frozenset({c_}), frozenset({("b", TOP_NODE)}))
    assert normalize(phi, rt, ABC) == {NormalFormula(branches=frozenset({("a", inner)}))}
    psi = conj(Not(b_), a_)
    assert normalize(psi, rt, ABC) == {NormalFormula(frozenset(), frozenset({b_}),
                                                    frozenset({("a", TOP_NODE)}))}
    for x in (phi, psi):
        (n,) = normalize(x, rt, ABC)
        assert equivalent_on_small(denote(n), x)


def test_normalize_rejects_outsiders():
    with pytest.raises(ValueError):
        normalize(conj(a_, b_, Dia("a", b_)), resolve("F"), ABC)
    with pytest.raises(ValueError):
        normalize(a_, resolve("B"), ABC)


def test_normalize_lifts_disjunction():
    phi = parse_formula("a.(b | c)", ABC)
    got = normalize(phi, resolve("RT"), ABC)
    assert len(got) == 2
    assert all(satisfies(t, phi) == any(satisfies(t, denote(n)) for n in got) for t in SMALL)


@pytest.mark.parametrize("name", ["T", "CT", "F", "R", "FT", "RT", "PO", "POT", "PW", "S", "CS", "RS", "TS", "PF"])
def test_normalize_preserves_meaning(name):
    sem = resolve(name)
    fam = Unified(sem)
    for phi in itertools.islice(enumerate_formulas(fam, ("a", "b"), 2, 2), 120):
        (n,) = normalize(phi, sem, ("a", "b"))
        assert equivalent_on_small(denote(n), phi), phi


def test_complete_examples():
    got = complete_normal(TOP_NODE, I, ("a",))
    assert got == {NormalFormula(frozenset({a_}), frozenset()), NormalFormula(frozenset(), frozenset({a_}))}
    done = NormalFormula(frozenset({a_}), frozenset({b_}))
    assert complete_normal(done, I, ("a", "b")) == {done}
    half = NormalFormula(frozenset(), frozenset({b_}))
    assert {n.gamma1 for n in complete_normal(half, I, ("a", "b"))} == {frozenset({a_}), frozenset()}
    with pytest.raises(ValueError):
        complete_normal(TOP_NODE, T, ABC)


@pytest.mark.parametrize("name", ["T", "CT", "F", "R", "RT", "FT", "PO", "POT", "S", "CS", "RS", "PW"])
def test_completion_is_an_equivalent_disjunction(name):
    sem = resolve(name)
    N = sem.constraint
    final = sem.kind is not None and sem.kind.final_only
    al = ("a", "b")
    for phi in itertools.islice(enumerate_formulas(Unified(sem), al, 2, 2), 80):
        (n,) = normalize(phi, sem, al)
        parts = complete_normal(n, N, al, final)
        assert all(is_complete(x, N, al, final) for x in parts)
        for t in all_terms(5, al):
            assert satisfies(t, phi) == any(satisfies(t, denote(x)) for x in parts)


def test_obs_to_formula_examples():
    rt, al = resolve("RT"), ("a", "b")
    A, E = frozenset({"a"}), frozenset()
    assert obs_to_formula((A,), rt, al) == conj(a_, Not(b_))
    assert obs_to_formula((A, "a", E), rt, al) == conj(a_, Not(b_), Dia("a", conj(Not(a_), Not(b_))))
    fail = obs_to_formula((A, "a", frozenset({"b"})), resolve("F"), ABC)
    assert fail == Dia("a", conj(Not(a_), Not(c_)))


def test_round_trips():
    rt, al = resolve("RT"), ("a", "b")
    theta = (frozenset({"a"}),)
    assert formula_to_obs(obs_to_normal(theta, rt, al), rt, al) == theta
    tree = Bgo(frozenset({"a"}), frozenset({("a", Bgo(frozenset()))}))
    rs = resolve("RS")
    assert formula_to_obs(obs_to_normal(tree, rs, al), rs, al) == tree


LINEAR_SEMS = [SemanticsId(N, LINEAR, k) for N in (U, C, I, T) for k in Kind] + \
    [SemanticsId(S, LINEAR, Kind.L), SemanticsId(S, LINEAR, Kind.LF)]
TREE_SEMS = [SemanticsId(N, fl, None) for N in (U, C, I, T, S) for fl in (SIM, DET)]


def _below(sem, theta, r, lts):
    if sem.flavor == LINEAR:
        cands = [y for y in lgo_set(sem.constraint, r, lts) if y[1::2] == theta[1::2]]
        return lgo_below(sem.constraint, sem.kind, theta, cands)
    return bgo_member(sem.constraint, theta, r, lts)


def _final_class(sem, theta):
    return theta[1::2], theta[-1]


@settings(max_examples=40)
@given(terms(leaves=4), terms(leaves=4))
def test_observation_formula_contract(p, q):
    al = alphabet_of([p, q])
    lts = shared_lts(p, q, alphabet=al)
    for sem in LINEAR_SEMS + TREE_SEMS:
        N = sem.constraint
        if sem.flavor == LINEAR:
            obs = lgo_set(N, p, lts)
        elif sem.flavor == SIM:
            obs = bgo_set(N, p, lts, cap=2048)
        else:
            obs = dbgo_set(N, p, lts, cap=2048)
        for theta in sorted(obs, key=repr)[:12]:
            n = obs_to_normal(theta, sem, al, lts)
            phi = denote(n)
            for r in (p, q):
                assert satisfies(r, phi) == _below(sem, theta, r, lts), (sem, theta, r)
            back = formula_to_obs(n, sem, al, lts)
            if sem.flavor != LINEAR or not sem.kind.final_only:
                assert back == theta
            else:
                assert _final_class(sem, back) == _final_class(sem, theta)
            registered = sem in {resolve(x) for x in REGISTERED}
            if registered and sem.kind not in (Kind.LSUP_AND_F, Kind.LSUP_OR_F):
                assert logic_membership(phi, Unified(sem), al)


def test_distinguishing_examples():
    p, q = parse_term("a.b + a.c"), parse_term("a.(b+c)")
    w = distinguishing_formula(resolve("F"), p, q)
    assert satisfies(p, w) and not satisfies(q, w)
    assert distinguishing_formula(resolve("F"), q, p) is None
    pw_p = parse_term("a.b.c + a.(b.c + d) + a.b")
    pw_q = parse_term("a.(b.c + d) + a.b")
    w = distinguishing_formula(resolve("PW"), pw_p, pw_q)
    assert satisfies(pw_p, w) and not satisfies(pw_q, w)
    ex_p = parse_term("a.b.c + a.(b.d + c)")
    ex_q = parse_term("a.b.c + a.(b.d + c) + a.(b.c + c)")
    w = distinguishing_formula(resolve("RT"), ex_q, ex_p)
    assert satisfies(ex_q, w) and not satisfies(ex_p, w)
    assert logic_membership(w, Unified(resolve("RT")), alphabet_of([ex_p, ex_q]))


@settings(max_examples=40)
@given(terms(leaves=5), terms(leaves=5), st.sampled_from(REGISTERED))
def test_witnesses_verify(p, q, name):
    al = alphabet_of([p, q], ("d",))
    sem = resolve(name)
    w = distinguishing_formula(sem, p, q, al)
    from ltbt.spectrum import holds
    if holds(sem, p, q, al):
        assert w is None
    else:
        assert satisfies(p, w) and not satisfies(q, w)
        assert logic_membership(w, Unified(sem), al)


def test_witness_error_is_an_assertion():
    assert issubclass(WitnessError, AssertionError)
