import pytest
from hypothesis import given

from ltbt.linear import (Kind, classic_oracle, classic_preorder, lgo_below, lgo_failing,
                         lgo_json, lgo_preorder, lgo_set, meet_union_form, show_lgo)
from ltbt.process import alphabet_of, initials, parse_term, step, traces
from ltbt.simulation import C, I, S, T, U, local_obs, shared_lts

from conftest import naive_lgos, terms

P, Q = parse_term("a.b + a.c"), parse_term("a.(b+c)")
R = parse_term("a.b + a.c + a.(b+c)")
E = frozenset()
A, B_, C_ = (frozenset({x}) for x in "abc")

LABELS = {
    "U": lambda t: None,
    "C": lambda t: not step(t),
    "I": initials,
    "T": traces,
}


def test_lgo_examples():
    assert lgo_set(I, parse_term("0")) == {(E,)}
    assert lgo_set(I, parse_term("a.b")) == {(A,), (A, "a", B_), (A, "a", B_, "b", E)}
    assert lgo_set(I, P) == {(A,), (A, "a", B_), (A, "a", C_), (A, "a", B_, "b", E), (A, "a", C_, "c", E)}


@pytest.mark.parametrize("N", [U, C, I, T])
@given(terms())
def test_lgo_set_matches_paths(N, p):
    assert lgo_set(N, p) == naive_lgos(LABELS[N.kind], p)


def test_lgo_set_for_classes_uses_lts_representatives():
    lts = shared_lts(P)
    obs = local_obs(S, lts)
    assert all(o[0] == obs[lts.state(P)] for o in lgo_set(S, P, lts))


def test_failures_example_direction():
    assert lgo_preorder(I, Kind.LFSUP, Q, P)
    assert not lgo_preorder(I, Kind.LFSUP, P, Q)


def test_incomparable_triple():
    assert lgo_preorder(I, Kind.LSUP, P, R) and lgo_preorder(I, Kind.LSUP, R, P)
    assert not lgo_preorder(I, Kind.LFSUB, R, P)
    assert lgo_preorder(I, Kind.LSUB, Q, R) and lgo_preorder(I, Kind.LSUB, R, Q)
    assert not lgo_preorder(I, Kind.LFSUP, R, Q)


def test_class_labels_reject_ordered_kinds():
    with pytest.raises(ValueError):
        lgo_preorder(S, Kind.LSUP, P, Q)
    assert lgo_preorder(S, Kind.L, P, P)


def test_classic_oracle_examples():
    ab = ("a", "b")
    fails = classic_oracle("failures", parse_term("0"), ab)
    assert fails == {((), frozenset(x)) for x in ([], ["a"], ["b"], ["a", "b"])}
    assert classic_oracle("readies", P) == {((), A), (("a",), B_), (("a",), C_),
                                            (("a", "b"), E), (("a", "c"), E)}
    ct = {("a", "b"), ("a", "c")}
    assert classic_oracle("complete_traces", P) == classic_oracle("complete_traces", Q) == ct


@pytest.mark.parametrize("kind,classic", [(Kind.L, "ready_traces"), (Kind.LSUP, "failure_traces"),
                                          (Kind.LF, "readies"), (Kind.LFSUP, "failures")])
@given(terms(leaves=5), terms(leaves=5))
def test_ready_layer_matches_textbook_sets(kind, classic, p, q):
    al = alphabet_of([p, q])
    assert lgo_preorder(I, kind, p, q, shared_lts(p, q, alphabet=al)) == classic_preorder(classic, p, q, al)


@given(terms(leaves=5), terms(leaves=5))
def test_meet_matches_revivals(p, q):
    al = alphabet_of([p, q])
    assert lgo_preorder(I, Kind.LSUP_OR_F, p, q, shared_lts(p, q, alphabet=al)) == \
        classic_preorder("revivals", p, q, al)


@given(terms(leaves=5), terms(leaves=5))
def test_join_is_conjunction(p, q):
    both = lgo_preorder(I, Kind.LF, p, q) and lgo_preorder(I, Kind.LSUP, p, q)
    assert lgo_preorder(I, Kind.LSUP_AND_F, p, q) == both


@given(terms(leaves=5), terms(leaves=5))
def test_meet_cover_equals_union_form(p, q):
    for N in (I, T):
        mine, theirs = lgo_set(N, p), lgo_set(N, q)
        for x in mine:
            cands = [y for y in theirs if y[1::2] == x[1::2]]
            assert lgo_below(N, Kind.LSUP_OR_F, x, cands) == meet_union_form(N, x, cands)


@pytest.mark.parametrize("N,classic", [(U, "traces"), (C, "complete_traces")])
@given(terms(leaves=5), terms(leaves=5))
def test_low_layers_collapse(N, classic, p, q):
    want = classic_preorder(classic, p, q)
    assert {lgo_preorder(N, k, p, q) for k in Kind} == {want}


@given(terms(leaves=5), terms(leaves=5))
def test_trace_set_final_kind_is_possible_futures(p, q):
    assert lgo_preorder(T, Kind.LF, p, q) == classic_preorder("possible_futures", p, q)


@given(terms(leaves=5), terms(leaves=5))
def test_failing_lgos_explain_verdict(p, q):
    for kind in (Kind.L, Kind.LSUP, Kind.LSUB, Kind.LF):
        bad = lgo_failing(I, kind, p, q)
        assert (not bad) == lgo_preorder(I, kind, p, q)
        assert all(len(x) <= len(y) for x, y in zip(bad, bad[1:]))


@given(terms(leaves=5), terms(leaves=5), terms(leaves=5))
def test_linear_preorders_are_transitive(p, q, r):
    for N in (I, T):
        for k in Kind:
            if lgo_preorder(N, k, p, q) and lgo_preorder(N, k, q, r):
                assert lgo_preorder(N, k, p, r)


def test_rendering():
    o = (A, "a", B_)
    assert show_lgo(o) == "{a} -a-> {b}"
    assert lgo_json(o) == [["a"], "a", ["b"]]
