import pytest
from hypothesis import given, settings

from ltbt.formula import TOP, Dia, Not, Or, conj, parse_formula, satisfies
from ltbt.logics import (Classic, Closure, ConstraintLogic, MaskAlgebra, SyntaxAlgebra, Unified,
                         bounded_preorder, default_bounds, enumerate_formulas, family_by_name,
                         formulas_of, logic_membership)
from ltbt.process import alphabet_of, parse_term
from ltbt.semantics import REGISTERED, resolve
from ltbt.simulation import I, T, U, shared_lts
from ltbt.spectrum import holds

from conftest import terms

ABC = ("a", "b", "c")
ABCD = ("a", "b", "c", "d")


def f(text, alphabet=ABC):
    return parse_formula(text, alphabet)


def test_join_formula_is_in_unified_but_not_classic_ready_traces():
    phi = f("~b & a")
    assert logic_membership(phi, Unified(resolve("RT")), ABC)
    assert not logic_membership(phi, Classic("RT"), ABC)
    # over {a, b} the same conjunction is an exact ready set, hence classic
    assert logic_membership(f("~b & a", ("a", "b")), Classic("RT"), ("a", "b"))


def test_possible_worlds_formula_membership():
    assert logic_membership(f("a.(~d & b.c)", ABCD), Unified(resolve("PW")), ABCD)


def test_revivals_membership():
    rv = Unified(resolve("RV"))
    assert logic_membership(f("a.(~b & c)"), rv, ABC)
    assert not logic_membership(f("a.(b & c)"), rv, ABC)


def test_membership_rejects_disjunction_and_accepts_full_logic():
    with pytest.raises(ValueError):
        logic_membership(Or((TOP, Dia("a", TOP))), Unified(resolve("T")), ABC)
    assert logic_membership(f("~a.~(b & ~c)"), Unified(resolve("B")), ABC)


def test_membership_in_base_and_closure_logics():
    nz = Not(f("0"))
    assert logic_membership(nz, ConstraintLogic(I), ABC)
    assert not logic_membership(Not(Dia("a", TOP)), ConstraintLogic(I), ABC)
    assert logic_membership(Not(Dia("a", TOP)), Closure(I, "neg"), ABC)
    assert not logic_membership(Dia("a", TOP), Closure(I, "neg"), ABC)
    assert logic_membership(conj(Dia("a", TOP), Not(Dia("b", TOP))), Closure(I, "sym"), ABC)
    assert logic_membership(f("a.b.c"), ConstraintLogic(T), ABC)
    assert not logic_membership(f("a & b"), ConstraintLogic(T), ABC)
    assert not logic_membership(Dia("a", TOP), ConstraintLogic(U), ABC)


def test_enumeration_examples():
    assert list(enumerate_formulas(Classic("T"), ("a",), 2, 1)) == [TOP, f("a"), f("a.a")]
    got = set(enumerate_formulas(ConstraintLogic(I), ("a", "b"), 1, 4))
    assert got == {TOP, Not(f("0", ("a", "b"))), f("a"), f("b")}
    fail1 = list(enumerate_formulas(Unified(resolve("F")), ("a",), 1, 1))
    assert f("a", ("a",)) in fail1 and Not(f("a", ("a",))) in fail1
    assert all(logic_membership(x, Unified(resolve("F")), ("a",)) for x in fail1)


def test_family_names():
    assert family_by_name("RT") == Unified(resolve("RT"))
    assert family_by_name("classic:PW") == Classic("PW")
    assert family_by_name("constraint:I") == ConstraintLogic(I)
    assert family_by_name("closure:I:neg") == Closure(I, "neg")
    with pytest.raises(ValueError):
        family_by_name("nope:x")


FAMILIES = [Unified(resolve(n)) for n in ("T", "CT", "F", "R", "FT", "RT", "RV", "PO", "POT",
                                          "PF", "IF", "PW", "S", "CS", "RS", "TS")]
FAMILIES += [Classic(n) for n in ("T", "CT", "F", "R", "FT", "RT", "PW", "S", "CS", "RS", "PF")]


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_generated_formulas_are_members(family):
    for x in formulas_of(family, ("a", "b"), 2, 2, SyntaxAlgebra()):
        assert logic_membership(x, family, ("a", "b")), x


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_mask_algebra_matches_syntax(family):
    p, q = parse_term("a.(a + b) + a.b"), parse_term("a.a + b.(a + b.a)")
    lts = shared_lts(p, q, alphabet=("a", "b"))
    roots = [lts.state(p), lts.state(q)]
    alg = MaskAlgebra(lts, roots, 2)
    masks = formulas_of(family, ("a", "b"), 2, 2, alg)
    syntax = formulas_of(family, ("a", "b"), 2, 2, SyntaxAlgebra())
    expect = {sum(1 << r for r in roots if satisfies(lts.term_of[r], x)) for x in syntax}
    assert masks == expect


def test_classic_possible_worlds_misses_the_pair():
    p = parse_term("a.b.c + a.(b.c + d) + a.b")
    q = parse_term("a.(b.c + d) + a.b")
    assert bounded_preorder(Classic("PW"), p, q, ABCD, 3) and bounded_preorder(Classic("PW"), q, p, ABCD, 3)
    assert not bounded_preorder(Unified(resolve("PW")), p, q, ABCD)


def test_default_bounds():
    p, q = parse_term("a.b"), parse_term("a.b.c")
    assert default_bounds(p, q, ABC) == (4, 6)


@settings(max_examples=25)
@given(terms(leaves=5), terms(leaves=5))
def test_bounded_logic_agrees_with_observations(p, q):
    al = alphabet_of([p, q])
    for name in REGISTERED:
        assert bounded_preorder(resolve(name), p, q, al) == holds(name, p, q, al), name
