"""Worked examples bundled with the package, checked by ``ltbt selftest``.

Each check is a named zero-argument predicate.  The corpus also serves as
the strictness witnesses for the hierarchy edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .formula import parse_formula, satisfies
from .linear import Kind, classic_preorder, lgo_preorder
from .logics import Classic, Unified, bounded_witness, logic_membership
from .normal import distinguishing_formula
from .process import Term, alphabet_of, parse_term
from .semantics import resolve
from .simulation import C, I, T, U
from .spectrum import holds

__all__ = ["CORPUS", "Check", "checks", "run_checks", "STRICT_EDGES", "PW_PAIR", "JOIN_PAIR", "WORLDS",
           "INCOMPARABLE"]

CORPUS: dict[str, Term] = {name: parse_term(text) for name, text in {
    "P1": "a.b + a + a.(b.d + c + e)",
    "P2": "a.b + a.(b.d + c) + a.(b.d + c + e)",
    "P3": "a.b + a.b.d + a.(b.d + c + e)",
    "P4": "a.b + a.(b.d + c + e)",
    "P5": "a.b.c + a.b.(c + d) + a.b.d",
    "P6": "a.b.c + a.b.d",
    "P7": "a.(b.c + b.d)",
    "P8": "a.(b.c + b.d) + a.b.c",
}.items()}

INCOMPARABLE = tuple(parse_term(t) for t in ("a.b + a.c", "a.(b + c)", "a.b + a.c + a.(b + c)"))
PW_PAIR = (parse_term("a.b.c + a.(b.c + d) + a.b"), parse_term("a.(b.c + d) + a.b"))
JOIN_PAIR = (parse_term("a.b.c + a.(b.d + c)"),
            parse_term("a.b.c + a.(b.d + c) + a.(b.c + c)"))
# same ready traces, but the last summand mixes the worlds of the first two
WORLDS = (parse_term("a.(b.b + c.c) + a.(b.c + c.b) + a.(b.b + c.b)"),
          parse_term("a.(b.b + c.c) + a.(b.c + c.b)"))


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], bool]


def _p(name: str) -> Term:
    return CORPUS[name]


def _equiv(sems, p: Term, q: Term) -> bool:
    return all(holds(s, p, q) and holds(s, q, p) for s in sems)


def _fails(sems, p: Term, q: Term) -> bool:
    return not any(holds(s, p, q) for s in sems)


def _witness(text: str, p: Term, q: Term) -> bool:
    f = parse_formula(text, alphabet_of([p, q]))
    return satisfies(p, f) and not satisfies(q, f)


def _synth(sems, p: Term, q: Term) -> bool:
    al = alphabet_of([p, q])
    for s in sems:
        f = distinguishing_formula(resolve(s), p, q, al)
        if f is None or not satisfies(p, f) or satisfies(q, f):
            return False
    return True


def _corpus_checks() -> list[Check]:
    four = ("F", "R", "FT", "RT", "RS")
    return [
        Check("corpus: P1 not below P2 (F, R, FT, RT, RS)",
              lambda: _fails(four, _p("P1"), _p("P2")) and _synth(four, _p("P1"), _p("P2"))),
        Check("corpus: a.(~b & ~c) separates P1 from P2",
              lambda: _witness("a.(~b & ~c)", _p("P1"), _p("P2"))),
        Check("corpus: P2 ~F P3, not below for R, FT, RT, RS",
              lambda: _equiv(["F"], _p("P2"), _p("P3"))
              and _fails(["R", "FT", "RT", "RS"], _p("P2"), _p("P3"))),
        Check("corpus: a.(~e & c) separates P2 from P3",
              lambda: _witness("a.(~e & c)", _p("P2"), _p("P3"))),
        Check("corpus: P3 ~F,R P4, not below for FT, RT, RS",
              lambda: _equiv(["F", "R"], _p("P3"), _p("P4"))
              and _fails(["FT", "RT", "RS"], _p("P3"), _p("P4"))),
        Check("corpus: a.(~c & b.(~e & d)) separates P3 from P4",
              lambda: _witness("a.(~c & b.(~e & d))", _p("P3"), _p("P4"))),
        Check("corpus: P5 ~F,FT P6, not below for R, RT, RS",
              lambda: _equiv(["F", "FT"], _p("P5"), _p("P6"))
              and _fails(["R", "RT", "RS"], _p("P5"), _p("P6"))),
        Check("corpus: a.b.(c & d) separates P5 from P6",
              lambda: _witness("a.b.(c & d)", _p("P5"), _p("P6"))),
        Check("corpus: P6 ~F,R,RT,FT P7, P7 not below P6 for RS",
              lambda: _equiv(["F", "R", "RT", "FT"], _p("P6"), _p("P7"))
              and _fails(["RS"], _p("P7"), _p("P6"))),
        Check("corpus: a.(b.c & b.d) separates P7 from P6",
              lambda: _witness("a.(b.c & b.d)", _p("P7"), _p("P6"))),
        Check("corpus: P7 ~F,R,RT,FT,RS P8",
              lambda: _equiv(["F", "R", "RT", "FT", "RS"], _p("P7"), _p("P8"))),
        Check("corpus: P7 and P8 are not bisimilar",
              lambda: not holds("B", _p("P7"), _p("P8")) or not holds("B", _p("P8"), _p("P7"))),
    ]


def _incomparable() -> list[Check]:
    p, q, r = INCOMPARABLE
    return [
        Check("a.b+a.c vs a.(b+c): l-sup equivalent to the sum, sum not lf-sub below",
              lambda: lgo_preorder(I, Kind.LSUP, p, r) and lgo_preorder(I, Kind.LSUP, r, p)
              and not lgo_preorder(I, Kind.LFSUB, r, p)),
        Check("a.b+a.c vs a.(b+c): l-sub equivalent to the sum, sum not lf-sup below",
              lambda: lgo_preorder(I, Kind.LSUB, q, r) and lgo_preorder(I, Kind.LSUB, r, q)
              and not lgo_preorder(I, Kind.LFSUP, r, q)),
    ]


def _pw() -> list[Check]:
    p, q = PW_PAIR
    al = ("a", "b", "c", "d")
    return [
        Check("possible worlds: dBGO inclusion separates the pair",
              lambda: not holds("PW", p, q) and _synth(["PW"], p, q)),
        Check("possible worlds: a.(~d & b.c) separates and is a D_I formula",
              lambda: _witness("a.(~d & b.c)", p, q)
              and logic_membership(parse_formula("a.(~d & b.c)", al), Unified(resolve("PW")), al)),
        Check("possible worlds: classic PW formulas up to depth 3 do not separate",
              lambda: not bounded_witness(Classic("PW"), p, q, al, 3)
              and not bounded_witness(Classic("PW"), q, p, al, 3)),
    ]


def _join_checks() -> list[Check]:
    p, q = JOIN_PAIR
    return [
        Check("join and ready traces: p ~R&FT q", lambda: _equiv(["RFT"], p, q)),
        Check("join and ready traces: p and q differ for RT, witness verifies",
              lambda: not (holds("RT", p, q) and holds("RT", q, p))
              and _synth([s for s in ("RT",) if not holds(s, p, q)], p, q)
              and _synth([s for s in ("RT",) if not holds(s, q, p)], q, p)),
        Check("revivals: P2 ~F P3 but P2 not below P3",
              lambda: _equiv(["F"], _p("P2"), _p("P3")) and not holds("RV", _p("P2"), _p("P3"))),
        Check("join is the conjunction of R and FT on the corpus",
              lambda: all(holds("RFT", x, y) == (holds("R", x, y) and holds("FT", x, y))
                          for x in CORPUS.values() for y in CORPUS.values())),
    ]


def _collapse() -> list[Check]:
    kinds = list(Kind)
    terms = list(CORPUS.values()) + list(INCOMPARABLE)

    def agree(N, classic):
        for x in terms:
            for y in terms:
                want = classic_preorder(classic, x, y)
                if any(lgo_preorder(N, k, x, y) != want for k in kinds):
                    return False
        return True

    def pf():
        return all(lgo_preorder(T, Kind.LF, x, y) == classic_preorder("possible_futures", x, y)
                   for x in terms for y in terms)

    return [
        Check("trace layer: all linear kinds equal trace inclusion", lambda: agree(U, "traces")),
        Check("completed trace layer: all linear kinds equal completed trace inclusion",
              lambda: agree(C, "complete_traces")),
        Check("trace-set constraint, final kind: possible futures inclusion", pf),
    ]


def _strictness() -> list[Check]:
    def edge(a: str, b: str) -> Check:
        def run() -> bool:
            pool = list(CORPUS.values()) + list(INCOMPARABLE) + list(PW_PAIR) + list(JOIN_PAIR) + list(WORLDS)
            return any(holds(b, x, y) and not holds(a, x, y) for x in pool for y in pool)
        return Check(f"strict edge {a} > {b} has a bundled witness pair", run)

    return [edge(a, b) for a, b in STRICT_EDGES]


#: edges the bundled examples separate
STRICT_EDGES = (("RS", "RT"), ("RT", "R"), ("RT", "FT"), ("FT", "F"), ("R", "F"),
                ("PW", "RT"), ("RS", "PW"), ("RT", "RFT"), ("RV", "F"), ("B", "RS"))


def checks() -> list[Check]:
    return _corpus_checks() + _incomparable() + _pw() + _join_checks() + _collapse() + _strictness()


def run_checks() -> list[tuple[str, bool]]:
    out = []
    for c in checks():
        try:
            ok = bool(c.run())
        except Exception:  # a crash is a failed check
            ok = False
        out.append((c.name, ok))
    return out
