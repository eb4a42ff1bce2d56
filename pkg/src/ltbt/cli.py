"""Command line front end.

Exit codes: 0 the relation holds (or the command succeeded), 1 it fails,
2 usage or parse error, 3 observation cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .branching import CapExceeded, bgo_json, bgo_set, dbgo_set, show_bgo
from .formula import SugarError, parse_formula, satisfies, show_formula
from .linear import lgo_json, lgo_set, show_lgo
from .logics import enumerate_formulas, family_by_name
from .normal import distinguishing_formula
from .process import ParseError, alphabet_of, parse_term, show
from .randomterms import random_pairs
from .selftest import run_checks
from .semantics import DET, LINEAR, REGISTERED, SIM, resolve
from .simulation import constraint_by_name, shared_lts
from .spectrum import compare, hierarchy_check, holds, matrix_json

__all__ = ["main", "run_command", "build_parser"]

OK, FAILS, USAGE, CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Usage(f"{self.prog}: error: {message}")


class _Usage(Exception):
    pass


def _acts(text: str | None) -> list[str]:
    return [a.strip() for a in text.split(",") if a.strip()] if text else []


def _alphabet(args, terms) -> tuple[str, ...]:
    return alphabet_of(terms, _acts(args.alphabet))


def _header(alphabet) -> str:
    return "alphabet: {" + ",".join(alphabet) + "}"


def _emit(args, payload: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


def _cmd_check(args) -> int:
    p, q = parse_term(args.p), parse_term(args.q)
    al = _alphabet(args, [p, q])
    sem = resolve(args.semantics)
    if args.both:
        v = compare(sem, p, q, al)
        lines = [_header(al), f"{args.semantics}: forward {v.forward}, backward {v.backward}, {v.relation}"]
        if v.witness_forward is not None:
            lines.append(f"p satisfies, q does not: {show_formula(v.witness_forward)}")
        if v.witness_backward is not None:
            lines.append(f"q satisfies, p does not: {show_formula(v.witness_backward)}")
        _emit(args, {"alphabet": list(al), **v.to_json()}, lines)
        return OK if v.forward and v.backward else FAILS
    ok = holds(sem, p, q, al)
    lines = [_header(al), f"{args.semantics}: {'holds' if ok else 'fails'}"]
    payload = {"alphabet": list(al), "semantics": args.semantics, "holds": ok}
    if not ok:
        f = distinguishing_formula(sem, p, q, al)
        lines.append(f"witness: {show_formula(f)}")
        payload["witness"] = show_formula(f)
    _emit(args, payload, lines)
    return OK if ok else FAILS


def _cmd_distinguish(args) -> int:
    p, q = parse_term(args.p), parse_term(args.q)
    al = _alphabet(args, [p, q])
    f = distinguishing_formula(resolve(args.semantics), p, q, al)
    text = None if f is None else show_formula(f)
    _emit(args, {"alphabet": list(al), "semantics": args.semantics, "witness": text},
          [_header(al), text if text else "no distinguishing formula: the preorder holds"])
    return OK if f is None else FAILS


def _cmd_matrix(args) -> int:
    p, q = parse_term(args.p), parse_term(args.q)
    al = _alphabet(args, [p, q])
    doc = matrix_json(p, q, al)
    lines = [_header(al), f"p = {show(p)}", f"q = {show(q)}"]
    for cell in doc["cells"]:
        row = f"{cell['semantics']:>4}  {cell['relation']}"
        for side, w in cell.get("witness", {}).items():
            row += f"  [{side}: {w}]"
        lines.append(row)
    _emit(args, doc, lines)
    return OK


def _cmd_obs(args) -> int:
    p = parse_term(args.p)
    al = _alphabet(args, [p])
    lts = shared_lts(p, alphabet=al)
    if args.semantics:
        sem = resolve(args.semantics)
        N = sem.constraint
        kind = args.kind or {LINEAR: "lgo", SIM: "bgo", DET: "dbgo"}.get(sem.flavor, "bgo")
    else:
        N = constraint_by_name(args.constraint)
        kind = args.kind or "lgo"
    if kind == "lgo":
        obs = sorted(lgo_set(N, p, lts), key=lambda o: (len(o), show_lgo(o)))
        text, js = [show_lgo(o) for o in obs], [lgo_json(o) for o in obs]
    else:
        got = bgo_set(N, p, lts) if kind == "bgo" else dbgo_set(N, p, lts)
        text = sorted(show_bgo(t) for t in got)
        js = [bgo_json(t) for t in sorted(got, key=show_bgo)]
    _emit(args, {"alphabet": list(al), "constraint": str(N), "kind": kind, "observations": js},
          [_header(al), f"{kind} observations of {show(p)} for {N}: {len(text)}"] + text)
    return OK


def _cmd_sat(args) -> int:
    p = parse_term(args.p)
    al = alphabet_of([p], _acts(args.alphabet))
    f = parse_formula(args.phi, al)
    ok = satisfies(p, f)
    _emit(args, {"alphabet": list(al), "formula": show_formula(f), "satisfied": ok},
          [_header(al), f"{show(p)} {'satisfies' if ok else 'does not satisfy'} {show_formula(f)}"])
    return OK if ok else FAILS


def _cmd_enumerate(args) -> int:
    al = tuple(sorted(set(_acts(args.alphabet) or ["a", "b"])))
    fam = family_by_name(args.semantics)
    out = [show_formula(f) for f in enumerate_formulas(fam, al, args.depth, args.width)]
    _emit(args, {"alphabet": list(al), "family": str(fam), "formulas": out},
          [_header(al), f"{fam}: {len(out)} formulas"] + out)
    return OK


def _cmd_selftest(args) -> int:
    results = run_checks()
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results]
    bad = sum(not ok for _, ok in results)
    lines.append(f"{len(results) - bad} passed, {bad} failed")
    _emit(args, {"checks": [{"name": n, "pass": ok} for n, ok in results]}, lines)
    return OK if not bad else FAILS


def _cmd_fuzz(args) -> int:
    acts = tuple(_acts(args.alphabet) or ["a", "b", "c"])
    pairs = random_pairs(args.seed, args.count, args.max_size, acts, args.max_depth)
    names = REGISTERED
    report, failures, skipped = [], 0, 0
    for k, (p, q) in enumerate(pairs):
        al = alphabet_of([p, q], acts)
        problems = [f"edge {a}>{b} violated" for a, b in hierarchy_check(p, q, al)]
        try:
            for n in names:
                sem = resolve(n)
                if holds(sem, p, q, al) != (distinguishing_formula(sem, p, q, al) is None):
                    problems.append(f"{n}: verdict and witness disagree")
        except CapExceeded:
            skipped += 1
            report.append({"index": k, "p": show(p), "q": show(q), "status": "skipped"})
            continue
        except AssertionError as e:
            problems.append(f"witness check failed: {e}")
        failures += bool(problems)
        report.append({"index": k, "p": show(p), "q": show(q),
                       "status": "fail" if problems else "pass", "problems": problems})
    lines = [_header(acts), f"seed {args.seed}: {len(pairs)} pairs, {failures} failing, {skipped} skipped"]
    lines += [f"#{r['index']} {r['p']}  vs  {r['q']}: {'; '.join(r['problems'])}"
              for r in report if r["status"] == "fail"]
    _emit(args, {"alphabet": list(acts), "seed": args.seed, "pairs": report,
                 "failing": failures, "skipped": skipped}, lines)
    return OK if not failures else FAILS


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ltbt", description="Process semantics checker.")
    ap.add_argument("--cap", type=float, help="observation enumeration cap")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, alphabet=True):
        sp.add_argument("--json", action="store_true", help="machine readable output")
        if alphabet:
            sp.add_argument("--alphabet", help="extra actions, comma separated")
        return sp

    sp = common(sub.add_parser("check", help="decide p below q"))
    sp.add_argument("-s", "--semantics", required=True)
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--both", action="store_true", help="check both directions")
    sp.set_defaults(run=_cmd_check)

    sp = common(sub.add_parser("distinguish", help="formula true of p and false of q"))
    sp.add_argument("-s", "--semantics", required=True)
    sp.add_argument("p")
    sp.add_argument("q")
    sp.set_defaults(run=_cmd_distinguish)

    sp = common(sub.add_parser("matrix", help="all registered semantics"))
    sp.add_argument("p")
    sp.add_argument("q")
    sp.set_defaults(run=_cmd_matrix)

    sp = common(sub.add_parser("obs", help="list observations"))
    who = sp.add_mutually_exclusive_group(required=True)
    who.add_argument("-s", "--semantics")
    who.add_argument("-N", "--constraint")
    sp.add_argument("--kind", choices=("lgo", "bgo", "dbgo"))
    sp.add_argument("p")
    sp.set_defaults(run=_cmd_obs)

    sp = common(sub.add_parser("sat", help="model check a formula"))
    sp.add_argument("p")
    sp.add_argument("phi")
    sp.set_defaults(run=_cmd_sat)

    sp = common(sub.add_parser("enumerate", help="bounded formulas of a logic"))
    sp.add_argument("-s", "--semantics", required=True,
                    help="semantics name or classic:NAME, constraint:N, closure:N:KIND")
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--width", type=int, required=True)
    sp.set_defaults(run=_cmd_enumerate)

    sp = common(sub.add_parser("selftest", help="check the bundled examples"), alphabet=False)
    sp.set_defaults(run=_cmd_selftest)

    sp = common(sub.add_parser("fuzz", help="random pairs against all checks"))
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--max-size", type=int, default=12)
    sp.add_argument("--max-depth", type=int, default=4)
    sp.set_defaults(run=_cmd_fuzz)
    return ap


def run_command(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _Usage as e:
        print(e, file=sys.stderr)
        return USAGE
    except SystemExit as e:  # --help
        return OK if e.code in (0, None) else USAGE
    if args.cap is not None:
        os.environ["SPECTRUM_CAP"] = str(int(args.cap))
    try:
        return args.run(args)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return CAP
    except (ParseError, SugarError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
