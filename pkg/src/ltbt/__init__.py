"""Decision procedures, logics and observations for the semantics of
finite BCCSP processes."""

from .branching import Bgo, CapExceeded, bgo_included, bgo_set, dbgo_set, det_branching_preorder
from .formula import TOP, And, Dia, Formula, Not, Or, parse_formula, satisfies, show_formula
from .linear import Kind, classic_oracle, lgo_preorder, lgo_set
from .logics import bounded_preorder, enumerate_formulas, family_by_name, logic_membership
from .normal import (NormalFormula, complete_normal, distinguishing_formula, formula_to_obs,
                     normalize, obs_to_formula, obs_to_normal)
from .process import Lts, Term, build_lts, parse_term, show
from .semantics import REGISTERED, SemanticsId, resolve
from .simulation import C, I, KS, S, T, U, Constraint, bisimilar, constrained_simulation
from .spectrum import EDGES, Verdict, compare, hierarchy_check, holds, matrix

__version__ = "0.1.0"

__all__ = [
    "Bgo", "CapExceeded", "bgo_included", "bgo_set", "dbgo_set", "det_branching_preorder",
    "TOP", "And", "Dia", "Formula", "Not", "Or", "parse_formula", "satisfies", "show_formula",
    "Kind", "classic_oracle", "lgo_preorder", "lgo_set",
    "bounded_preorder", "enumerate_formulas", "family_by_name", "logic_membership",
    "NormalFormula", "complete_normal", "distinguishing_formula", "formula_to_obs",
    "normalize", "obs_to_formula", "obs_to_normal",
    "Lts", "Term", "build_lts", "parse_term", "show",
    "REGISTERED", "SemanticsId", "resolve",
    "C", "I", "KS", "S", "T", "U", "Constraint", "bisimilar", "constrained_simulation",
    "EDGES", "Verdict", "compare", "hierarchy_check", "holds", "matrix",
]
