"""Temporally relative, trivalent semantics for classical propositional logic."""

from di9.classical import all_assignments, eval_classical, is_tautology, tautological_consequence
from di9.consequence import (
    ConsequenceVerdict,
    bounded_refutation_search,
    di9_consequence,
    di9_logical_truth,
    satisfies,
)
from di9.errors import (
    BoundExceededError,
    DI9Error,
    FormulaSyntaxError,
    InvalidTimeError,
    MismatchedAtomsError,
    UndeclaredAtomError,
    WorldSyntaxError,
)
from di9.formula import Atom, Formula, Not, Or, atoms, parse, render
from di9.tri import Tri
from di9.trivalent import (
    eval_recursive,
    eval_supervaluation,
    induced_classical,
    settlement,
    trajectory,
)
from di9.world import (
    ALWAYS,
    AtomTimeline,
    Valuation,
    atom_value_at,
    is_j_extension,
    j_completions,
    lift_classical,
    parse_time,
    parse_world,
    render_world,
)

__version__ = "0.1.0"
