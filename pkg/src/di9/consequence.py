"""Satisfaction, logical consequence and logical truth over temporal worlds.

Consequence quantifies over every world and every moment, so it cannot be
checked directly. :func:`di9_consequence` decides it through the truth-table
reduction and backs a negative answer with a constant world that refutes it.
:func:`bounded_refutation_search` is an independent falsification route: it
samples non-constant worlds and moments looking for a refutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from di9.classical import tautological_consequence
from di9.formula import Formula, atoms
from di9.tri import Tri
from di9.world import ALWAYS, AtomTimeline, TimePoint, Valuation, lift_classical
from di9.trivalent import Evaluator, eval_recursive

WITNESS_MOMENT = Fraction(0)


@dataclass(frozen=True)
class ConsequenceVerdict:
    holds: bool
    countermodel: Optional[tuple[Valuation, TimePoint]] = None

    def __post_init__(self):
        if self.holds == (self.countermodel is not None):
            raise ValueError("a failing verdict needs a countermodel and a holding one none")

    def __bool__(self) -> bool:
        return self.holds


def satisfies(v: Valuation, f: Formula, j: TimePoint, evaluate: Evaluator = eval_recursive) -> bool:
    return evaluate(v, f, j) is Tri.T


def refutes(
    v: Valuation,
    j: TimePoint,
    premises: Sequence[Formula],
    conclusion: Formula,
    evaluate: Evaluator = eval_recursive,
) -> bool:
    """True iff every premise is true at ``j`` in ``v`` and the conclusion is not."""
    return all(satisfies(v, p, j, evaluate) for p in premises) and not satisfies(
        v, conclusion, j, evaluate
    )


def di9_consequence(
    premises: Sequence[Formula], conclusion: Formula, bound: Optional[int] = None
) -> ConsequenceVerdict:
    holds, assignment = tautological_consequence(premises, conclusion, bound)
    if holds:
        return ConsequenceVerdict(True)
    return ConsequenceVerdict(False, (lift_classical(assignment), WITNESS_MOMENT))


def di9_logical_truth(f: Formula, bound: Optional[int] = None) -> ConsequenceVerdict:
    return di9_consequence([], f, bound)


@dataclass(frozen=True)
class SearchParams:
    seed: int = 0
    iterations: int = 1000
    time_range: int = 10
    probe_range: int = 12
    max_denominator: int = 4
    always_weight: float = 0.25


def _draw_time(rng: random.Random, span: int, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-span * den, span * den), den)


def bounded_refutation_search(
    premises: Sequence[Formula],
    conclusion: Formula,
    params: SearchParams = SearchParams(),
    evaluate: Evaluator = eval_recursive,
) -> Optional[tuple[Valuation, Fraction]]:
    """Sample worlds and moments; return the first refutation found, if any.

    Half of the probes land exactly on a settlement moment so that boundary
    behaviour gets exercised.
    """
    rng = random.Random(params.seed)
    names = set(atoms(conclusion))
    for p in premises:
        names.update(atoms(p))
    names = sorted(names)
    for _ in range(params.iterations):
        timelines = {}
        for n in names:
            if rng.random() < params.always_weight:
                when = ALWAYS
            else:
                when = _draw_time(rng, params.time_range, params.max_denominator)
            timelines[n] = AtomTimeline(when, rng.random() < 0.5)
        v = Valuation(timelines)
        finite = v.settlement_moments()
        if finite and rng.random() < 0.5:
            j = rng.choice(finite)
        else:
            j = _draw_time(rng, params.probe_range, params.max_denominator)
        if refutes(v, j, premises, conclusion, evaluate):
            return v, j
    return None
