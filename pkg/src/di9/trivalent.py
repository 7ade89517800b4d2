"""Truth at a moment in a world.

Two evaluators are kept deliberately separate:

* :func:`eval_recursive` follows the clause-by-clause definition. Atoms read
  their timeline, negation swaps T and F, and a disjunction is decided by
  looking at the classical values of its disjuncts in every possible
  continuation of the world from the moment on.
* :func:`eval_supervaluation` never looks at the structure of the formula:
  it evaluates the whole formula classically in every continuation and
  reports T or F only when all continuations agree.

Both reduce "every continuation" to the finite set produced by
:func:`di9.world.j_completions`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from di9.classical import eval_classical
from di9.errors import InvalidTimeError
from di9.formula import Atom, Formula, Not, atoms
from di9.tri import Tri
from di9.world import ALWAYS, TimePoint, Valuation, as_time, check_moment, j_completions

Evaluator = Callable[[Valuation, Formula, TimePoint], Tri]


def induced_classical(v: Valuation, names: Optional[Iterable[str]] = None) -> dict[str, bool]:
    """The bivalent assignment each atom eventually realises in ``v``."""
    names = v.atoms if names is None else sorted(set(names))
    return {n: v.timeline(n).final_value for n in names}


def eval_recursive(v: Valuation, f: Formula, j: TimePoint, bound: Optional[int] = None) -> Tri:
    j = as_time(j)
    check_moment(j)
    v.require(atoms(f))
    return _recursive(v, f, j, bound)


def _recursive(v: Valuation, f: Formula, j: TimePoint, bound: Optional[int]) -> Tri:
    if isinstance(f, Atom):
        return v.timeline(f.name).value_at(j)
    if isinstance(f, Not):
        return _recursive(v, f.operand, j, bound).negate()
    all_true = all_false = True
    for c in j_completions(v, j, atoms(f), bound):
        b, d = eval_classical(c, f.left), eval_classical(c, f.right)
        if not (b or d):
            all_true = False
        if b or d:
            all_false = False
        if not (all_true or all_false):
            return Tri.O
    if all_true:
        return Tri.T
    if all_false:
        return Tri.F
    return Tri.O


def eval_supervaluation(
    v: Valuation, f: Formula, j: TimePoint, bound: Optional[int] = None
) -> Tri:
    j = as_time(j)
    check_moment(j)
    seen = set()
    for c in j_completions(v, j, atoms(f), bound):
        seen.add(eval_classical(c, f))
        if len(seen) == 2:
            return Tri.O
    (value,) = seen
    return Tri.of(value)


def settlement(
    v: Valuation, f: Formula, evaluate: Optional[Evaluator] = None
) -> tuple[TimePoint, bool]:
    """Earliest moment at which ``f`` has a truth value in ``v``, and that value.

    The value of ``f`` can only change where one of its atoms settles, so it
    suffices to probe once below the first settlement and then at each one.
    Returns ``(ALWAYS, w)`` when ``f`` is decided before anything settles.
    """
    evaluate = evaluate or eval_recursive
    names = atoms(f)
    v.require(names)
    moments = v.settlement_moments(names)
    below = moments[0] - 1 if moments else Fraction(0)
    value = evaluate(v, f, below)
    if value.is_truth_value:
        return ALWAYS, value is Tri.T
    for s in moments:
        value = evaluate(v, f, s)
        if value.is_truth_value:
            return s, value is Tri.T
    raise RuntimeError(f"formula never settles: {f!r}")


@dataclass(frozen=True)
class Trajectory:
    points: tuple[tuple[Fraction, Tri], ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


def trajectory(
    v: Valuation, f: Formula, probes: Sequence[TimePoint], bound: Optional[int] = None
) -> Trajectory:
    probes = [as_time(t) for t in probes]
    for t in probes:
        check_moment(t)
    if any(a >= b for a, b in zip(probes, probes[1:])):
        raise InvalidTimeError("probe moments must be strictly increasing")
    return Trajectory(tuple((t, eval_recursive(v, f, t, bound)) for t in probes))
