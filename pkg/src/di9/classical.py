"""Bivalent, extensional semantics: truth tables, tautologies, consequence."""

from __future__ import annotations

import itertools
import os
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from di9.errors import BoundExceededError, UndeclaredAtomError
from di9.formula import Atom, Formula, Not, atoms

ClassicalAssignment = Mapping[str, bool]

DEFAULT_MAX_ATOMS = 20


def max_atoms() -> int:
    """Enumeration bound; ``DI9_MAX_ATOMS`` overrides the default of 20."""
    raw = os.environ.get("DI9_MAX_ATOMS")
    if raw is None:
        return DEFAULT_MAX_ATOMS
    bound = int(raw)
    if bound < 0:
        raise ValueError("DI9_MAX_ATOMS must be non-negative")
    return bound


def check_bound(n: int, bound: Optional[int] = None) -> None:
    bound = max_atoms() if bound is None else bound
    if n > bound:
        raise BoundExceededError(f"{n} atoms to enumerate exceeds the bound of {bound}")


def eval_classical(a: ClassicalAssignment, f: Formula) -> bool:
    for name in atoms(f):
        if name not in a:
            raise UndeclaredAtomError(name)
    return _value(a, f)


def _value(a: ClassicalAssignment, f: Formula) -> bool:
    if isinstance(f, Atom):
        return a[f.name]
    if isinstance(f, Not):
        return not _value(a, f.operand)
    return _value(a, f.left) or _value(a, f.right)


def all_assignments(
    names: Iterable[str], bound: Optional[int] = None
) -> Iterator[dict[str, bool]]:
    """Every assignment over ``names``, all-true first, in binary counting order."""
    names = sorted(set(names))
    check_bound(len(names), bound)
    for values in itertools.product((True, False), repeat=len(names)):
        yield dict(zip(names, values))


def is_tautology(f: Formula, bound: Optional[int] = None) -> bool:
    return all(eval_classical(a, f) for a in all_assignments(atoms(f), bound))


def tautological_consequence(
    premises: Sequence[Formula], conclusion: Formula, bound: Optional[int] = None
) -> tuple[bool, Optional[dict[str, bool]]]:
    """Decide ``premises |= conclusion`` by truth table.

    Returns ``(True, None)`` when the consequence holds, otherwise ``False``
    together with the first assignment making every premise true and the
    conclusion false.
    """
    names = set(atoms(conclusion))
    for p in premises:
        names.update(atoms(p))
    for a in all_assignments(names, bound):
        if all(eval_classical(a, p) for p in premises) and not eval_classical(a, conclusion):
            return False, a
    return True, None
