"""Temporal worlds: settlement timelines per atom, j-extensions, world files.

A world assigns each declared atom a timeline ``(settles_at, final_value)``:
the atom has no truth value strictly before ``settles_at`` and carries
``final_value`` from ``settles_at`` on. ``ALWAYS`` sits below every rational
and marks atoms decided at every moment.

World file format, one directive per line::

    # comment
    atom p settles 5 T
    atom q settles always F
    atom r settles -7/2 T
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Mapping, Optional, Union

from di9.classical import ClassicalAssignment, check_bound
from di9.errors import (
    InvalidTimeError,
    MismatchedAtomsError,
    UndeclaredAtomError,
    WorldSyntaxError,
)
from di9.formula import ATOM_NAME
from di9.tri import Tri


@total_ordering
class _Always:
    """The moment below every rational ("from eternity")."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ALWAYS"

    def __str__(self) -> str:
        return "always"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("di9.ALWAYS")

    def __lt__(self, other) -> bool:
        if other is self:
            return False
        if isinstance(other, Fraction):
            return True
        return NotImplemented

    def __reduce__(self):
        return (_Always, ())


ALWAYS = _Always()

TimePoint = Union[Fraction, _Always]

_RATIONAL = re.compile(r"(-?\d+)(?:/(\d+))?")


def parse_time(text: str, allow_always: bool = True) -> TimePoint:
    """Parse ``n``, ``n/d`` (``d > 0``) or ``always``."""
    text = text.strip()
    if text == "always":
        if not allow_always:
            raise InvalidTimeError("'always' is not a valid query moment")
        return ALWAYS
    m = _RATIONAL.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"malformed rational: {text!r} (zero denominator)")
    return Fraction(int(m.group(1)), den)


def render_time(t: TimePoint) -> str:
    return str(t)


def as_time(t) -> TimePoint:
    if t is ALWAYS or isinstance(t, Fraction):
        return t
    if isinstance(t, int):
        return Fraction(t)
    if isinstance(t, str):
        return parse_time(t)
    raise TypeError(f"not a time point: {t!r}")


def check_moment(t: TimePoint) -> None:
    if t is ALWAYS:
        raise InvalidTimeError("queries need an actual moment, not ALWAYS")


@dataclass(frozen=True)
class AtomTimeline:
    settles_at: TimePoint
    final_value: bool

    def __post_init__(self):
        object.__setattr__(self, "settles_at", as_time(self.settles_at))
        if not isinstance(self.final_value, bool):
            raise TypeError("final_value must be a bool")

    def value_at(self, t: TimePoint) -> Tri:
        if t >= self.settles_at:
            return Tri.of(self.final_value)
        return Tri.O

    def settled_by(self, t: TimePoint) -> bool:
        return self.settles_at <= t


@dataclass(frozen=True)
class Valuation:
    """A finite world: one timeline per declared atom."""

    timelines: Mapping[str, AtomTimeline] = field(default_factory=dict)

    def __post_init__(self):
        for name in self.timelines:
            if not ATOM_NAME.fullmatch(name):
                raise ValueError(f"invalid atom name: {name!r}")
        object.__setattr__(self, "timelines", dict(sorted(self.timelines.items())))

    @classmethod
    def of(cls, **spec: tuple) -> "Valuation":
        """Shorthand: ``Valuation.of(p=(5, True), q=(ALWAYS, False))``."""
        return cls({name: AtomTimeline(*tl) for name, tl in spec.items()})

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(self.timelines)

    def timeline(self, atom: str) -> AtomTimeline:
        try:
            return self.timelines[atom]
        except KeyError:
            raise UndeclaredAtomError(atom) from None

    def require(self, names: Iterable[str]) -> None:
        for name in names:
            if name not in self.timelines:
                raise UndeclaredAtomError(name)

    def settlement_moments(self, names: Optional[Iterable[str]] = None) -> list[Fraction]:
        """Distinct finite settlement moments, ascending."""
        names = self.atoms if names is None else names
        moments = {self.timeline(n).settles_at for n in names}
        moments.discard(ALWAYS)
        return sorted(moments)

    def __iter__(self) -> Iterator[str]:
        return iter(self.timelines)

    def __len__(self) -> int:
        return len(self.timelines)


def atom_value_at(v: Valuation, atom: str, t: TimePoint) -> Tri:
    check_moment(t)
    return v.timeline(atom).value_at(t)


def is_j_extension(b: Valuation, a: Valuation, j: TimePoint) -> bool:
    """True iff ``b`` agrees with ``a`` on every atom at every moment ``<= j``."""
    check_moment(j)
    if set(a.atoms) != set(b.atoms):
        raise MismatchedAtomsError("valuations declare different atom sets")
    for name in a:
        ta, tb = a.timeline(name), b.timeline(name)
        if ta.settled_by(j) or tb.settled_by(j):
            if ta != tb:
                return False
    return True


def j_completions(
    a: Valuation, j: TimePoint, names: Iterable[str], bound: Optional[int] = None
) -> Iterator[dict[str, bool]]:
    """Classical assignments over ``names`` realised by some j-extension of ``a``.

    Atoms settled at or before ``j`` keep their final value; atoms still open
    at ``j`` range over both values. Each assignment is produced once.
    """
    check_moment(j)
    names = sorted(set(names))
    a.require(names)
    fixed = {}
    free = []
    for n in names:
        tl = a.timeline(n)
        if tl.settled_by(j):
            fixed[n] = tl.final_value
        else:
            free.append(n)
    check_bound(len(free), bound)
    for bits in range(1 << len(free)):
        c = dict(fixed)
        for k, n in enumerate(free):
            c[n] = not (bits >> k) & 1
        yield {n: c[n] for n in names}


def lift_classical(ic: ClassicalAssignment) -> Valuation:
    """The constant world agreeing with ``ic`` at every moment."""
    return Valuation({n: AtomTimeline(ALWAYS, bool(w)) for n, w in ic.items()})


# ---------------------------------------------------------------------------
# world files

_DIRECTIVE = re.compile(r"atom\s+(\S+)\s+settles\s+(\S+)\s+(\S+)")


def parse_world(text: str) -> Valuation:
    timelines: dict[str, AtomTimeline] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _DIRECTIVE.fullmatch(line)
        if m is None:
            raise WorldSyntaxError(
                "expected 'atom <name> settles <rational|always> <T|F>'", lineno
            )
        name, when, value = m.groups()
        if not ATOM_NAME.fullmatch(name):
            raise WorldSyntaxError(f"invalid atom name {name!r}", lineno)
        if name in timelines:
            raise WorldSyntaxError(f"duplicate declaration of atom {name!r}", lineno)
        try:
            settles_at = parse_time(when)
        except ValueError as exc:
            raise WorldSyntaxError(str(exc), lineno) from None
        if value not in ("T", "F"):
            raise WorldSyntaxError(f"final value must be T or F, got {value!r}", lineno)
        timelines[name] = AtomTimeline(settles_at, value == "T")
    return Valuation(timelines)


def render_world(v: Valuation) -> str:
    lines = [
        f"atom {name} settles {render_time(tl.settles_at)} {'T' if tl.final_value else 'F'}"
        for name, tl in v.timelines.items()
    ]
    return "".join(line + "\n" for line in lines)
