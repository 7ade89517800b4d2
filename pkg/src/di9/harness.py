"""Random generators and the executable property suite.

Each property draws its cases from its own seeded stream, so a report is a
pure function of :class:`GenParams`. A failing case is shrunk (best effort:
the formula is replaced by failing subformulas and unused atoms are dropped)
and rendered as world text, formula text and moments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional, Sequence

from di9.classical import eval_classical, is_tautology
from di9.consequence import (
    SearchParams,
    bounded_refutation_search,
    di9_consequence,
    di9_logical_truth,
    refutes,
)
from di9.formula import Atom, Formula, Not, Or, atoms, conj, iff, implies, render, subformulas
from di9.tri import Tri
from di9.trivalent import (
    Evaluator,
    eval_recursive,
    eval_supervaluation,
    induced_classical,
    settlement,
)
from di9.world import (
    ALWAYS,
    AtomTimeline,
    TimePoint,
    Valuation,
    is_j_extension,
    lift_classical,
    render_world,
)

MAX_ATOMS_LIMIT = 12
MAX_DEPTH_LIMIT = 12


@dataclass(frozen=True)
class GenParams:
    max_atoms: int = 6
    max_depth: int = 6
    settle_range: int = 10
    probe_range: int = 12
    max_denominator: int = 4
    always_weight: float = 0.25
    seed: int = 0
    iterations: int = 10000

    def __post_init__(self):
        if not 1 <= self.max_atoms <= MAX_ATOMS_LIMIT:
            raise ValueError(f"max_atoms must be in 1..{MAX_ATOMS_LIMIT}")
        if not 0 <= self.max_depth <= MAX_DEPTH_LIMIT:
            raise ValueError(f"max_depth must be in 0..{MAX_DEPTH_LIMIT}")
        if self.settle_range <= 0 or self.probe_range <= 0 or self.max_denominator <= 0:
            raise ValueError("ranges and max_denominator must be positive")
        if not 0.0 <= self.always_weight <= 1.0:
            raise ValueError("always_weight must lie in [0, 1]")
        if self.iterations < 0:
            raise ValueError("iterations must be non-negative")


# ---------------------------------------------------------------------------
# generators

def atom_pool(params: GenParams) -> list[str]:
    return [f"p{i}" for i in range(1, params.max_atoms + 1)]


def _rational(rng: random.Random, span: int, max_den: int) -> Fraction:
    """A rational in ``[-span, span]`` with denominator at most ``max_den``."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-span * den, span * den), den)


def gen_formula(rng: random.Random, params: GenParams, depth: Optional[int] = None) -> Formula:
    """Random formula whose desugared depth is at most ``depth``.

    Sugar is only drawn when its expansion still fits in the remaining
    depth: ``->`` costs 2 levels, ``&`` 3 and ``<->`` 5.
    """
    depth = params.max_depth if depth is None else depth
    pool = atom_pool(params)
    if depth == 0 or rng.random() < 0.15:
        return Atom(rng.choice(pool))
    choices = ["not", "or"]
    if depth >= 2:
        choices.append("implies")
    if depth >= 3:
        choices.append("and")
    if depth >= 5:
        choices.append("iff")
    kind = rng.choice(choices)
    if kind == "not":
        return Not(gen_formula(rng, params, depth - 1))
    if kind == "or":
        return Or(gen_formula(rng, params, depth - 1), gen_formula(rng, params, depth - 1))
    if kind == "implies":
        return implies(gen_formula(rng, params, depth - 2), gen_formula(rng, params, depth - 1))
    if kind == "and":
        return conj(gen_formula(rng, params, depth - 3), gen_formula(rng, params, depth - 3))
    return iff(gen_formula(rng, params, depth - 5), gen_formula(rng, params, depth - 5))


def gen_moment(rng: random.Random, params: GenParams, v: Optional[Valuation] = None) -> Fraction:
    """A probe moment; half the time exactly on a settlement moment of ``v``."""
    if v is not None:
        finite = v.settlement_moments()
        if finite and rng.random() < 0.5:
            return rng.choice(finite)
    return _rational(rng, params.probe_range, params.max_denominator)


def gen_valuation(rng: random.Random, names: Sequence[str], params: GenParams) -> Valuation:
    timelines = {}
    for n in sorted(set(names)):
        if rng.random() < params.always_weight:
            when = ALWAYS
        else:
            when = _rational(rng, params.settle_range, params.max_denominator)
        timelines[n] = AtomTimeline(when, rng.random() < 0.5)
    return Valuation(timelines)


def gen_j_extension(
    rng: random.Random, a: Valuation, j: TimePoint, params: GenParams = GenParams()
) -> Valuation:
    """A random world agreeing with ``a`` up to and including ``j``."""
    timelines = {}
    for n, tl in a.timelines.items():
        if tl.settled_by(j):
            timelines[n] = tl
        else:
            den = rng.randint(1, params.max_denominator)
            later = j + Fraction(rng.randint(1, 2 * params.settle_range * den), den)
            timelines[n] = AtomTimeline(later, rng.random() < 0.5)
    return Valuation(timelines)


def _gen_world_formula(rng: random.Random, params: GenParams) -> tuple[Valuation, Formula]:
    f = gen_formula(rng, params)
    return gen_valuation(rng, atoms(f), params), f


# ---------------------------------------------------------------------------
# cases and reports

@dataclass(frozen=True)
class Case:
    world: Valuation
    formula: Formula
    moments: tuple[Fraction, ...] = ()
    other: Optional[Valuation] = None
    premises: tuple[Formula, ...] = ()
    seed: int = 0

    def restrict(self) -> "Case":
        names = set(atoms(self.formula))
        for p in self.premises:
            names.update(atoms(p))

        def cut(v: Optional[Valuation]) -> Optional[Valuation]:
            if v is None:
                return None
            return Valuation({n: tl for n, tl in v.timelines.items() if n in names})

        return replace(self, world=cut(self.world), other=cut(self.other))


@dataclass(frozen=True)
class Counterexample:
    world: str
    formula: str
    moments: tuple[str, ...]
    detail: str
    other_world: Optional[str] = None
    premises: tuple[str, ...] = ()

    def render(self) -> str:
        lines = [f"  formula: {self.formula}"]
        for p in self.premises:
            lines.append(f"  premise: {p}")
        if self.moments:
            lines.append(f"  moments: {' '.join(self.moments)}")
        lines.append("  world:")
        lines.extend("    " + ln for ln in self.world.splitlines())
        if self.other_world is not None:
            lines.append("  extension:")
            lines.extend("    " + ln for ln in self.other_world.splitlines())
        lines.append(f"  detail: {self.detail}")
        return "\n".join(lines)


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        return f"property={self.name} cases={self.cases} failures={len(self.failures)}"


@dataclass
class PropertyReport:
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def render_lines(self) -> str:
        return "".join(r.line() + "\n" for r in self.results)

    def render_text(self) -> str:
        out = []
        for r in self.results:
            out.append(r.line())
            for k, cx in enumerate(r.failures, start=1):
                out.append(f"failure {k}:")
                out.append(cx.render())
        total = sum(len(r.failures) for r in self.results)
        out.append(f"total failures: {total}")
        return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# properties
#
# Each property is a pair (generate, check). ``check`` returns None when the
# case passes and a short description of the violation otherwise.

Check = Callable[[Case, Evaluator], Optional[str]]
Generate = Callable[[random.Random, GenParams], Case]


def _probes_up_to(rng: random.Random, v: Valuation, j: Fraction, params: GenParams) -> tuple:
    hs = {j}
    hs.update(s for s in v.settlement_moments() if s <= j)
    hs.add(j - Fraction(rng.randint(1, 4 * params.max_denominator), params.max_denominator))
    return tuple(sorted(hs))


def _gen_p1(rng, params):
    a, f = _gen_world_formula(rng, params)
    j = gen_moment(rng, params, a)
    b = gen_j_extension(rng, a, j, params)
    return Case(a, f, (j,) + _probes_up_to(rng, a, j, params), other=b)


def _check_p1(case, ev):
    j, *hs = case.moments
    if not is_j_extension(case.other, case.world, j):
        return "generated world is not a j-extension"
    for h in hs:
        va, vb = ev(case.world, case.formula, h), ev(case.other, case.formula, h)
        if va is not vb:
            return f"at {h}: world gives {va}, extension gives {vb}"
    return None


def _gen_p2(rng, params):
    v, f = _gen_world_formula(rng, params)
    return Case(v, f)


def _late_moment(v: Valuation) -> Fraction:
    finite = v.settlement_moments()
    return (finite[-1] if finite else Fraction(0)) + 1


def _check_p2(case, ev):
    w = eval_classical(induced_classical(case.world, atoms(case.formula)), case.formula)
    late = ev(case.world, case.formula, _late_moment(case.world))
    if late is not Tri.of(w):
        return f"eventual classical value {Tri.of(w)} but value after settlement is {late}"
    return None


def _check_p3(case, ev):
    try:
        when, w = settlement(case.world, case.formula, ev)
    except RuntimeError:
        return "no truth value at any settlement moment"
    if when is ALWAYS:
        return None
    if ev(case.world, case.formula, when) is not Tri.of(w):
        return f"settlement reported {Tri.of(w)} at {when} but evaluation disagrees"
    before = [s for s in case.world.settlement_moments(atoms(case.formula)) if s < when]
    probe = before[-1] if before else when - 1
    if ev(case.world, case.formula, probe).is_truth_value:
        return f"already decided at {probe}, before the reported settlement {when}"
    return None


def _gen_p4(rng, params):
    v, f = _gen_world_formula(rng, params)
    j, h = sorted((gen_moment(rng, params, v), gen_moment(rng, params, v)))
    return Case(v, f, (j, h))


def _check_p4(case, ev):
    j, h = case.moments
    vj = ev(case.world, case.formula, j)
    if vj.is_truth_value:
        vh = ev(case.world, case.formula, h)
        if vh is not vj:
            return f"value {vj} at {j} became {vh} at {h}"
    return None


def _gen_p5(rng, params):
    v, f = _gen_world_formula(rng, params)
    return Case(v, f, (gen_moment(rng, params, v),))


def _check_p5(case, ev):
    (j,) = case.moments
    rec = ev(case.world, case.formula, j)
    sup = eval_supervaluation(case.world, case.formula, j)
    if rec is not sup:
        return f"recursive gives {rec}, supervaluation gives {sup}"
    return None


def _gen_consequence(rng, params):
    premises = tuple(gen_formula(rng, params, min(params.max_depth, 3)) for _ in range(rng.randint(0, 2)))
    f = gen_formula(rng, params, min(params.max_depth, 4))
    return Case(Valuation(), f, premises=premises, seed=rng.getrandbits(32))


def _check_consequence(case, ev):
    verdict = di9_consequence(case.premises, case.formula)
    if verdict.holds:
        found = bounded_refutation_search(
            case.premises, case.formula, SearchParams(seed=case.seed, iterations=20), ev
        )
        if found is not None:
            v, j = found
            return f"consequence holds but a refutation exists at {j}:\n{render_world(v)}"
        return None
    v, j = verdict.countermodel
    if not refutes(v, j, case.premises, case.formula, ev):
        return "lifted countermodel does not refute the consequence"
    return None


def _gen_p7(rng, params):
    f = gen_formula(rng, params)
    ic = {n: rng.random() < 0.5 for n in atoms(f)}
    probes = tuple(sorted({_rational(rng, params.probe_range, params.max_denominator) for _ in range(3)}))
    return Case(lift_classical(ic), f, probes)


def _check_p7(case, ev):
    ic = induced_classical(case.world)
    if lift_classical(ic) != case.world:
        return "lift then project is not the identity"
    expected = Tri.of(eval_classical(ic, case.formula))
    for t in case.moments:
        got = ev(case.world, case.formula, t)
        if got is not expected:
            return f"constant world gives {got} at {t}, classical value is {expected}"
    return None


def _gen_p9(rng, params):
    f = gen_formula(rng, params)
    if rng.random() < 0.3:
        # bias toward tautologies, which uniform sampling rarely produces
        g = gen_formula(rng, params, max(params.max_depth - 2, 0))
        f = rng.choice([Or(g, Not(g)), implies(g, g), Or(f, Not(f))])
    return Case(Valuation(), f)


def _check_p9(case, ev):
    verdict = di9_logical_truth(case.formula)
    if verdict.holds != is_tautology(case.formula):
        return f"logical truth says {verdict.holds}, truth table says {not verdict.holds}"
    if not verdict.holds:
        v, j = verdict.countermodel
        got = ev(v, case.formula, j)
        if got is not Tri.F:
            return f"lifted countermodel evaluates {got} at {j}, expected F"
    return None


PROPERTIES: dict[str, tuple[Generate, Check]] = {
    "P1_j_extension_agreement": (_gen_p1, _check_p1),
    "P2_eventual_classical_value": (_gen_p2, _check_p2),
    "P3_settlement_totality": (_gen_p2, _check_p3),
    "P4_persistence": (_gen_p4, _check_p4),
    "P5_recursive_equals_supervaluation": (_gen_p5, _check_p5),
    "P6_P8_consequence_coincides": (_gen_consequence, _check_consequence),
    "P7_lifted_worlds_classical": (_gen_p7, _check_p7),
    "P9_logical_truth_is_tautology": (_gen_p9, _check_p9),
}


def _fails(check: Check, case: Case, ev: Evaluator) -> Optional[str]:
    try:
        return check(case, ev)
    except Exception as exc:  # a crash is a failure of the property, not of the run
        return f"{type(exc).__name__}: {exc}"


def shrink(check: Check, case: Case, ev: Evaluator) -> Case:
    """Replace the formula by failing proper subformulas until none fails."""
    case = case.restrict() if _fails(check, case.restrict(), ev) else case
    progress = True
    while progress:
        progress = False
        candidates = sorted(set(subformulas(case.formula)) - {case.formula}, key=lambda g: len(render(g)))
        for g in candidates:
            smaller = replace(case, formula=g).restrict()
            if _fails(check, smaller, ev):
                case, progress = smaller, True
                break
    return case


def _counterexample(case: Case, detail: str) -> Counterexample:
    return Counterexample(
        world=render_world(case.world),
        formula=render(case.formula),
        moments=tuple(str(t) for t in case.moments),
        detail=detail,
        other_world=None if case.other is None else render_world(case.other),
        premises=tuple(render(p) for p in case.premises),
    )


def run_property(
    name: str,
    params: GenParams = GenParams(),
    iterations: Optional[int] = None,
    evaluate: Evaluator = eval_recursive,
    max_reported: int = 3,
) -> PropertyResult:
    generate, check = PROPERTIES[name]
    n = params.iterations if iterations is None else iterations
    rng = random.Random(f"{params.seed}:{name}")
    result = PropertyResult(name)
    for _ in range(n):
        case = generate(rng, params)
        result.cases += 1
        if _fails(check, case, evaluate) is None:
            continue
        if len(result.failures) < max_reported:
            case = shrink(check, case, evaluate)
            result.failures.append(_counterexample(case, _fails(check, case, evaluate)))
        else:
            result.failures.append(_counterexample(case, "(not shrunk)"))
    return result


def run_suite(
    params: GenParams = GenParams(),
    evaluate: Evaluator = eval_recursive,
    names: Optional[Sequence[str]] = None,
) -> PropertyReport:
    names = list(PROPERTIES) if names is None else list(names)
    return PropertyReport([run_property(n, params, evaluate=evaluate) for n in names])
