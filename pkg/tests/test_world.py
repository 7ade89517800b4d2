import itertools
import pickle
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from di9.errors import (
    BoundExceededError,
    InvalidTimeError,
    MismatchedAtomsError,
    UndeclaredAtomError,
    WorldSyntaxError,
)
from di9.tri import Tri
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
from tests.conftest import NAMES, rationals, timelines, worlds

T, F, O = Tri.T, Tri.F, Tri.O
W5 = Valuation.of(p=(5, True))


def test_always_is_below_every_rational():
    assert ALWAYS < Fraction(-10**9)
    assert Fraction(3) > ALWAYS
    assert ALWAYS <= ALWAYS and not ALWAYS < ALWAYS
    assert max(ALWAYS, Fraction(0)) == 0
    assert sorted([Fraction(1), ALWAYS, Fraction(-1)]) == [ALWAYS, -1, 1]
    assert pickle.loads(pickle.dumps(ALWAYS)) is ALWAYS


@pytest.mark.parametrize(
    "text, expected",
    [("5", Fraction(5)), ("7/2", Fraction(7, 2)), ("-3", Fraction(-3)), ("4/6", Fraction(2, 3)), ("always", ALWAYS)],
)
def test_parse_time(text, expected):
    assert parse_time(text) == expected


@pytest.mark.parametrize("text", ["1/0", "1.5", "1/-2", "--1", "", "x", "+1"])
def test_parse_time_rejects(text):
    with pytest.raises(ValueError):
        parse_time(text)


def test_parse_time_query_forbids_always():
    with pytest.raises(InvalidTimeError):
        parse_time("always", allow_always=False)


@pytest.mark.parametrize(
    "v, t, expected",
    [(W5, 3, O), (W5, 5, T), (W5, Fraction(49, 10), O), (Valuation.of(p=(ALWAYS, False)), -100, F)],
)
def test_atom_value_at(v, t, expected):
    assert atom_value_at(v, "p", Fraction(t)) is expected


def test_atom_value_errors():
    with pytest.raises(UndeclaredAtomError):
        atom_value_at(W5, "q", Fraction(0))
    with pytest.raises(InvalidTimeError):
        atom_value_at(W5, "p", ALWAYS)


def _agree_brute(b, a, j):
    """Compare values at every settlement moment <= j and between them."""
    points = {j}
    for v in (a, b):
        points.update(s for s in v.settlement_moments() if s <= j)
    points = sorted(points)
    probes = set(points) | {points[0] - 1}
    probes.update((x + y) / 2 for x, y in zip(points, points[1:]))
    return all(atom_value_at(a, n, h) == atom_value_at(b, n, h) for n in a.atoms for h in probes)


def test_is_j_extension_examples():
    b = Valuation.of(p=(7, False))
    assert is_j_extension(b, W5, Fraction(3))
    assert not is_j_extension(b, W5, Fraction(6))
    assert is_j_extension(W5, W5, Fraction(100))


def test_is_j_extension_errors():
    with pytest.raises(MismatchedAtomsError):
        is_j_extension(Valuation.of(q=(1, True)), W5, Fraction(0))
    with pytest.raises(InvalidTimeError):
        is_j_extension(W5, W5, ALWAYS)


@given(worlds(), worlds(), rationals)
def test_is_j_extension_matches_pointwise_oracle(a, b, j):
    assert is_j_extension(b, a, j) == _agree_brute(b, a, j)


@given(worlds(), rationals, rationals)
def test_j_extension_reflexive_and_downward_closed(a, j, h):
    assert is_j_extension(a, a, j)
    h, j = sorted((h, j))
    # a world whose open atoms are redrawn after j
    b = Valuation({n: tl if tl.settled_by(j) else AtomTimeline(j + 1, not tl.final_value) for n, tl in a.timelines.items()})
    assert is_j_extension(b, a, j)
    assert is_j_extension(b, a, h)


def test_j_completions_examples():
    a = Valuation.of(p=(5, True), q=(ALWAYS, False))
    assert list(j_completions(a, Fraction(3), ["p", "q"])) == [{"p": True, "q": False}, {"p": False, "q": False}]
    assert list(j_completions(a, Fraction(5), ["p", "q"])) == [{"p": True, "q": False}]
    assert list(j_completions(W5, Fraction(10), ["p"])) == [{"p": True}]


def test_j_completions_errors():
    with pytest.raises(UndeclaredAtomError):
        list(j_completions(W5, Fraction(0), ["q"]))
    wide = Valuation({f"a{i}": AtomTimeline(1, True) for i in range(5)})
    with pytest.raises(BoundExceededError):
        list(j_completions(wide, Fraction(0), wide.atoms, bound=4))
    assert len(list(j_completions(wide, Fraction(1), wide.atoms, bound=0))) == 1


@given(worlds(), rationals)
def test_j_completions_are_exactly_the_realisable_assignments(a, j):
    # brute force: every assignment over the atoms, kept when some explicit
    # j-extension (open atoms settle at j + 1) realises it
    realisable = []
    for values in itertools.product([True, False], repeat=len(NAMES)):
        c = dict(zip(NAMES, values))
        b = Valuation({n: tl if tl.settled_by(j) else AtomTimeline(j + 1, c[n]) for n, tl in a.timelines.items()})
        if is_j_extension(b, a, j) and all(b.timeline(n).final_value == c[n] for n in NAMES):
            realisable.append(c)
    got = list(j_completions(a, j, NAMES))
    assert sorted(map(lambda c: tuple(c.items()), got)) == sorted(map(lambda c: tuple(c.items()), realisable))
    assert len(got) == len({tuple(c.items()) for c in got})
    open_atoms = [n for n in NAMES if not a.timeline(n).settled_by(j)]
    assert len(got) == 2 ** len(open_atoms)


@given(worlds())
def test_j_completions_extremes(a):
    finite = a.settlement_moments()
    low = (finite[0] if finite else Fraction(0)) - 1
    high = (finite[-1] if finite else Fraction(0)) + 1
    settled_early = [n for n in NAMES if a.timeline(n).settles_at is ALWAYS]
    assert len(list(j_completions(a, low, NAMES))) == 2 ** (len(NAMES) - len(settled_early))
    assert list(j_completions(a, high, NAMES)) == [{n: a.timeline(n).final_value for n in NAMES}]


@given(timelines, rationals, rationals)
def test_timelines_satisfy_persistence_and_weak_bivalence(tl, j, h):
    j, h = sorted((j, h))
    if tl.value_at(j).is_truth_value:
        assert tl.value_at(h) is tl.value_at(j)
    finite = tl.settles_at if tl.settles_at is not ALWAYS else Fraction(0)
    assert tl.value_at(finite).is_truth_value


@given(st.dictionaries(st.sampled_from(NAMES), st.booleans()), rationals)
def test_lift_classical(ic, t):
    v = lift_classical(ic)
    assert set(v.atoms) == set(ic)
    for n, w in ic.items():
        assert v.timeline(n).settles_at is ALWAYS
        assert atom_value_at(v, n, t) is Tri.of(w)


def test_lift_classical_examples():
    assert lift_classical({"p": True}) == Valuation.of(p=(ALWAYS, True))
    assert lift_classical({}) == Valuation()
    assert lift_classical({"p": True, "q": False}) == Valuation.of(p=(ALWAYS, True), q=(ALWAYS, False))


def test_parse_world_examples():
    v = parse_world("atom p settles 5 T\n# comment\n\natom q settles always F  # trailing\natom r settles 7/2 F\n")
    assert v == Valuation.of(p=(5, True), q=(ALWAYS, False), r=(Fraction(7, 2), False))
    assert parse_world("") == Valuation()


@pytest.mark.parametrize(
    "text, line",
    [
        ("atom p settles 5 T\natom p settles 6 F\n", 2),
        ("atom p settles 1/0 T\n", 1),
        ("atom p settles 1.5 T\n", 1),
        ("\natom p settles 5 X\n", 2),
        ("atom 9p settles 5 T\n", 1),
        ("atom p at 5 T\n", 1),
        ("atom p settles 5\n", 1),
    ],
)
def test_parse_world_errors(text, line):
    with pytest.raises(WorldSyntaxError) as info:
        parse_world(text)
    assert info.value.line == line


@given(worlds(names=["a", "b_2", "Zed"]))
def test_world_round_trip(v):
    assert parse_world(render_world(v)) == v
