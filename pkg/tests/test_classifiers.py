import pytest

from artin_progressions.classifiers import classify, fair_shares, is_exceptional, wud_set, zero_classes, zero_density
from artin_progressions.constants import WudFamily, ZeroCase
from artin_progressions.density import delta_closed
from artin_progressions.empirical import hit_primes
from artin_progressions.exceptions import InvalidArgumentError, NotInGError
from artin_progressions.schemas import Progression

from conftest import SMALL_BASES


@pytest.mark.parametrize(
    "a, f, g, cases",
    [
        (4, 5, 5, (ZeroCase.DISCRIMINANT_SPLITS,)),
        (3, 4, 27, (ZeroCase.CUBIC_OBSTRUCTION,)),
        (1, 3, 8, (ZeroCase.ELEMENTARY_GCD,)),
        (1, 4, -4, (ZeroCase.DISCRIMINANT_SPLITS,)),
        (3, 28, 2, ()),
    ],
)
def test_zero_density_cases(a, f, g, cases):
    reason = zero_density(Progression(a=a, f=f), g)
    assert reason.cases == cases
    assert reason.triggered == bool(cases)


@pytest.mark.parametrize("g", SMALL_BASES + [27, -27, 125, 21**3])
def test_zero_density_matches_closed_form(g):
    for f in range(1, 25):
        for progression in Progression.all_classes(f):
            assert zero_density(progression, g).triggered == delta_closed(progression, g).is_zero


def test_zero_classes():
    assert zero_classes(5, 5) == [1, 4]
    assert zero_classes(2, 4) == []


def test_is_exceptional():
    assert is_exceptional(21**7)
    assert not is_exceptional(21)
    assert not is_exceptional(21**3)


@pytest.mark.parametrize(
    "g, wud, family",
    [
        (2, {1, 2, 4}, WudFamily.ONE_TWO_FOUR),
        (3, {1, 2}, WudFamily.ONE_TWO),
        (5, {1, 2, 4, 8, 16}, WudFamily.POWERS_OF_TWO),
        (-3, {1, 2, 4, 8, 16}, WudFamily.POWERS_OF_TWO),
        (21**7, {1, 2, 3, 4, 6, 8, 9, 12, 16, 18}, WudFamily.EXCEPTIONAL_2M3N),
    ],
)
def test_wud_moduli(g, wud, family):
    verdicts = [wud_set(g, f) for f in range(1, 19)]
    assert {v.f for v in verdicts if v.is_wud} == wud
    assert {v.family for v in verdicts} == {family}


@pytest.mark.parametrize("g", SMALL_BASES + [21**7])
def test_wud_iff_all_classes_equal(g):
    for f in range(1, 25):
        coefficients = {delta_closed(p, g).coefficient for p in Progression.all_classes(f)}
        assert wud_set(g, f).is_wud == (len(coefficients) == 1)


def test_fair_shares_sum_to_phi():
    shares = fair_shares(2, 28)
    assert sum(shares.values()) == 12
    assert all(share == 1 for share in fair_shares(2, 4).values())


def test_classify():
    rows = classify(21**7, 6)
    assert [r.f for r in rows if r.wud.is_wud] == [1, 2, 3, 4, 6]
    assert rows[4].f == 5 and not rows[4].wud.is_wud


def test_classify_rejects_bad_input():
    with pytest.raises(InvalidArgumentError):
        classify(2, 0)
    with pytest.raises(NotInGError):
        classify(16, 4)


@pytest.mark.parametrize("g", SMALL_BASES + [21**7])
def test_wud_moduli_are_closed_under_divisors(g):
    wud = {f for f in range(1, 49) if wud_set(g, f).is_wud}
    for f in wud:
        assert all(d in wud for d in range(1, f + 1) if f % d == 0), f


@pytest.mark.parametrize(
    "a, f, g",
    [
        (1, 5, 5),
        (4, 5, 5),
        (3, 4, 27),
        (7, 8, 27),
        (1, 3, 8),
        (1, 4, -4),
        (1, 8, 2),
        (7, 8, 2),
        (11, 12, 3),
        (1, 3, 125),
    ],
)
def test_vanishing_classes_contain_no_hits(a, f, g):
    progression = Progression(a=a, f=f)
    assert zero_density(progression, g).triggered
    assert delta_closed(progression, g).is_zero
    assert hit_primes(g, f, 10**5, workers=1)[a] == []
