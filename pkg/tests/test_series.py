from decimal import Decimal
from fractions import Fraction
from math import lcm, sqrt

import pytest

from artin_progressions.arithmetic import is_squarefree
from artin_progressions.density import delta_closed, make_base
from artin_progressions.exceptions import InvalidArgumentError
from artin_progressions.schemas import Progression
from artin_progressions.series import (
    c_a,
    degree_nkr,
    intersection_field,
    series_all,
    series_truncated,
    tail_bound,
)


@pytest.mark.parametrize(
    "g, k, r, expected",
    [
        (2, 1, 1, 1),
        (2, 2, 2, 2),
        (2, 2, 8, 4),
        (2, 6, 24, 24),
        (8, 3, 3, 2),
        (5, 10, 10, 20),
        (3, 6, 12, 12),
    ],
)
def test_degree_nkr(g, k, r, expected):
    assert degree_nkr(k, r, make_base(g)) == expected


def test_degree_nkr_rejects_bad_arguments():
    base = make_base(2)
    with pytest.raises(InvalidArgumentError):
        degree_nkr(4, 8, base)
    with pytest.raises(InvalidArgumentError):
        degree_nkr(3, 4, base)


def test_intersection_field():
    assert intersection_field(2, 8, make_base(2)) == (2, 8)
    assert intersection_field(2, 1, make_base(2)) == (1, None)
    assert intersection_field(10, 5, make_base(5)) == (5, None)
    assert intersection_field(6, 4, make_base(3)) == (2, -4)


def test_c_a_selects_classes_fixing_the_intersection():
    base = make_base(2)
    fixed = [a for a in (1, 3, 5, 7) if c_a(2, Progression(a=a, f=8), base)]
    assert fixed == [1, 7]
    with pytest.raises(InvalidArgumentError):
        c_a(4, Progression(a=1, f=8), base)


@pytest.mark.parametrize("g", [2, -3, 5, 12, 21])
@pytest.mark.parametrize("f", [1, 3, 4, 8, 12])
def test_c_a_counts_match_compositum_degrees(g, f):
    base = make_base(g)
    for n in range(1, 61):
        if not is_squarefree(n):
            continue
        total = sum(
            Fraction(c_a(n, p, base), degree_nkr(n, lcm(f, n), base)) for p in Progression.all_classes(f)
        )
        assert total == Fraction(1, degree_nkr(n, n, base))


def test_tail_bound():
    assert float(tail_bound(16, 1)) == pytest.approx(2 * sqrt(2) / 4)
    assert float(tail_bound(10**4, 3)) == pytest.approx(6 * sqrt(2) / 100)
    assert tail_bound(2, 1) > tail_bound(14, 1) > tail_bound(16, 1)
    assert tail_bound(15, 1) == tail_bound(16, 1)
    with pytest.raises(InvalidArgumentError):
        tail_bound(0, 1)


@pytest.mark.parametrize("g, f", [(2, 1), (2, 4), (3, 5), (-3, 7), (5, 8), (12, 12), (8, 3)])
def test_series_lies_within_tail_bound(g, f):
    for a, estimate in series_all(f, g, N=10_000).items():
        closed = delta_closed(Progression(a=a, f=f), g).numeric
        assert estimate.contains(closed)
        assert abs(closed - estimate.partial_sum) < Decimal("0.005")


def test_small_truncation_still_bounded():
    estimate = series_truncated(Progression(a=1, f=1), 2, N=2)
    assert estimate.truncation_N == 2
    assert estimate.contains(delta_closed(Progression(a=1, f=1), 2).numeric)


def test_hooley_partial_sums():
    one = series_truncated(Progression(a=1, f=1), 2, N=1)
    assert one.partial_sum == 1
    two = series_truncated(Progression(a=1, f=1), 2, N=2)
    assert two.partial_sum == Decimal("0.5")


@pytest.mark.parametrize("g, f", [(2, 1), (-3, 4), (5, 5), (12, 8), (8, 9)])
def test_doubling_truncation_stays_within_previous_bound(g, f):
    N = 250
    previous = series_all(f, g, N)
    while N < 4000:
        N *= 2
        current = series_all(f, g, N)
        for a, estimate in current.items():
            assert estimate.tail_bound <= previous[a].tail_bound
            assert previous[a].contains(estimate.partial_sum)
        previous = current
