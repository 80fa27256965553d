import math
from decimal import Decimal

import pytest
from hypothesis import given, settings, strategies as st
from sympy import isprime, primerange, totient

from artin_progressions.density import delta_closed
from artin_progressions.empirical import (
    heuristic_sum,
    hit_primes,
    is_primitive_root,
    is_primitive_root_bruteforce,
    li,
    mobius_phi_sieve,
    scan,
    sieve_segment,
    simple_sieve,
)
from artin_progressions.exceptions import InvalidArgumentError
from artin_progressions.schemas import Progression

PRIMES_WITH_ROOT_TWO = [3, 5, 11, 13, 19, 29, 37, 53, 59, 61, 67, 83]


def test_simple_sieve():
    assert simple_sieve(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert simple_sieve(1).tolist() == []


def test_sieve_segment():
    assert sieve_segment(90, 110, simple_sieve(10)).tolist() == [97, 101, 103, 107, 109]
    assert sieve_segment(0, 10, simple_sieve(3)).tolist() == [2, 3, 5, 7]
    assert sieve_segment(24, 28, simple_sieve(5)).tolist() == []


def test_sieve_segment_matches_sympy():
    low, high = 10**6, 10**6 + 5000
    expected = list(primerange(low, high + 1))
    assert sieve_segment(low, high, simple_sieve(math.isqrt(high))).tolist() == expected


def test_mobius_phi_sieve():
    mu, phi = mobius_phi_sieve(12)
    assert mu[1:].tolist() == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert phi[1:].tolist() == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_is_primitive_root():
    assert is_primitive_root(2, 11)
    assert not is_primitive_root(2, 7)
    assert is_primitive_root(-1, 3)
    for bad_p in (2, 9):
        with pytest.raises(InvalidArgumentError):
            is_primitive_root(3, bad_p)
    with pytest.raises(InvalidArgumentError):
        is_primitive_root(6, 3)


@settings(max_examples=200)
@given(st.integers(-60, 60), st.integers(3, 2000).filter(isprime))
def test_order_test_agrees_with_bruteforce(g, p):
    if g % p == 0:
        return
    assert is_primitive_root(g, p) == is_primitive_root_bruteforce(g, p)


def test_li():
    assert li(2) == 0
    assert abs(li(10**6) - Decimal("78626.504")) < Decimal("0.01")
    assert abs(li(100) - Decimal("29.0810")) < Decimal("0.001")
    with pytest.raises(InvalidArgumentError):
        li(1)


def test_scan_small_bound():
    count = scan(2, 1, 100)[1]
    assert count.primes_total == 25
    assert count.primes_in_class == 25
    assert count.hits == 12
    assert hit_primes(2, 1, 100)[1] == PRIMES_WITH_ROOT_TWO


def test_scan_splits_by_class():
    counts = scan(2, 4, 100)
    assert set(counts) == {1, 3}
    assert counts[1].hits + counts[3].hits == 12
    assert counts[1].primes_in_class + counts[3].primes_in_class == 24


def test_scan_never_counts_divisors_of_g():
    assert 3 not in hit_primes(3, 1, 50)[1]
    assert hit_primes(6, 1, 10)[1] == []


def test_scan_hits_match_bruteforce():
    hits = hit_primes(3, 5, 3000)
    for a, primes in hits.items():
        expected = [
            p for p in primerange(3, 3001)
            if p % 5 == a and p != 3 and is_primitive_root_bruteforce(3, p)
        ]
        assert primes == expected


def test_scan_does_not_depend_on_workers_or_segments():
    inline = scan(3, 5, 20_000, workers=1, segment_size=1_000)
    pooled = scan(3, 5, 20_000, workers=2, segment_size=1_000)
    assert inline == pooled
    whole = scan(3, 5, 20_000, workers=1)
    assert {a: c.hits for a, c in whole.items()} == {a: c.hits for a, c in inline.items()}


@pytest.mark.parametrize("x", [1, 10**8 + 1])
def test_scan_rejects_bounds(x):
    with pytest.raises(InvalidArgumentError):
        scan(2, 1, x)


def test_heuristic_sum_small_bound():
    contributing = [p for p in primerange(3, 101) if p % 8 in (3, 5)]
    assert 43 in contributing
    expected = 2 * math.fsum(int(totient(p - 1)) / (p - 1) for p in contributing)
    assert float(heuristic_sum(2, 1, 1, 100)) == pytest.approx(expected, rel=1e-12)


def test_heuristic_sum_skips_primes_sharing_factors_with_h():
    # g = 8 = 2^3: primes with 3 | p - 1 never contribute
    contributing = [p for p in primerange(3, 201) if p % 8 in (3, 5) and (p - 1) % 3]
    expected = 2 * math.fsum(int(totient(p - 1)) / (p - 1) for p in contributing)
    assert float(heuristic_sum(8, 1, 1, 200)) == pytest.approx(expected, rel=1e-12)


@pytest.mark.slow
def test_desk_scale_convergence():
    for a, count in scan(2, 4, 10**6).items():
        expected = float(delta_closed(Progression(a=a, f=4), 2).numeric)
        assert abs(count.observed - expected) <= 0.01
        scaled = count.hits * float(count.li_x) / count.primes_total
        assert abs(float(count.heuristic_sum) - scaled) / scaled <= 0.05


@pytest.mark.slow
def test_error_shrinks_with_the_bound():
    # classes of density zero have error 0 at every bound and are left out
    shrinking, cells = 0, 0
    for f in (1, 3, 4, 5, 8):
        small, large = scan(2, f, 10**5), scan(2, f, 10**6)
        for a in small:
            value = delta_closed(Progression(a=a, f=f), 2)
            if value.is_zero:
                continue
            expected = float(value.numeric)
            cells += 1
            shrinking += abs(large[a].observed - expected) < abs(small[a].observed - expected)
    assert cells == 11
    assert shrinking >= 0.8 * cells
