"""
Independent evaluation of delta(a, f, g) by truncating Lenstra's series

    delta(a, f, g) = sum_n mu(n) c_a(n) / [Q(zeta_f, zeta_n, g^(1/n)) : Q].

No field is ever represented. The compositum degree is n(n, lcm(f, n)) from the
Kummer degree formula, and c_a(n) comes from the description of
Q(zeta_f) cap Q(zeta_n, g^(1/n)) as Q(zeta_m) or Q(zeta_m, sqrt(gamma)).

Tail bound: |term_n| <= 1/degree <= 2(n,h)/(n phi(n)) <= 2h/(n phi(n)), and
phi(n) >= sqrt(2n) for n > 12, so for N >= 16

    sum_{n>N} |term_n| <= sqrt(2) h sum_{n>N} n^(-3/2) <= 2 sqrt(2) h / sqrt(N).

Below N = 16 the per-term bound is summed explicitly up to 16.
"""
import logging
from collections import defaultdict
from functools import lru_cache
from math import gcd, lcm

import mpmath

from artin_progressions.arithmetic import euler_phi, is_squarefree, kronecker
from artin_progressions.constants import DEFAULT_SERIES_TRUNCATION, DEFAULT_WORKING_PRECISION, MIN_PROVEN_TRUNCATION
from artin_progressions.density import gamma_factor, make_base
from artin_progressions.empirical.sieve import mobius_phi_sieve
from artin_progressions.exceptions import InvalidArgumentError
from artin_progressions.schemas import Base, Progression, SeriesEstimate
from artin_progressions.utils import mpf_to_decimal

logger = logging.getLogger(__name__)


def degree_nkr(k: int, r: int, base: Base, phi_r: int | None = None) -> int:
    """
    [Q(zeta_r, g^(1/k)) : Q] for squarefree k dividing r.

    With k1 = k/(k, h): k1 phi(r), halved when k is even and delta | r.
    A precomputed phi(r) may be passed in.

    Raises:
        InvalidArgumentError: if k is not squarefree or does not divide r
    """
    if k < 1 or r < 1 or r % k:
        raise InvalidArgumentError(f"k={k} must divide r={r}")
    if not is_squarefree(k):
        raise InvalidArgumentError(f"k={k} is not squarefree")

    degree = k // gcd(k, base.h) * (euler_phi(r) if phi_r is None else phi_r)
    if k % 2 == 0 and r % abs(base.delta) == 0:
        degree //= 2
    return degree


def sigma_fixes_quadratic(discriminant: int, a: int) -> bool:
    """sigma_a restricted to the quadratic field of this discriminant is the identity iff (disc/a) = 1."""
    return kronecker(discriminant, a) == 1


def intersection_field(n: int, f: int, base: Base) -> tuple[int, int | None]:
    """
    Q(zeta_f) cap Q(zeta_n, g^(1/n)) for squarefree n, as (m, gamma):
    the field is Q(zeta_m, sqrt(gamma)) when gamma is not None, else Q(zeta_m).
    """
    m = gcd(f, n)
    delta = abs(base.delta)
    if n % 2 == 0 and n % delta and lcm(f, n) % delta == 0:
        _, gamma = gamma_factor(f, base)
        return m, gamma
    return m, None


def c_a(n: int, progression: Progression, base: Base) -> int:
    """1 if sigma_a is trivial on Q(zeta_f) cap Q(zeta_n, g^(1/n)), else 0."""
    if not is_squarefree(n):
        raise InvalidArgumentError(f"c_a is only evaluated at squarefree n, got {n}")
    m, gamma = intersection_field(n, progression.f, base)
    if (progression.a - 1) % m:
        return 0
    if gamma is not None and not sigma_fixes_quadratic(gamma, progression.a):
        return 0
    return 1


def tail_bound(N: int, h: int):
    """Upper bound for the absolute sum of all terms with n > N (mpmath number)."""
    if N < 1:
        raise InvalidArgumentError(f"truncation N={N} must be positive")
    if N >= MIN_PROVEN_TRUNCATION:
        return 2 * mpmath.sqrt(2) * h / mpmath.sqrt(N)
    explicit = mpmath.fsum(
        mpmath.mpf(2 * h) / (n * euler_phi(n))
        for n in range(N + 1, MIN_PROVEN_TRUNCATION + 1)
        if is_squarefree(n)
    )
    return explicit + tail_bound(MIN_PROVEN_TRUNCATION, h)


@lru_cache(maxsize=8)
def _squarefree_terms(N: int) -> tuple[tuple[int, int, int], ...]:
    """(n, mu(n), phi(n)) for squarefree n <= N."""
    mu, phi = mobius_phi_sieve(N)
    return tuple((n, int(mu[n]), int(phi[n])) for n in range(1, N + 1) if mu[n])


@lru_cache(maxsize=512)
def _series_table(f: int, g: int, N: int, dps: int) -> dict[tuple[int, int | None], mpmath.mpf]:
    """
    Terms mu(n)/degree for n <= N summed by intersection field (m, gamma).

    c_a(n) depends on n only through that field, so every class a (mod f)
    is a sum over the keys it fixes.
    """
    base = make_base(g)
    phi_f = euler_phi(f)
    sums: dict[tuple[int, int | None], mpmath.mpf] = defaultdict(mpmath.mpf)
    with mpmath.workdps(dps):
        for n, mu, phi_n in _squarefree_terms(N):
            m = gcd(f, n)
            phi_r = phi_f * phi_n // euler_phi(m)
            degree = degree_nkr(n, f * n // m, base, phi_r=phi_r)
            key = intersection_field(n, f, base)
            sums[key] += mpmath.mpf(mu) / degree
    logger.info(f"Series table for g={g}, f={f}, N={N}: {len(sums)} intersection fields")
    return dict(sums)


def _partial_sum(progression: Progression, table: dict, dps: int):
    with mpmath.workdps(dps):
        return mpmath.fsum(
            value
            for (m, gamma), value in table.items()
            if (progression.a - 1) % m == 0 and (gamma is None or sigma_fixes_quadratic(gamma, progression.a))
        )


def series_truncated(
    progression: Progression,
    g: int,
    N: int = DEFAULT_SERIES_TRUNCATION,
    dps: int = DEFAULT_WORKING_PRECISION,
) -> SeriesEstimate:
    """
    Partial sum of Lenstra's series over n <= N with its tail bound.

    Raises:
        NotInGError: if g is not in G
        InvalidArgumentError: if N < 1
    """
    base = make_base(g)
    bound = tail_bound(N, base.h)
    table = _series_table(progression.f, g, N, dps)
    partial = _partial_sum(progression, table, dps)
    return SeriesEstimate(
        partial_sum=mpf_to_decimal(partial, dps),
        truncation_N=N,
        tail_bound=mpf_to_decimal(bound, dps),
    )


def series_all(
    f: int,
    g: int,
    N: int = DEFAULT_SERIES_TRUNCATION,
    dps: int = DEFAULT_WORKING_PRECISION,
) -> dict[int, SeriesEstimate]:
    """series_truncated for every coprime class mod f, sharing one table."""
    return {p.a: series_truncated(p, g, N, dps) for p in Progression.all_classes(f)}

