"""
Sieves of Eratosthenes on numpy boolean arrays: the base primes up to a
limit, one segment [low, high] at a time, and the mu / phi tables used by the
series oracle.
"""
import math

import numpy as np


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def sieve_segment(low: int, high: int, base_primes: np.ndarray) -> np.ndarray:
    """
    Primes in the closed interval [low, high].

    base_primes must contain every prime <= isqrt(high).
    """
    low = max(low, 2)
    if high < low:
        return np.array([], dtype=np.int64)

    is_prime = np.ones(high - low + 1, dtype=bool)
    for p in base_primes.tolist():
        if p * p > high:
            break
        start = max(p * p, ((low + p - 1) // p) * p)
        is_prime[start - low :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64) + low


def mobius_phi_sieve(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """
    mu(n) and phi(n) for 0 <= n <= limit (index 0 is unused).

    Returns:
        (mu, phi) as int8 and int64 arrays of length limit + 1
    """
    mu = np.ones(limit + 1, dtype=np.int8)
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in simple_sieve(limit).tolist():
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
        phi[p::p] -= phi[p::p] // p
    return mu, phi
