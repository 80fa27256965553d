"""
Exact integer arithmetic: factorization, multiplicative functions,
squarefree decomposition, fundamental discriminants and the Kronecker symbol.

Every function here is pure; factorizations are memoized.
"""
import logging
from functools import lru_cache
from math import isqrt, prod

from sympy import factorint
from sympy.functions.combinatorial.numbers import kronecker_symbol

from artin_progressions.constants import MAX_FACTOR_INPUT
from artin_progressions.exceptions import InvalidArgumentError
from artin_progressions.schemas import Factorization, SquarefreeDecomposition

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1 << 18)
def factor(n: int) -> Factorization:
    """
    Factors a positive integer into (prime, exponent) pairs, primes increasing.

    sympy's factorint trial-divides small primes first and falls back to
    Pollard rho / p-1 for the cofactor; inputs are capped at 2^63.

    Raises:
        InvalidArgumentError: if n < 1 or n > 2^63
    """
    if n < 1:
        raise InvalidArgumentError(f"cannot factor {n}: input must be a positive integer")
    if n > MAX_FACTOR_INPUT:
        raise InvalidArgumentError(f"cannot factor {n}: input exceeds 2^63")
    return Factorization(value=n, factors=tuple(sorted(factorint(n).items())))


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct primes dividing |n|, increasing; empty for n = +-1."""
    return factor(abs(n)).primes


def mobius(n: int) -> int:
    fac = factor(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def euler_phi(n: int) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in factor(n).factors)


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for _, e in factor(abs(n)).factors)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def squarefree_decompose(g: int) -> SquarefreeDecomposition:
    """
    Writes g = g1 * g2^2 with g1 squarefree (carrying the sign of g) and g2 > 0.

    Raises:
        InvalidArgumentError: if g == 0
    """
    if g == 0:
        raise InvalidArgumentError("0 has no squarefree decomposition")
    fac = factor(abs(g))
    g1 = prod(p for p, e in fac.factors if e % 2)
    g2 = prod(p ** (e // 2) for p, e in fac.factors)
    return SquarefreeDecomposition(g1=g1 if g > 0 else -g1, g2=g2)


def is_fundamental_discriminant(d: int) -> bool:
    """True if d is the discriminant of a quadratic field."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def conductor(d: int) -> int:
    """
    Conductor of the quadratic field of discriminant d: Q(zeta_|d|) is the
    smallest cyclotomic field containing it.
    """
    if not is_fundamental_discriminant(d):
        raise InvalidArgumentError(f"{d} is not a fundamental discriminant")
    return abs(d)


def kronecker(a: int, b: int) -> int:
    """
    Kronecker symbol (a/b): the Jacobi symbol extended by (a/-1) = sign(a)
    and (a/2) = (2/a) for odd a, 0 for even a, multiplicatively in b.

    Returns 0 whenever gcd(a, b) > 1; (0/b) is 1 for b = +-1 and 0 otherwise.

    Raises:
        InvalidArgumentError: if b == 0
    """
    if b == 0:
        raise InvalidArgumentError("the Kronecker symbol (a/0) is not defined here")
    return int(kronecker_symbol(a, b))
