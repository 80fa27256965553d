from sympy import isprime

from artin_progressions.arithmetic import prime_factors
from artin_progressions.exceptions import InvalidArgumentError


def has_full_order(residue: int, p: int, cofactor_primes) -> bool:
    """
    True if residue^((p-1)/q) != 1 (mod p) for every listed prime q | p - 1,
    i.e. the residue has multiplicative order p - 1.
    """
    return all(pow(residue, (p - 1) // q, p) != 1 for q in cofactor_primes)


def is_primitive_root(g: int, p: int) -> bool:
    """
    Decides whether g generates (Z/pZ)* for an odd prime p not dividing g.

    Raises:
        InvalidArgumentError: if p is 2, not prime, or divides g
    """
    if p == 2 or not isprime(p):
        raise InvalidArgumentError(f"p={p} must be an odd prime")
    if g % p == 0:
        raise InvalidArgumentError(f"p={p} divides g={g}")
    return has_full_order(g % p, p, prime_factors(p - 1))


def is_primitive_root_bruteforce(g: int, p: int) -> bool:
    """Order of g mod p by repeated multiplication; only for cross-checks on small p."""
    residue = g % p
    if residue == 0:
        return False
    value, order = residue, 1
    while value != 1:
        value = value * residue % p
        order += 1
    return order == p - 1
