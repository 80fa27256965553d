"""
Closed-form evaluation of delta(a, f, g), the density of primes p = a (mod f)
for which g is a primitive root.

Every density is carried as c * A with c an exact rational and A Artin's
constant; the Euler products over all primes are normalized against A by
dividing out the finitely many primes of f*h.
"""
import logging
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm, prod

import mpmath
from sympy import primerange

from artin_progressions.arithmetic import (
    euler_phi,
    factor,
    is_fundamental_discriminant,
    is_square,
    kronecker,
    mobius,
    prime_factors,
    squarefree_decompose,
)
from artin_progressions.constants import ARTIN_CONSTANT, MAX_DIGITS
from artin_progressions.exceptions import InvalidArgumentError, NotInGError
from artin_progressions.schemas import Base, DensityValue, Progression
from artin_progressions.utils import rational_times_decimal

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def make_base(g: int) -> Base:
    """
    Validates g as a member of G and derives h, g1, g2 and the discriminant of Q(sqrt(g)).

    h is the largest h with g = y^h for an integer y. For g < 0 only odd
    exponents are solvable, so the even part of the exponent gcd is dropped.

    Raises:
        NotInGError: if g is -1, 0, 1 or a perfect square
    """
    if g in (-1, 0, 1):
        raise NotInGError(g, "g must not be -1, 0 or 1")
    if is_square(g):
        raise NotInGError(g, "g is a perfect square")

    h = reduce(gcd, (e for _, e in factor(abs(g)).factors))
    if g < 0:
        while h % 2 == 0:
            h //= 2

    decomposition = squarefree_decompose(g)
    g1 = decomposition.g1
    delta = g1 if g1 % 4 == 1 else 4 * g1
    base = Base(g=g, h=h, g1=g1, g2=decomposition.g2, delta=delta)
    logger.debug(f"Base for g={g}: h={h}, g1={g1}, g2={decomposition.g2}, delta={delta}")
    return base


def gamma_factor(f: int, base: Base) -> tuple[int, int]:
    """
    Returns (b, gamma) with b = delta/(f, delta) and
    gamma = (-1)^((b-1)/2) (f, delta) if b is odd, 1 otherwise.
    """
    if f < 1:
        raise InvalidArgumentError(f"modulus f={f} must be positive")
    common = gcd(f, base.delta)
    b = base.delta // common
    if b % 2 == 0:
        return b, 1

    gamma = -common if ((b - 1) // 2) % 2 else common
    assert f % abs(gamma) == 0, f"gamma={gamma} does not divide f={f}"
    assert gamma == 1 or is_fundamental_discriminant(gamma), f"gamma={gamma} is not a discriminant"
    return b, gamma


def w(k: int, f: int, h: int) -> int:
    """w(k) = k phi(lcm(k, f)) / ((k, h) phi(f)); multiplicative in k and always an integer."""
    if min(k, f, h) < 1:
        raise InvalidArgumentError(f"w needs k, f, h >= 1, got k={k}, f={f}, h={h}")
    value, remainder = divmod(k * euler_phi(lcm(k, f)), gcd(k, h) * euler_phi(f))
    assert remainder == 0, f"w({k}) is not integral for f={f}, h={h}"
    return value


def coeff_A(progression: Progression, h: int) -> Fraction:
    """
    Exact c with A(a, f, h) = c * A.

    A(a,f,h) = prod_{p|(a-1,f)} (1-1/p) prod_{p!|f, p|h} (1-1/(p-1)) prod_{p!|f, p!|h} (1-1/(p(p-1)))
    when (a-1, f, h) = 1, and 0 otherwise. (a-1, f) = f for a = 1.
    """
    a, f = progression.a, progression.f
    if gcd(a - 1, f, h) > 1:
        return Fraction(0)

    c = Fraction(1)
    for p in prime_factors(gcd(a - 1, f)):
        c *= 1 - Fraction(1, p)
    for p in prime_factors(h):
        if f % p:
            c *= 1 - Fraction(1, p - 1)
    for p in sorted(set(prime_factors(f)) | set(prime_factors(h))):
        c /= 1 - Fraction(1, p * (p - 1))
    return c


def correction_denominator(b: int, h: int) -> int:
    """prod_{p|b} (w(p) - 1) for b coprime to f: p - 2 when p | h, p^2 - p - 1 otherwise."""
    return prod(p - 2 if h % p == 0 else p * p - p - 1 for p in prime_factors(b))


def s_of_b(progression: Progression, base: Base) -> Fraction:
    """Coefficient of A in S(b) = -mu(2|b|) A(a,f,h) / prod_{p|b} (w(p) - 1); zero for even b."""
    b, _ = gamma_factor(progression.f, base)
    mu = mobius(2 * abs(b))
    if mu == 0:
        return Fraction(0)
    denominator = prod(w(p, progression.f, base.h) - 1 for p in prime_factors(b))
    return -mu * coeff_A(progression, base.h) / denominator


def s2_of_b(progression: Progression, base: Base) -> Fraction:
    """The even-n part of S(b), which equals -S(b)."""
    return -s_of_b(progression, base)


def density_value(coefficient: Fraction, digits: int = MAX_DIGITS) -> DensityValue:
    """Wraps an exact coefficient with its decimal rendering coefficient * A."""
    if not 1 <= digits <= MAX_DIGITS:
        raise InvalidArgumentError(f"digits must lie in [1, {MAX_DIGITS}], got {digits}")
    return DensityValue(
        coefficient=coefficient,
        numeric=rational_times_decimal(coefficient, ARTIN_CONSTANT, digits),
        digits=digits,
    )


def delta_closed(progression: Progression, g: int, digits: int = MAX_DIGITS) -> DensityValue:
    """
    delta(a,f,g) = A(a,f,h)/phi(f) * (1 + (gamma/a) mu(2|b|) / prod_{p|b, p|h}(p-2) prod_{p|b, p!|h}(p^2-p-1))

    with (gamma/a) the Kronecker symbol.
    """
    base = make_base(g)
    a, f = progression.a, progression.f
    b, gamma = gamma_factor(f, base)

    coefficient = coeff_A(progression, base.h) / euler_phi(f)
    mu = mobius(2 * abs(b))
    if mu and coefficient:
        coefficient *= 1 + Fraction(kronecker(gamma, a) * mu, correction_denominator(b, base.h))
    return density_value(coefficient, digits)


def is_quadratic_case(g1: int, f: int) -> bool:
    """b is odd exactly when g1 = 1 (mod 4), or g1 = 2 (mod 4) and 8 | f, or g1 = 3 (mod 4) and 4 | f."""
    residue = g1 % 4
    return residue == 1 or (residue == 2 and f % 8 == 0) or (residue == 3 and f % 4 == 0)


def delta_closed_v2(progression: Progression, g: int, digits: int = MAX_DIGITS) -> DensityValue:
    """
    The same density written in terms of g1:

    beta = g1/(g1, f), gamma1 = (-1)^((beta-1)/2) (f, g1) for odd beta, and
    delta = A(a,f,h)/phi(f) * (1 - (gamma1/a) mu(|beta|) / prod_{p|beta} (...))
    in the quadratic case, A(a,f,h)/phi(f) otherwise.
    """
    base = make_base(g)
    a, f = progression.a, progression.f

    coefficient = coeff_A(progression, base.h) / euler_phi(f)
    if is_quadratic_case(base.g1, f) and coefficient:
        common = gcd(base.g1, f)
        beta = base.g1 // common
        if beta % 2:
            gamma1 = -common if ((beta - 1) // 2) % 2 else common
        else:
            gamma1 = 1
        coefficient *= 1 - Fraction(
            kronecker(gamma1, a) * mobius(abs(beta)),
            correction_denominator(beta, base.h),
        )
    return density_value(coefficient, digits)


def proof_identity(progression: Progression, g: int) -> tuple[Fraction, Fraction]:
    """
    Both sides of phi(f) delta(a,f,g) = I_1 + (gamma/a) S_2(b), as coefficients of A.
    I_1 is A(a,f,h).
    """
    base = make_base(g)
    _, gamma = gamma_factor(progression.f, base)
    lhs = euler_phi(progression.f) * delta_closed(progression, g).coefficient
    rhs = coeff_A(progression, base.h) + kronecker(gamma, progression.a) * s2_of_b(progression, base)
    return lhs, rhs


def densities(f: int, g: int, digits: int = MAX_DIGITS) -> dict[int, DensityValue]:
    """delta(a, f, g) for every coprime class a (mod f)."""
    return {p.a: delta_closed(p, g, digits) for p in Progression.all_classes(f)}


def total_density(g: int, f: int, classes: list[int]) -> Fraction:
    """Coefficient of A in the density of primes with primitive root g lying in any of the given classes mod f."""
    return sum((delta_closed(Progression(a=a, f=f), g).coefficient for a in {c % f or f for c in classes}), Fraction(0))


def truncated_euler_product(progression: Progression, h: int, bound: int):
    """
    Numeric value of the defining product of A(a, f, h), the infinite part
    truncated to primes p <= bound. Returns an mpmath number.
    """
    a, f = progression.a, progression.f
    if gcd(a - 1, f, h) > 1:
        return mpmath.mpf(0)

    value = mpmath.mpf(1)
    for p in prime_factors(gcd(a - 1, f)):
        value *= 1 - mpmath.mpf(1) / p
    for p in prime_factors(h):
        if f % p:
            value *= 1 - mpmath.mpf(1) / (p - 1)
    for p in primerange(2, bound + 1):
        if f % p and h % p:
            value *= 1 - mpmath.mpf(1) / (p * (p - 1))
    return value
