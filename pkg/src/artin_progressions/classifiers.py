"""
Decision procedures for when delta(a, f, g) vanishes and for the moduli f
modulo which the primes with primitive root g are weakly uniformly
distributed (every coprime class gets its fair share).
"""
import logging
from fractions import Fraction
from math import gcd

from artin_progressions.arithmetic import euler_phi, kronecker
from artin_progressions.constants import WudFamily, ZeroCase
from artin_progressions.density import delta_closed, make_base
from artin_progressions.exceptions import InvalidArgumentError
from artin_progressions.schemas import ModulusClassification, Progression, WudVerdict, ZeroReason

logger = logging.getLogger(__name__)


def zero_density(progression: Progression, g: int) -> ZeroReason:
    """
    delta(a, f, g) = 0 exactly when one of the following holds:
      ElementaryGcd:       (a-1, f, h) > 1
      DiscriminantSplits:  delta | f and (delta/a) = 1
      CubicObstruction:    delta | 3f, 3 | delta, 3 | h and ((-delta/3)/a) = -1
    """
    base = make_base(g)
    a, f = progression.a, progression.f
    disc = base.delta
    cases = []
    if gcd(a - 1, f, base.h) > 1:
        cases.append(ZeroCase.ELEMENTARY_GCD)
    if f % abs(disc) == 0 and kronecker(disc, a) == 1:
        cases.append(ZeroCase.DISCRIMINANT_SPLITS)
    if (3 * f) % abs(disc) == 0 and disc % 3 == 0 and base.h % 3 == 0 and kronecker(-disc // 3, a) == -1:
        cases.append(ZeroCase.CUBIC_OBSTRUCTION)
    return ZeroReason(triggered=bool(cases), cases=tuple(cases))


def is_exceptional(g: int) -> bool:
    """g1 = 21 and (h, 21) = 7: the only bases whose WUD moduli include odd primes."""
    base = make_base(g)
    return base.g1 == 21 and gcd(base.h, 21) == 7


def _strip(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def wud_set(g: int, f: int) -> WudVerdict:
    """
    Whether the primes with primitive root g are weakly uniformly distributed mod f:
      g1 = 1 (mod 4): f a power of 2
      g1 = 2 (mod 4): f in {1, 2, 4}
      g1 = 3 (mod 4): f in {1, 2}
      g1 = 21, (h, 21) = 7: f = 2^m 3^n
    """
    if f < 1:
        raise InvalidArgumentError(f"modulus f={f} must be positive")
    base = make_base(g)
    if is_exceptional(g):
        family, is_wud = WudFamily.EXCEPTIONAL_2M3N, _strip(_strip(f, 2), 3) == 1
    elif base.g1 % 4 == 1:
        family, is_wud = WudFamily.POWERS_OF_TWO, _strip(f, 2) == 1
    elif base.g1 % 4 == 2:
        family, is_wud = WudFamily.ONE_TWO_FOUR, f in (1, 2, 4)
    else:
        family, is_wud = WudFamily.ONE_TWO, f in (1, 2)
    return WudVerdict(g=g, f=f, is_wud=is_wud, family=family)


def zero_classes(g: int, f: int) -> list[int]:
    """Residues a (mod f) with delta(a, f, g) = 0."""
    return [p.a for p in Progression.all_classes(f) if zero_density(p, g).triggered]


def fair_shares(g: int, f: int) -> dict[int, Fraction]:
    """
    delta(a, f, g) divided by the fair share delta(1, 1, g)/phi(f), per class.
    All shares equal 1 exactly when the set is WUD mod f.
    """
    total = delta_closed(Progression(a=1, f=1), g).coefficient
    phi = euler_phi(f)
    return {p.a: phi * delta_closed(p, g).coefficient / total for p in Progression.all_classes(f)}


def classify(g: int, fmax: int) -> list[ModulusClassification]:
    """WUD verdict, vanishing classes and fair shares for every modulus 1 <= f <= fmax."""
    if fmax < 1:
        raise InvalidArgumentError(f"fmax={fmax} must be positive")
    rows = [
        ModulusClassification(
            g=g,
            f=f,
            wud=wud_set(g, f),
            zero_classes=zero_classes(g, f),
            fair_shares=fair_shares(g, f),
        )
        for f in range(1, fmax + 1)
    ]
    logger.info(f"Classified g={g} for f <= {fmax}: WUD at {[r.f for r in rows if r.wud.is_wud]}")
    return rows
