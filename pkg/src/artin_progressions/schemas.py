from decimal import Decimal
from fractions import Fraction
from math import gcd, prod
from typing import Annotated

from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator, WithJsonSchema, model_validator
from sympy import isprime

from artin_progressions.constants import MAX_MODULUS, Method, WudFamily, ZeroCase
from artin_progressions.exceptions import InvalidArgumentError
from artin_progressions.utils import parse_rational, render_rational, truncate_significant

# ExactRational: fractions.Fraction, serialized as its canonical "p/q" string
Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(render_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+(/\d+)?$"}),
]


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True)


# ---------------------------------
# Core arithmetic
# ---------------------------------
class Factorization(FrozenModel):
    value: int
    factors: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check(self):
        if self.value < 1:
            raise ValueError("a factorization is of a positive integer")
        primes = [p for p, _ in self.factors]
        if any(q <= p for p, q in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")
        if not all(isprime(p) for p in primes):
            raise ValueError("every listed factor must be prime")
        if prod(p**e for p, e in self.factors) != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")
        return self

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


class SquarefreeDecomposition(FrozenModel):
    g1: int
    g2: int

    @model_validator(mode="after")
    def _check(self):
        if self.g1 == 0 or self.g2 < 1:
            raise ValueError("g1 must be nonzero and g2 positive")
        return self

    @property
    def value(self) -> int:
        return self.g1 * self.g2**2


# ---------------------------------
# Closed-form density
# ---------------------------------
class Base(FrozenModel):
    g: int
    h: int
    g1: int
    g2: int
    delta: int

    @model_validator(mode="after")
    def _check(self):
        from artin_progressions.arithmetic import is_fundamental_discriminant

        if self.g in (-1, 0, 1):
            raise ValueError(f"g={self.g} is not in G")
        if self.h < 1 or self.h % 2 == 0:
            raise ValueError(f"h={self.h} must be odd")
        if self.g1 * self.g2**2 != self.g:
            raise ValueError("g != g1 * g2^2")
        expected = self.g1 if self.g1 % 4 == 1 else 4 * self.g1
        if self.delta != expected or not is_fundamental_discriminant(self.delta):
            raise ValueError(f"delta={self.delta} is not the discriminant of Q(sqrt({self.g}))")
        return self


class Progression(FrozenModel):
    a: int
    f: int

    @model_validator(mode="after")
    def _check(self):
        if not 1 <= self.f <= MAX_MODULUS:
            raise ValueError(f"modulus f={self.f} must lie in [1, {MAX_MODULUS}]")
        if not 1 <= self.a <= self.f:
            raise ValueError(f"residue a={self.a} must lie in [1, {self.f}]")
        if gcd(self.a, self.f) != 1:
            raise ValueError(f"gcd(a, f) = gcd({self.a}, {self.f}) > 1")
        return self

    @classmethod
    def all_classes(cls, f: int) -> list["Progression"]:
        """Every coprime residue class a (mod f), 1 <= a <= f."""
        if not 1 <= f <= MAX_MODULUS:
            raise InvalidArgumentError(f"modulus f={f} must lie in [1, {MAX_MODULUS}]")
        return [cls(a=a, f=f) for a in range(1, f + 1) if gcd(a, f) == 1]


class DensityValue(FrozenModel):
    coefficient: Rational
    numeric: Decimal
    digits: int = 30

    @model_validator(mode="after")
    def _check(self):
        if self.coefficient < 0:
            raise ValueError(f"negative density coefficient {self.coefficient}")
        if not 0 <= self.numeric < 1:
            raise ValueError(f"density {self.numeric} outside [0, 1)")
        return self

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0

    def render(self, digits: int | None = None) -> str:
        """Numeric value truncated to `digits` significant digits; every stored digit by default."""
        if digits is None:
            return str(self.numeric)
        return str(truncate_significant(self.numeric, digits))


# ---------------------------------
# Series oracle
# ---------------------------------
class SeriesEstimate(FrozenModel):
    partial_sum: Decimal
    truncation_N: int
    tail_bound: Decimal

    def contains(self, value: Decimal) -> bool:
        """True if value lies within tail_bound of the partial sum."""
        return abs(value - self.partial_sum) <= self.tail_bound


# ---------------------------------
# Empirical scan
# ---------------------------------
class EmpiricalCount(FrozenModel):
    g: int
    f: int
    a: int
    x: int
    primes_total: int
    primes_in_class: int
    hits: int
    heuristic_sum: Decimal
    li_x: Decimal

    @model_validator(mode="after")
    def _check(self):
        if not 0 <= self.hits <= self.primes_in_class <= self.primes_total:
            raise ValueError("counts must satisfy hits <= primes_in_class <= primes_total")
        return self

    @property
    def observed(self) -> float:
        """Share of all primes up to x that are hits in this class."""
        return self.hits / self.primes_total if self.primes_total else 0.0


# ---------------------------------
# Classifiers
# ---------------------------------
class ZeroReason(FrozenModel):
    triggered: bool
    cases: tuple[ZeroCase, ...] = ()

    @model_validator(mode="after")
    def _check(self):
        if self.triggered != bool(self.cases):
            raise ValueError("triggered must hold exactly when some case applies")
        return self


class WudVerdict(FrozenModel):
    g: int
    f: int
    is_wud: bool
    family: WudFamily


class ModulusClassification(FrozenModel):
    g: int
    f: int
    wud: WudVerdict
    zero_classes: list[int]
    fair_shares: dict[int, Rational]


# ---------------------------------
# Output
# ---------------------------------
class OutputRecord(FrozenModel):
    g: int
    f: int
    a: int
    coefficient: Rational
    numeric: Decimal
    method: Method
    value: Decimal | None = None
    error: Decimal | None = None
