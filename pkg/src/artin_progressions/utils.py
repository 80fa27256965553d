import re
from decimal import Decimal, ROUND_DOWN, localcontext
from fractions import Fraction

import mpmath

from artin_progressions.constants import MAX_INT_EXPR_BITS

_INT_EXPR = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:(?:\^|\*\*)\s*(\d+))?\s*$")


def parse_int_expr(text: str) -> int:
    """
    Parses an integer written plainly or as a power, e.g. "-12", "21^7", "21**7".
    A leading sign applies to the whole power, so "-2^3" is -8.
    Values wider than 64 bits are rejected before any power is computed.
    """
    match = _INT_EXPR.match(str(text))
    if not match:
        raise ValueError(f"not an integer expression: {text!r}")
    sign, base, exponent = match.groups()
    value = int(base)
    if exponent:
        power = int(exponent)
        if value > 1 and power * (value.bit_length() - 1) >= MAX_INT_EXPR_BITS:
            raise ValueError(f"{text!r} exceeds {MAX_INT_EXPR_BITS} bits")
        value **= power
    if value.bit_length() > MAX_INT_EXPR_BITS:
        raise ValueError(f"{text!r} exceeds {MAX_INT_EXPR_BITS} bits")
    return -value if sign == "-" else value


def parse_rational(value: int | str | Fraction) -> Fraction:
    """Accepts an int, a Fraction or a "p/q" string and returns the canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and re.fullmatch(r"\s*[+-]?\d+\s*(/\s*\d+\s*)?", value):
        return Fraction(value.replace(" ", ""))
    raise ValueError(f"not an exact rational: {value!r}")


def render_rational(value: Fraction) -> str:
    """Canonical "p/q" string; integers render without a denominator."""
    return str(value)


def truncate_significant(value: Decimal, digits: int) -> Decimal:
    """Truncates (rounds toward zero) a decimal to the given number of significant digits."""
    if value == 0:
        return Decimal(0)
    with localcontext() as ctx:
        ctx.prec = max(digits, value.adjusted() + 1) + 40
        exponent = value.adjusted() - digits + 1
        return value.quantize(Decimal(1).scaleb(exponent), rounding=ROUND_DOWN)


def rational_times_decimal(coefficient: Fraction, constant: Decimal, digits: int) -> Decimal:
    """coefficient * constant, truncated to `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = 100
        product = Decimal(coefficient.numerator) * constant / Decimal(coefficient.denominator)
    return truncate_significant(product, digits)


def mpf_to_decimal(value, digits: int) -> Decimal:
    """Converts an mpmath number to Decimal through its decimal string (no binary rounding)."""
    return Decimal(mpmath.nstr(mpmath.mpf(value), digits, strip_zeros=False))
