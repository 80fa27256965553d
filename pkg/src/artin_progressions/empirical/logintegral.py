from decimal import Decimal

import mpmath

from artin_progressions.constants import DEFAULT_WORKING_PRECISION
from artin_progressions.exceptions import InvalidArgumentError
from artin_progressions.utils import mpf_to_decimal


def li(x: int, dps: int = DEFAULT_WORKING_PRECISION) -> Decimal:
    """
    Li(x) = integral from 2 to x of dt / log t, by adaptive (tanh-sinh) quadrature
    on decade-spaced subintervals.
    """
    if x < 2:
        raise InvalidArgumentError(f"Li(x) needs x >= 2, got {x}")
    if x == 2:
        return Decimal(0)
    with mpmath.workdps(dps):
        points = [mpmath.mpf(2)]
        decade = 10
        while decade < x:
            points.append(mpmath.mpf(decade))
            decade *= 10
        points.append(mpmath.mpf(x))
        value = mpmath.quad(lambda t: 1 / mpmath.log(t), points)
        return mpf_to_decimal(value, dps)
