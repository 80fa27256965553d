import logging
from decimal import Decimal

from artin_progressions.constants import DEFAULT_SCAN_SEGMENT
from artin_progressions.empirical.scan import scan
from artin_progressions.schemas import Progression

logger = logging.getLogger(__name__)


def heuristic_sum(
    g: int,
    f: int,
    a: int,
    x: int,
    workers: int | None = None,
    segment_size: int = DEFAULT_SCAN_SEGMENT,
) -> Decimal:
    """
    2 * sum over primes 2 < p <= x with (g/p) = -1, p = a (mod f), gcd(p-1, h) = 1
    of phi(p-1)/(p-1).

    Its main term is delta(a, f, g) Li(x), so it tracks the count of hits.
    """
    progression = Progression(a=a, f=f)
    logger.debug(f"Heuristic sum for a={a} (mod {f}), g={g}, x={x}")
    return scan(g, progression.f, x, workers, segment_size)[progression.a].heuristic_sum
