"""
Prime-scanning harness: counts, for each coprime class a (mod f), the primes
p <= x in the class and those for which g is a primitive root, and accumulates
the weighted heuristic sum of the same class.

[2, x] is cut into fixed-length segments, each sieved and tallied
independently (optionally in worker processes); tallies merge in segment
order, so results do not depend on the number of workers.
"""
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal

import numpy as np

from artin_progressions.constants import DEFAULT_SCAN_SEGMENT, MAX_SCAN_BOUND
from artin_progressions.density import make_base
from artin_progressions.empirical.logintegral import li
from artin_progressions.empirical.primitive_root import has_full_order
from artin_progressions.empirical.sieve import sieve_segment, simple_sieve
from artin_progressions.exceptions import InvalidArgumentError
from artin_progressions.schemas import EmpiricalCount, Progression

logger = logging.getLogger(__name__)


@dataclass
class SegmentTally:
    primes_total: int = 0
    in_class: dict[int, int] = field(default_factory=dict)
    hits: dict[int, int] = field(default_factory=dict)
    heuristic: dict[int, float] = field(default_factory=dict)
    hit_primes: dict[int, list[int]] = field(default_factory=dict)


@dataclass(frozen=True)
class SegmentTask:
    low: int
    high: int
    g: int
    h: int
    f: int
    classes: tuple[int, ...]
    base_primes: np.ndarray
    keep_hits: bool = False


def _prime_divisors_of_predecessors(primes: np.ndarray, base_primes: np.ndarray, high: int) -> list[list[int]]:
    """Distinct prime divisors of p - 1 for every p in the segment."""
    cofactor = primes - 1
    divisors: list[list[int]] = [[] for _ in range(len(primes))]
    for q in base_primes.tolist():
        if q * q > high:
            break
        idx = np.flatnonzero(cofactor % q == 0)
        for i in idx.tolist():
            divisors[i].append(q)
        while idx.size:
            cofactor[idx] //= q
            idx = idx[cofactor[idx] % q == 0]
    # what remains is 1 or a single prime above sqrt(high)
    for i, rest in enumerate(cofactor.tolist()):
        if rest > 1:
            divisors[i].append(rest)
    return divisors


def tally_segment(task: SegmentTask) -> SegmentTally:
    primes = sieve_segment(task.low, task.high, task.base_primes)
    divisors = _prime_divisors_of_predecessors(primes, task.base_primes, task.high)

    tally = SegmentTally(primes_total=len(primes))
    for a in task.classes:
        tally.in_class[a] = 0
        tally.hits[a] = 0
        tally.hit_primes[a] = []
    terms: dict[int, list[float]] = {a: [] for a in task.classes}

    for p, qs in zip(primes.tolist(), divisors):
        a = p % task.f or task.f
        if a not in tally.in_class:
            continue
        tally.in_class[a] += 1
        residue = task.g % p
        if p == 2 or residue == 0:
            continue
        if has_full_order(residue, p, qs):
            tally.hits[a] += 1
            if task.keep_hits:
                tally.hit_primes[a].append(p)
        if pow(residue, (p - 1) // 2, p) == p - 1 and all(task.h % q for q in qs):
            terms[a].append(math.prod(1 - 1 / q for q in qs))

    tally.heuristic = {a: math.fsum(values) for a, values in terms.items()}
    return tally


def _segments(x: int, segment_size: int) -> list[tuple[int, int]]:
    return [(low, min(low + segment_size - 1, x)) for low in range(2, x + 1, segment_size)]


def _run_tallies(
    g: int,
    f: int,
    x: int,
    workers: int | None,
    segment_size: int,
    keep_hits: bool = False,
) -> list[SegmentTally]:
    if x < 2:
        raise InvalidArgumentError(f"scan bound x={x} must be at least 2")
    if x > MAX_SCAN_BOUND:
        raise InvalidArgumentError(f"scan bound x={x} exceeds {MAX_SCAN_BOUND}")
    if segment_size < 1:
        raise InvalidArgumentError(f"segment size {segment_size} must be positive")

    base = make_base(g)
    classes = tuple(p.a for p in Progression.all_classes(f))
    base_primes = simple_sieve(math.isqrt(x))
    tasks = [
        SegmentTask(low, high, g, base.h, f, classes, base_primes, keep_hits)
        for low, high in _segments(x, segment_size)
    ]
    workers = workers or os.cpu_count() or 1
    logger.info(f"Scanning g={g}, f={f}, x={x}: {len(tasks)} segment(s), {workers} worker(s)")

    if workers == 1 or len(tasks) == 1:
        return [tally_segment(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(tally_segment, tasks))


def scan(
    g: int,
    f: int,
    x: int,
    workers: int | None = None,
    segment_size: int = DEFAULT_SCAN_SEGMENT,
) -> dict[int, EmpiricalCount]:
    """
    Empirical counts for every coprime class a (mod f) at bound x.

    p = 2 and primes dividing g are counted in primes_total (and in their
    class) but are never hits.

    Raises:
        NotInGError: if g is not in G
        InvalidArgumentError: if x < 2 or x > 10^8
    """
    tallies = _run_tallies(g, f, x, workers, segment_size)
    primes_total = sum(t.primes_total for t in tallies)
    li_x = li(x)

    counts = {}
    for a in tallies[0].in_class:
        heuristic = math.fsum(t.heuristic[a] for t in tallies)
        counts[a] = EmpiricalCount(
            g=g,
            f=f,
            a=a,
            x=x,
            primes_total=primes_total,
            primes_in_class=sum(t.in_class[a] for t in tallies),
            hits=sum(t.hits[a] for t in tallies),
            heuristic_sum=Decimal(repr(2 * heuristic)),
            li_x=li_x,
        )
    logger.info(f"Scan g={g}, f={f}, x={x} done: {primes_total} primes, {sum(c.hits for c in counts.values())} hits")
    return counts


def hit_primes(
    g: int,
    f: int,
    x: int,
    workers: int | None = None,
    segment_size: int = DEFAULT_SCAN_SEGMENT,
) -> dict[int, list[int]]:
    """The primes p <= x counted as hits, per class, in increasing order."""
    tallies = _run_tallies(g, f, x, workers, segment_size, keep_hits=True)
    return {a: [p for t in tallies for p in t.hit_primes[a]] for a in tallies[0].in_class}
