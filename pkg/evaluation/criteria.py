"""
Acceptance checks, one function per criterion.

Each check returns (checked_cases, failures, details); timing and error
handling live in evaluate_acceptance.py.
"""
import sys
from collections.abc import Callable
from fractions import Fraction
from itertools import product
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from artin_progressions.arithmetic import euler_phi, is_fundamental_discriminant, kronecker
from artin_progressions.classifiers import wud_set, zero_density
from artin_progressions.constants import ARTIN_CONSTANT_DIGITS
from artin_progressions.density import (
    coeff_A,
    delta_closed,
    delta_closed_v2,
    gamma_factor,
    make_base,
    s2_of_b,
    total_density,
)
from artin_progressions.empirical import hit_primes, scan
from artin_progressions.exceptions import NotInGError
from artin_progressions.schemas import Progression
from artin_progressions.series import series_all
from evaluation_models import Criterion

GRID_BASES = range(-50, 51)
GRID_MAX_MODULUS = 40
WUD_MAX_MODULUS = 48
SERIES_BASES = (2, -2, 3, -3, 5, -5, 6, 8, 12, 21)
SERIES_MAX_MODULUS = 24
SERIES_TRUNCATION = 10_000
SCAN_CASES = ((2, 4), (3, 5), (5, 8), (13, 12))
SCAN_BOUND = 10**6
EMPIRICAL_TOLERANCE = 0.01
HEURISTIC_TOLERANCE = 0.05
RANDOM_SEED = 20240611
RANDOM_CASES = 10_000

Outcome = tuple[int, list[str], dict]


def grid_bases() -> list[int]:
    """g in [-50, 50] that lie in G."""
    bases = []
    for g in GRID_BASES:
        try:
            make_base(g)
        except NotInGError:
            continue
        bases.append(g)
    return bases


def grid(max_modulus: int = GRID_MAX_MODULUS):
    for g in grid_bases():
        for f in range(1, max_modulus + 1):
            for progression in Progression.all_classes(f):
                yield g, progression


# ---------------------------------
# Exact closed forms
# ---------------------------------
def check_hooley() -> Outcome:
    value = delta_closed(Progression(a=1, f=1), 2)
    failures = []
    if value.coefficient != 1:
        failures.append(f"coefficient {value.coefficient} != 1")
    if not str(value.numeric).startswith(ARTIN_CONSTANT_DIGITS[:14]):
        failures.append(f"numeric {value.numeric} does not match A to 12 places")
    return 1, failures, {"coefficient": str(value.coefficient), "numeric": str(value.numeric)}


def check_rodier() -> Outcome:
    classes = [3, 19, 27]
    coefficients = {a: delta_closed(Progression(a=a, f=28), 2).coefficient for a in classes}
    failures = [f"a={a}: {c} != 7/82" for a, c in coefficients.items() if c != Fraction(7, 82)]
    total = total_density(2, 28, classes)
    if total != Fraction(21, 82):
        failures.append(f"three-class total {total} != 21/82")
    return len(classes) + 1, failures, {"coefficients": {a: str(c) for a, c in coefficients.items()}, "total": str(total)}


def check_two_closed_forms() -> Outcome:
    checked, failures = 0, []
    for g, progression in grid():
        checked += 1
        first = delta_closed(progression, g).coefficient
        second = delta_closed_v2(progression, g).coefficient
        if first != second:
            failures.append(f"(a={progression.a}, f={progression.f}, g={g}): {first} != {second}")
    return checked, failures, {}


def check_partition() -> Outcome:
    checked, failures = 0, []
    for g in grid_bases():
        whole = delta_closed(Progression(a=1, f=1), g).coefficient
        for f in range(1, GRID_MAX_MODULUS + 1):
            checked += 1
            parts = total_density(g, f, [p.a for p in Progression.all_classes(f)])
            if parts != whole:
                failures.append(f"(f={f}, g={g}): sum {parts} != {whole}")
    return checked, failures, {}


def check_proof_identity() -> Outcome:
    checked, failures = 0, []
    for g, progression in grid():
        checked += 1
        base = make_base(g)
        _, gamma = gamma_factor(progression.f, base)
        lhs = euler_phi(progression.f) * delta_closed(progression, g).coefficient
        rhs = coeff_A(progression, base.h) + kronecker(gamma, progression.a) * s2_of_b(progression, base)
        if lhs != rhs:
            failures.append(f"(a={progression.a}, f={progression.f}, g={g}): {lhs} != {rhs}")
    return checked, failures, {}


# ---------------------------------
# Independent oracles
# ---------------------------------
def check_series() -> Outcome:
    checked, failures, widest = 0, [], 0.0
    for g, f in product(SERIES_BASES, range(1, SERIES_MAX_MODULUS + 1)):
        estimates = series_all(f, g, SERIES_TRUNCATION)
        for a, estimate in estimates.items():
            checked += 1
            closed = delta_closed(Progression(a=a, f=f), g).numeric
            widest = max(widest, float(abs(closed - estimate.partial_sum)))
            if not estimate.contains(closed):
                failures.append(f"(a={a}, f={f}, g={g}): |{closed} - {estimate.partial_sum}| > {estimate.tail_bound}")
    return checked, failures, {"largest_deviation": widest}


def check_empirical() -> Outcome:
    checked, failures, errors = 0, [], {}
    for g, f in SCAN_CASES:
        for a, count in scan(g, f, SCAN_BOUND).items():
            checked += 1
            expected = float(delta_closed(Progression(a=a, f=f), g).numeric)
            error = abs(count.observed - expected)
            errors[f"g={g},f={f},a={a}"] = error
            if error > EMPIRICAL_TOLERANCE:
                failures.append(f"(a={a}, f={f}, g={g}): observed {count.observed:.6f} vs {expected:.6f}")
    return checked, failures, {"abs_errors": errors}


def check_zero_density() -> Outcome:
    checked, failures = 0, []
    for g, progression in grid():
        checked += 1
        triggered = zero_density(progression, g).triggered
        if triggered != delta_closed(progression, g).is_zero:
            failures.append(f"(a={progression.a}, f={progression.f}, g={g}): classifier says {triggered}")

    hits = {}
    for a, f, g in ((4, 5, 5), (3, 4, 27)):
        checked += 1
        found = hit_primes(g, f, 10**5)[a]
        hits[f"({a},{f},{g})"] = len(found)
        if found:
            failures.append(f"({a},{f},{g}): primitive-root primes {found[:5]} in a zero-density class")
    return checked, failures, {"scan_hits": hits}


def check_wud() -> Outcome:
    checked, failures = 0, []
    for g in grid_bases():
        for f in range(1, WUD_MAX_MODULUS + 1):
            checked += 1
            coefficients = {delta_closed(p, g).coefficient for p in Progression.all_classes(f)}
            verdict = wud_set(g, f)
            if verdict.is_wud != (len(coefficients) == 1):
                failures.append(f"(f={f}, g={g}): wud_set says {verdict.is_wud}")

    exceptional = 21**7
    expected = {3: True, 9: True, 12: True, 5: False, 7: False}
    for f, is_wud in expected.items():
        checked += 1
        if wud_set(exceptional, f).is_wud != is_wud:
            failures.append(f"(f={f}, g=21^7): expected WUD {is_wud}")
        coefficients = {delta_closed(p, exceptional).coefficient for p in Progression.all_classes(f)}
        if (len(coefficients) == 1) != is_wud:
            failures.append(f"(f={f}, g=21^7): densities disagree with expected WUD {is_wud}")
    return checked, failures, {}


def check_kronecker() -> Outcome:
    checked, failures = 0, []
    for d in range(-200, 201):
        if not is_fundamental_discriminant(d):
            continue
        for a in range(1, abs(d) + 1):
            for k in range(1, 11):
                checked += 1
                if kronecker(d, a + k * abs(d)) != kronecker(d, a):
                    failures.append(f"periodicity: ({d}/{a}) vs ({d}/{a + k * abs(d)})")

    rng = np.random.default_rng(RANDOM_SEED)
    for m, n in rng.integers(1, 10**6, size=(RANDOM_CASES, 2)).tolist():
        m, n = 2 * m + 1, 2 * n + 1
        if np.gcd(m, n) != 1:
            continue
        checked += 1
        sign = -1 if ((m - 1) // 2) * ((n - 1) // 2) % 2 else 1
        if kronecker(m, n) * kronecker(n, m) != sign:
            failures.append(f"reciprocity: m={m}, n={n}")

    for a, b, m, n in rng.integers(-10**5, 10**5, size=(RANDOM_CASES, 4)).tolist():
        if 0 in (a, b, m, n):
            continue
        checked += 1
        if kronecker(a * b, n) != kronecker(a, n) * kronecker(b, n):
            failures.append(f"multiplicative in a: a={a}, b={b}, n={n}")
        if kronecker(a, m * n) != kronecker(a, m) * kronecker(a, n):
            failures.append(f"multiplicative in b: a={a}, m={m}, n={n}")
    return checked, failures, {}


def check_heuristic() -> Outcome:
    checked, failures, relative = 0, [], {}
    for a, count in scan(2, 4, SCAN_BOUND).items():
        checked += 1
        scaled = count.hits * float(count.li_x) / count.primes_total
        error = abs(float(count.heuristic_sum) - scaled) / scaled
        relative[a] = error
        if error > HEURISTIC_TOLERANCE:
            failures.append(f"a={a}: heuristic {count.heuristic_sum} vs scaled hits {scaled:.3f}")
    return checked, failures, {"relative_errors": relative}


CRITERIA: dict[int, tuple[Criterion, Callable[[], Outcome]]] = {
    1: (Criterion(criterion_id=1, name="Hooley recovery", runtime_budget_seconds=0.001), check_hooley),
    2: (Criterion(criterion_id=2, name="Rodier correction", runtime_budget_seconds=0.001), check_rodier),
    3: (Criterion(criterion_id=3, name="Two closed forms agree", runtime_budget_seconds=30), check_two_closed_forms),
    4: (Criterion(criterion_id=4, name="Partition identity"), check_partition),
    5: (Criterion(criterion_id=5, name="Proof identity"), check_proof_identity),
    6: (Criterion(criterion_id=6, name="Series vs closed form", runtime_budget_seconds=60), check_series),
    7: (Criterion(criterion_id=7, name="Empirical convergence", runtime_budget_seconds=60), check_empirical),
    8: (Criterion(criterion_id=8, name="Zero-density soundness"), check_zero_density),
    9: (Criterion(criterion_id=9, name="WUD moduli"), check_wud),
    10: (Criterion(criterion_id=10, name="Kronecker laws", runtime_budget_seconds=5), check_kronecker),
    11: (Criterion(criterion_id=11, name="Heuristic sum"), check_heuristic),
}
