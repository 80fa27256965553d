import logging
from decimal import Decimal

from pydantic import BaseModel, computed_field

from artin_progressions.classifiers import zero_density
from artin_progressions.constants import DEFAULT_SCAN_SEGMENT, DEFAULT_SERIES_TRUNCATION, DEFAULT_WORKING_PRECISION
from artin_progressions.density import delta_closed, delta_closed_v2, make_base
from artin_progressions.empirical import scan
from artin_progressions.schemas import DensityValue, EmpiricalCount, Progression, SeriesEstimate, ZeroReason
from artin_progressions.series import series_truncated

logger = logging.getLogger(__name__)


class ResidueVerification(BaseModel):
    a: int
    closed: DensityValue
    closed_v2: DensityValue
    series: SeriesEstimate
    empirical: EmpiricalCount
    zero: ZeroReason
    empirical_error: Decimal
    closed_v2_agrees: bool
    series_ok: bool
    empirical_ok: bool
    zero_ok: bool

    @computed_field
    @property
    def passed(self) -> bool:
        return self.closed_v2_agrees and self.series_ok and self.empirical_ok and self.zero_ok


class VerificationReport(BaseModel):
    g: int
    f: int
    N: int
    x: int
    tolerance: float
    rows: list[ResidueVerification]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def verify_residue(
    progression: Progression,
    g: int,
    series: SeriesEstimate,
    empirical: EmpiricalCount,
    tolerance: float,
) -> ResidueVerification:
    """
    Cross-checks one class:
    - both closed forms agree exactly
    - the closed form lies within the series tail bound
    - the observed share of hits is within `tolerance` of the closed form
    - the zero-density classifier fires exactly for a zero coefficient, and then no hit was seen
    """
    closed = delta_closed(progression, g)
    closed_v2 = delta_closed_v2(progression, g)
    zero = zero_density(progression, g)
    error = abs(Decimal(empirical.hits) / Decimal(empirical.primes_total) - closed.numeric)

    return ResidueVerification(
        a=progression.a,
        closed=closed,
        closed_v2=closed_v2,
        series=series,
        empirical=empirical,
        zero=zero,
        empirical_error=error,
        closed_v2_agrees=closed.coefficient == closed_v2.coefficient,
        series_ok=series.contains(closed.numeric),
        empirical_ok=error <= Decimal(str(tolerance)),
        zero_ok=zero.triggered == closed.is_zero and (not closed.is_zero or empirical.hits == 0),
    )


def run_verification(
    g: int,
    f: int,
    N: int = DEFAULT_SERIES_TRUNCATION,
    x: int = 1_000_000,
    tolerance: float = 0.01,
    workers: int | None = None,
    segment_size: int = DEFAULT_SCAN_SEGMENT,
    dps: int = DEFAULT_WORKING_PRECISION,
) -> VerificationReport:
    """
    Runs the three independent paths (closed form, truncated series, prime scan)
    for every coprime class mod f and collects per-class verdicts.
    """
    make_base(g)
    logger.info(f"Verifying g={g}, f={f} with N={N}, x={x}")

    counts = scan(g, f, x, workers=workers, segment_size=segment_size)
    rows = [
        verify_residue(progression, g, series_truncated(progression, g, N, dps), counts[progression.a], tolerance)
        for progression in Progression.all_classes(f)
    ]
    report = VerificationReport(g=g, f=f, N=N, x=x, tolerance=tolerance, rows=rows)

    failed = [row.a for row in rows if not row.passed]
    if failed:
        logger.error(f"Verification failed for g={g}, f={f} at residues {failed}")
    else:
        logger.info(f"Verification passed for g={g}, f={f} ({len(rows)} residues)")
    return report
