import logging
from collections.abc import Callable
from fractions import Fraction
from typing import TypeVar

from fastapi import APIRouter, HTTPException, Query
from pydantic import ValidationError

from artin_progressions.api.models import BaseResponse, ClassificationResponse, DensityResponse
from artin_progressions.classifiers import classify
from artin_progressions.config import Settings
from artin_progressions.constants import MAX_DIGITS, MAX_SCAN_BOUND, Method
from artin_progressions.density import densities, make_base
from artin_progressions.exceptions import DensityError
from artin_progressions.pipeline import VerificationReport, run_verification
from artin_progressions.schemas import OutputRecord, Progression
from artin_progressions.utils import parse_int_expr, render_rational

logger = logging.getLogger(__name__)

router = APIRouter(tags=["densities"])

settings = Settings.get_settings()

T = TypeVar("T")


def _guarded(call: Callable[[], T]) -> T:
    """Runs a library call, turning rejected inputs into a 400."""
    try:
        return call()
    except (DensityError, ValidationError, ValueError) as e:
        logger.warning(f"Rejected request: {e}")
        raise HTTPException(status_code=400, detail=str(e))


def _base_response(g: int) -> BaseResponse:
    base = make_base(g)
    return BaseResponse(g=base.g, h=base.h, g1=base.g1, g2=base.g2, discriminant=base.delta)


@router.get("/densities/{g}/{f}", response_model=DensityResponse)
def get_densities(
    g: str,
    f: int,
    a: int | None = Query(None, description="single residue class; all coprime classes when omitted"),
    digits: int = Query(settings.DEFAULT_DIGITS, ge=1, le=MAX_DIGITS),
):
    """
    Exact density of primes p = a (mod f) with primitive root g, for every coprime a.
    g may be written as a power, e.g. 21^7. `total` always sums over every class.
    """
    g_value = _guarded(lambda: parse_int_expr(g))
    values = _guarded(lambda: densities(f, g_value, digits))
    if a is not None:
        _guarded(lambda: Progression(a=a, f=f))
    records = [
        OutputRecord(g=g_value, f=f, a=c, coefficient=v.coefficient, numeric=v.numeric, method=Method.CLOSED)
        for c, v in values.items()
        if a is None or c == a
    ]
    total = sum((v.coefficient for v in values.values()), Fraction(0))
    return DensityResponse(
        base=_guarded(lambda: _base_response(g_value)),
        f=f,
        digits=digits,
        total=render_rational(total),
        densities=records,
    )


@router.get("/densities/{g}/{f}/verify", response_model=VerificationReport)
def verify_densities(
    g: str,
    f: int,
    N: int = Query(settings.SERIES_TRUNCATION, ge=1),
    x: int = Query(settings.SCAN_BOUND, ge=2, le=min(settings.MAX_SCAN_BOUND, MAX_SCAN_BOUND)),
    tolerance: float = Query(settings.EMPIRICAL_TOLERANCE, gt=0),
):
    """
    Cross-checks the closed form against the truncated series and a prime scan up to x.
    """
    g_value = _guarded(lambda: parse_int_expr(g))
    return _guarded(
        lambda: run_verification(
            g_value,
            f,
            N=N,
            x=x,
            tolerance=tolerance,
            workers=settings.SCAN_WORKERS,
            segment_size=settings.SCAN_SEGMENT_SIZE,
            dps=settings.WORKING_PRECISION,
        )
    )


@router.get("/classifications/{g}", response_model=ClassificationResponse)
def get_classifications(g: str, fmax: int = Query(24, ge=1, le=1000)):
    """
    WUD verdict, vanishing classes and fair shares for every modulus up to fmax.
    """
    g_value = _guarded(lambda: parse_int_expr(g))
    rows = _guarded(lambda: classify(g_value, fmax))
    return ClassificationResponse(
        base=_guarded(lambda: _base_response(g_value)),
        fmax=fmax,
        wud_moduli=[row.f for row in rows if row.wud.is_wud],
        moduli=rows,
    )
