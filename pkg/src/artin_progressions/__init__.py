from artin_progressions.density import delta_closed, delta_closed_v2, densities, make_base
from artin_progressions.series import series_truncated
from artin_progressions.classifiers import classify, wud_set, zero_density
from artin_progressions.pipeline import run_verification
from artin_progressions.schemas import Progression


__all__ = [
    "delta_closed",
    "delta_closed_v2",
    "densities",
    "make_base",
    "series_truncated",
    "classify",
    "wud_set",
    "zero_density",
    "run_verification",
    "Progression",
]
