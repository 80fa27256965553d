from decimal import Decimal
from enum import Enum

# ---------------------------------
# Artin's constant, prod_p (1 - 1/(p(p-1)))
# ---------------------------------
ARTIN_CONSTANT_DIGITS = "0.373955813619202288054728054346"
ARTIN_CONSTANT = Decimal(ARTIN_CONSTANT_DIGITS)
MAX_DIGITS = 30

# ---------------------------------
# Input caps
# ---------------------------------
MAX_FACTOR_INPUT = 2**63
MAX_INT_EXPR_BITS = 64
MAX_MODULUS = 10**6
MIN_PROVEN_TRUNCATION = 16
MAX_SCAN_BOUND = 10**8

# ---------------------------------
# Tags
# ---------------------------------
class Method(str, Enum):
    CLOSED = "closed"
    CLOSED_V2 = "closed_v2"
    SERIES = "series"
    EMPIRICAL = "empirical"


class ZeroCase(str, Enum):
    ELEMENTARY_GCD = "ElementaryGcd"
    DISCRIMINANT_SPLITS = "DiscriminantSplits"
    CUBIC_OBSTRUCTION = "CubicObstruction"


class WudFamily(str, Enum):
    POWERS_OF_TWO = "PowersOfTwo"
    ONE_TWO_FOUR = "OneTwoFour"
    ONE_TWO = "OneTwo"
    EXCEPTIONAL_2M3N = "Exceptional2m3n"


class OutputFormat(str, Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


CSV_HEADER = ["g", "f", "a", "coefficient", "numeric", "method", "value", "error"]
SCAN_CSV_HEADER = ["a", "primes_in_class", "hits", "observed", "predicted", "abs_error"]
HEURISTIC_CSV_HEADER = ["a", "heuristic_sum", "predicted_main_term", "scaled_hits", "relative_error"]

# ---------------------------------
# Exit codes
# ---------------------------------
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2

# ---------------------------------
# Numerical defaults
# ---------------------------------
DEFAULT_SERIES_TRUNCATION = 10_000
DEFAULT_WORKING_PRECISION = 50
DEFAULT_DIGITS = 12
DEFAULT_SCAN_SEGMENT = 262_144
