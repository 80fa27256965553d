from artin_progressions.empirical.sieve import simple_sieve, sieve_segment, mobius_phi_sieve
from artin_progressions.empirical.primitive_root import is_primitive_root, is_primitive_root_bruteforce
from artin_progressions.empirical.logintegral import li
from artin_progressions.empirical.scan import scan, hit_primes
from artin_progressions.empirical.heuristic import heuristic_sum


__all__ = [
    "simple_sieve",
    "sieve_segment",
    "mobius_phi_sieve",
    "is_primitive_root",
    "is_primitive_root_bruteforce",
    "li",
    "scan",
    "hit_primes",
    "heuristic_sum",
]
