"""Tunable limits for the exponential (brute-force) code paths."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    enumerate_max_n: int = 20          # 2^n generators enumerated
    generator_count_max_size: int = 20  # 2^|A| cut-rank evaluations
    sweep_max_n: int = 6               # all 2^(n choose 2) labeled graphs


DEFAULT_LIMITS = Limits()
