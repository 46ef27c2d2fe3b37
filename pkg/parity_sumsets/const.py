"""Constants for the parity sumsets toolkit."""

from __future__ import annotations

from typing import Final

# Do not commit as True
DEBUG: Final = False

NAME: Final = "parity-sumsets"

# Exponent range (64-bit unsigned)
EXPONENT_MAX: Final = 2**64 - 1

# Products whose exponent span stays below this are computed densely
DENSE_SPAN_LIMIT: Final = 2**26
# Both operands above this many bits -> Karatsuba split
KARATSUBA_THRESHOLD: Final = 2**16
# Multipliers with at most this many terms use plain per-term shift-XOR
SPARSE_MULTIPLIER_TERMS: Final = 64
WINDOW_BITS: Final = 8

# Certificates
CERTIFICATE_FULL_LIMIT: Final = 2**16
COUNT_LIMIT: Final = 2**128

# Pilz scan
SCAN_BUDGET: Final = 2**24
CUBE_MAX_DIMENSION: Final = 3
LOWER_BOUND_LAMBDA: Final = 0.2223
LOWER_BOUND_LOG_BASE: Final = "e"

# Randomized paths
DEFAULT_SEED: Final = 0

# Bench
BENCH_MAX_DEGREE: Final = 2**26
BENCH_CHECK_BITS: Final = 2**10

# Exit codes
EXIT_OK: Final = 0
EXIT_VIOLATION: Final = 1
EXIT_INPUT_ERROR: Final = 2
EXIT_OVERFLOW: Final = 3
EXIT_BUDGET: Final = 4
