"""Timing harness for the dense carry-less kernel."""

from __future__ import annotations

import logging
import time

import numpy as np

from .const import BENCH_CHECK_BITS, BENCH_MAX_DEGREE, DEFAULT_SEED
from .errors import BudgetExceededError, InvalidInputError, OracleMismatchError
from .gf2 import Gf2Poly, from_bits, mul, mul_sparse
from .models import BenchReport

LOGGER = logging.getLogger(__name__)


def random_dense(rng: np.random.Generator, degree: int) -> Gf2Poly:
    """Uniformly random polynomial of exactly the given degree."""
    data = rng.bytes((degree >> 3) + 1)
    bits = int.from_bytes(data, "little") & ((1 << (degree + 1)) - 1)
    return from_bits(bits | (1 << degree))


def _truncated(p: Gf2Poly, width: int) -> Gf2Poly:
    return from_bits(p.bits & ((1 << width) - 1))


def run_bench(
    degree: int,
    repetitions: int,
    *,
    seed: int = DEFAULT_SEED,
    check: bool = False,
) -> BenchReport:
    """Time mul on two seeded random polynomials of the given degree."""
    if degree < 1 or repetitions < 1:
        msg = f"degree and repetitions must be positive, got {degree}, {repetitions}"
        raise InvalidInputError(msg)
    if degree > BENCH_MAX_DEGREE:
        msg = f"degree {degree} is above the memory budget {BENCH_MAX_DEGREE}"
        raise BudgetExceededError(msg)

    rng = np.random.default_rng(seed)
    p = random_dense(rng, degree)
    q = random_dense(rng, degree)

    timings = []
    product = None
    for _ in range(repetitions):
        started = time.perf_counter()
        product = mul(p, q)
        timings.append(time.perf_counter() - started)
    LOGGER.debug("bench: degree %s timings %s", degree, timings)

    checked = None
    if check:
        small_p = _truncated(p, BENCH_CHECK_BITS)
        small_q = _truncated(q, BENCH_CHECK_BITS)
        if mul(small_p, small_q) != mul_sparse(small_p, small_q):
            msg = f"dense and sparse products disagree at seed {seed}"
            raise OracleMismatchError(msg)
        checked = True

    return BenchReport(
        degree=degree,
        repetitions=repetitions,
        best_seconds=min(timings),
        mean_seconds=sum(timings) / len(timings),
        product_terms=product.support_size if product else 0,
        checked=checked,
    )
