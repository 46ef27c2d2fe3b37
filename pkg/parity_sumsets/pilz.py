"""Explorer for Pilz's conjecture: |A Δ 2A Δ ... Δ nA| >= n."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import islice, product
from typing import TYPE_CHECKING

import numpy as np

from .const import CUBE_MAX_DIMENSION, DEFAULT_SEED, LOWER_BOUND_LAMBDA, SCAN_BUDGET
from .errors import BudgetExceededError, InvalidInputError
from .models import (
    CubeReport,
    ExponentVector,
    GridSet,
    IntSet,
    ScanRecord,
    ScanResult,
    ScanSummary,
)
from .setops import dilate, oplus_grid, symdiff

if TYPE_CHECKING:
    from collections.abc import Iterator

LOGGER = logging.getLogger(__name__)


def primes_upto(n: int) -> list[int]:
    """All primes <= n, ascending (sieve of Eratosthenes)."""
    if n < 1:
        msg = f"n must be positive, got {n}"
        raise InvalidInputError(msg)
    if n < 2:  # noqa: PLR2004
        return []

    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return [int(_) for _ in np.nonzero(flags)[0]]


def exponent_vector(k: int, primes: list[int]) -> ExponentVector:
    """Valuations of k over primes; every prime factor of k must be listed."""
    if k < 1:
        msg = f"k must be positive, got {k}"
        raise InvalidInputError(msg)

    coordinates = []
    rest = k
    for p in primes:
        count = 0
        while rest % p == 0:
            rest //= p
            count += 1
        coordinates.append(count)
    if rest != 1:
        msg = f"{k} has a prime factor outside {primes} (leftover {rest})"
        raise InvalidInputError(msg)
    return ExponentVector(tuple(coordinates))


def build_sn(n: int) -> GridSet:
    """S_n = {v_1, ..., v_n} in Z^pi(n); S_1 is the zero-dimensional point."""
    primes = primes_upto(n)
    return GridSet.of(
        (exponent_vector(k, primes).coordinates for k in range(1, n + 1)),
        len(primes),
    )


def _check_pilz_operand(a: IntSet) -> None:
    if not a or not a.is_positive:
        msg = f"A must be a nonempty set of positive integers, got {{{a}}}"
        raise InvalidInputError(msg)


def pilz_size(a: IntSet, n: int) -> int:
    """|A Δ 2A Δ ... Δ nA|, which is also |A ∇ [n]|."""
    _check_pilz_operand(a)
    if n < 1:
        msg = f"n must be positive, got {n}"
        raise InvalidInputError(msg)
    return len(symdiff(dilate(a, i) for i in range(1, n + 1)))


def grid_pilz_size(a: IntSet, n: int) -> int | None:
    """
    |S_n ⊕ {v_x : x in A}| through the exponent-vector embedding.

    None when some element has a prime factor above n and so no vector
    in Z^pi(n).
    """
    _check_pilz_operand(a)
    primes = primes_upto(n)
    try:
        vectors = [exponent_vector(_, primes).coordinates for _ in a]
    except InvalidInputError:
        return None
    return len(oplus_grid(build_sn(n), GridSet.of(vectors, len(primes))))


def count_subsets(universe_max: int, max_size: int) -> int:
    """Nonempty subsets of [1, universe_max] with at most max_size elements."""
    return sum(math.comb(universe_max, j) for j in range(1, min(max_size, universe_max) + 1))


def iter_subsets(universe_max: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of [1, universe_max], lexicographic by sorted elements."""

    def extend(prefix: tuple[int, ...], first: int) -> Iterator[tuple[int, ...]]:
        for x in range(first, universe_max + 1):
            current = (*prefix, x)
            yield current
            if len(current) < max_size:
                yield from extend(current, x + 1)

    if max_size >= 1:
        yield from extend((), 1)


def _scan_record(n: int, elements: tuple[int, ...]) -> ScanRecord:
    a = IntSet(elements)
    size = pilz_size(a, n)
    return ScanRecord(n=n, a=a, delta_size=size, passed=size >= n)


def scan(  # noqa: PLR0913
    n: int,
    universe_max: int,
    max_size: int,
    *,
    budget: int = SCAN_BUDGET,
    start: int = 0,
    limit: int | None = None,
    workers: int = 1,
) -> ScanResult:
    """
    Check every nonempty A ⊆ [1, universe_max] with |A| <= max_size.

    ``start`` skips that many subsets of the enumeration order and
    ``limit`` caps how many are checked; ``summary.next_cursor`` resumes.
    """
    if min(n, universe_max, max_size) < 1 or start < 0 or workers < 1:
        msg = "scan bounds must be positive and the cursor nonnegative"
        raise InvalidInputError(msg)

    remaining = max(count_subsets(universe_max, max_size) - start, 0)
    if limit is not None:
        remaining = min(remaining, limit)
    if remaining > budget:
        msg = f"scan would check {remaining} subsets, budget is {budget}"
        raise BudgetExceededError(msg)

    subsets = islice(iter_subsets(universe_max, max_size), start, start + remaining)
    check = partial(_scan_record, n)
    LOGGER.debug("scan: n=%s, %s subsets from %s, %s workers", n, remaining, start, workers)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map keeps enumeration order, so the merge is deterministic
            records = tuple(pool.map(check, subsets, chunksize=256))
    else:
        records = tuple(map(check, subsets))

    min_size = min((_.delta_size for _ in records), default=None)
    argmin = tuple(
        sorted(
            (_.a for _ in records if _.delta_size == min_size),
            key=lambda s: s.elements,
        )
    )
    violations = tuple(_ for _ in records if not _.passed)
    for record in violations:
        LOGGER.error(
            "Conjecture violated: n=%s A={%s} size %s", n, record.a, record.delta_size
        )

    return ScanResult(
        records=records,
        summary=ScanSummary(
            n=n,
            universe_max=universe_max,
            max_size=max_size,
            start=start,
            checked=len(records),
            next_cursor=start + len(records),
            min_size=min_size,
            argmin=argmin,
            violations=violations,
        ),
    )


def lower_bound_display(n: int) -> float:
    """n / (ln n)^lambda; a display value only."""
    if n < 2:  # noqa: PLR2004
        msg = f"the bound is displayed for n >= 2, got {n}"
        raise InvalidInputError(msg)
    return n / math.log(n) ** LOWER_BOUND_LAMBDA


def cube(r: int) -> GridSet:
    """The 2-cube {0,1}^r."""
    return GridSet.of(product((0, 1), repeat=r), r)


def cube_check(
    r: int, a: GridSet, *, max_dimension: int = CUBE_MAX_DIMENSION
) -> CubeReport:
    """Check |{0,1}^r ⊕ A| >= 2^r."""
    if not 1 <= r <= max_dimension:
        msg = f"cube dimension must be in [1, {max_dimension}], got {r}"
        raise InvalidInputError(msg)
    if a.dimension != r:
        msg = f"dimension mismatch: cube {r} vs A {a.dimension}"
        raise InvalidInputError(msg)

    size = len(oplus_grid(cube(r), a))
    return CubeReport(r=r, size=size, passed=size >= 1 << r)


def random_grid_set(
    rng: np.random.Generator, r: int, size: int, coord_max: int
) -> GridSet:
    """Up to size random points of [0, coord_max)^r (duplicates collapse)."""
    points = rng.integers(0, coord_max, size=(size, r))
    return GridSet.of((tuple(int(_) for _ in row) for row in points), r)


def cube_trials(
    r: int,
    trials: int,
    *,
    coord_max: int = 8,
    max_points: int = 8,
    seed: int = DEFAULT_SEED,
) -> list[CubeReport]:
    """Run cube_check on seeded random nonempty A."""
    rng = np.random.default_rng(seed)
    reports = []
    for _ in range(trials):
        size = int(rng.integers(1, max_points + 1))
        reports.append(cube_check(r, random_grid_set(rng, r, size, coord_max)))
    failures = sum(1 for _ in reports if not _.passed)
    if failures:
        LOGGER.error("2-cube exercise failed %s times for r=%s", failures, r)
    return reports
