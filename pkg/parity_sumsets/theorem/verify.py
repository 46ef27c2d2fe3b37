"""Theorem checks against the polynomial path and a counting oracle."""

from __future__ import annotations

import logging
from collections import Counter
from itertools import combinations_with_replacement, product
from math import prod

from ..errors import InvalidInputError, OracleMismatchError
from ..models import Instance, IntSet, SweepSummary, VerifyReport
from ..setops import oplus_many
from .proof import build_p

LOGGER = logging.getLogger(__name__)

# full tuple enumeration up to this many terms, pairwise counting beyond
BRUTE_FORCE_TERMS = 2**20


def brute_force_support_size(inst: Instance) -> int:
    """|V ⊕ ⊕_i {0, a_i, ..., (n-1)a_i}| by counting representations."""
    factors = [range(0, inst.n * a, a) for a in inst.a]
    factors.append(inst.v)

    if prod(len(_) for _ in factors) <= BRUTE_FORCE_TERMS:
        counts = Counter(sum(terms) for terms in product(*factors))
        return sum(1 for count in counts.values() if count & 1)

    return len(oplus_many([IntSet.of(_) for _ in factors], oracle=True))


def _support_size(inst: Instance, *, oracle: bool) -> int:
    size = build_p(inst).support_size
    if oracle:
        expected = brute_force_support_size(inst)
        if expected != size:
            msg = f"{inst}: polynomial path gives {size}, oracle gives {expected}"
            raise OracleMismatchError(msg)
    return size


def verify_thm1(inst: Instance, *, oracle: bool = False) -> VerifyReport:
    """Check |⊕_i {a_i, ..., n a_i}| >= n."""
    if not inst.is_theorem1:
        msg = f"Theorem 1 takes V = {{0}}, got {inst.v}"
        raise InvalidInputError(msg)

    size = _support_size(inst, oracle=oracle)
    report = VerifyReport(theorem=1, n=inst.n, support_size=size, passed=size >= inst.n)
    if not report.passed:
        LOGGER.error("Theorem 1 fails for %s: size %s < n", inst, size)
    return report


def verify_thm2(inst: Instance, *, oracle: bool = False) -> VerifyReport:
    """Check |V ⊕ ⊕_i {a_i, ..., n a_i}| >= n for odd |V|."""
    claimed = len(inst.v) % 2 == 1
    if not claimed and not inst.allow_even_v:
        msg = f"|V| must be odd, got {len(inst.v)}"
        raise InvalidInputError(msg)
    if not claimed:
        LOGGER.warning("Even |V| = %s: computing without a claim", len(inst.v))

    size = _support_size(inst, oracle=oracle)
    report = VerifyReport(
        theorem=2,
        n=inst.n,
        support_size=size,
        passed=size >= inst.n,
        claimed=claimed,
    )
    if claimed and not report.passed:
        LOGGER.error("Theorem 2 fails for %s: size %s < n", inst, size)
    return report


def sweep(
    n_max: int, k_max: int, a_max: int, *, oracle: bool = True
) -> SweepSummary:
    """
    Exhaustive Theorem 1 check over n <= n_max, k <= k_max, a_i <= a_max.

    The product is symmetric in the a_i, so only nondecreasing tuples
    are visited.
    """
    if min(n_max, k_max, a_max) < 1:
        msg = "sweep bounds must be positive"
        raise InvalidInputError(msg)

    checked = 0
    failures: list[Instance] = []
    mismatches: list[Instance] = []
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            for a in combinations_with_replacement(range(1, a_max + 1), k):
                inst = Instance(n=n, a=a)
                checked += 1
                try:
                    report = verify_thm1(inst, oracle=oracle)
                except OracleMismatchError:
                    LOGGER.exception("Oracle mismatch")
                    mismatches.append(inst)
                    continue
                if not report.passed:
                    failures.append(inst)
        LOGGER.debug("sweep: n=%s done, %s instances so far", n, checked)

    return SweepSummary(
        checked=checked, failures=tuple(failures), mismatches=tuple(mismatches)
    )
