"""
Parity set operators.

Every operator has two independent paths: the default goes through GF(2)
polynomials, the oracle path counts representations in a hash map.
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import reduce
from math import prod
from typing import TYPE_CHECKING

from .const import EXPONENT_MAX
from .errors import ExponentOverflowError, InvalidInputError
from .gf2 import add, from_set, mul, zero
from .models import GridSet, IntSet

if TYPE_CHECKING:
    from collections.abc import Hashable, Iterable, Sequence

LOGGER = logging.getLogger(__name__)


def _check_bound(value: int, what: str) -> None:
    if value > EXPONENT_MAX:
        msg = f"{what} {value} exceeds the 64-bit range"
        raise ExponentOverflowError(msg)


def odd_counts[T: Hashable](values: Iterable[T]) -> list[T]:
    """Values occurring an odd number of times, in first-seen order."""
    return [value for value, count in Counter(values).items() if count & 1]


def dilate(a: IntSet, i: int) -> IntSet:
    """i·A = {i·x : x in A}."""
    if i < 1:
        msg = f"dilation factor must be positive, got {i}"
        raise InvalidInputError(msg)
    if a.elements:
        _check_bound(a.elements[-1] * i, "dilated element")
    return IntSet(tuple(_ * i for _ in a.elements))


def symdiff(sets: Iterable[IntSet], *, oracle: bool = False) -> IntSet:
    """Elements that belong to an odd number of the sets."""
    if oracle:
        return IntSet.of(odd_counts(x for s in sets for x in s))

    total = reduce(add, (from_set(_) for _ in sets), zero())
    return IntSet(total.exponents)


def oplus(a: IntSet, b: IntSet, *, oracle: bool = False) -> IntSet:
    """Sums a+b (a in A, b in B) with an odd number of representations."""
    if not a or not b:
        return IntSet()
    _check_bound(a.elements[-1] + b.elements[-1], "sum")

    if oracle:
        return IntSet.of(odd_counts(x + y for x in a for y in b))
    return IntSet(mul(from_set(a), from_set(b)).exponents)


def oplus_many(sets: Sequence[IntSet], *, oracle: bool = False) -> IntSet:
    """Left fold of oplus over at least one set."""
    if not sets:
        msg = "oplus needs at least one set"
        raise InvalidInputError(msg)
    if oracle:
        return reduce(lambda x, y: oplus(x, y, oracle=True), sets)

    product = reduce(mul, (from_set(_) for _ in sets[1:]), from_set(sets[0]))
    return IntSet(product.exponents)


def nabla(a: IntSet, b: IntSet, *, oracle: bool = False) -> IntSet:
    """Products a·b (a in A, b in B) with an odd number of representations."""
    if not a.is_positive or not b.is_positive:
        msg = "nabla operands must contain positive integers only"
        raise InvalidInputError(msg)
    if not a or not b:
        return IntSet()
    _check_bound(a.elements[-1] * b.elements[-1], "product")

    if oracle:
        return IntSet.of(odd_counts(x * y for x in a for y in b))

    # A∇B is the symmetric difference of the dilations x·B
    outer, inner = (a, b) if len(a) <= len(b) else (b, a)
    return symdiff(dilate(inner, _) for _ in outer)


def nabla_many(sets: Sequence[IntSet], *, oracle: bool = False) -> IntSet:
    """Left fold of nabla over at least one set."""
    if not sets:
        msg = "nabla needs at least one set"
        raise InvalidInputError(msg)
    return reduce(lambda x, y: nabla(x, y, oracle=oracle), sets)


def _check_dimensions(a: GridSet, b: GridSet) -> None:
    if a.dimension != b.dimension:
        msg = f"dimension mismatch: {a.dimension} vs {b.dimension}"
        raise InvalidInputError(msg)


def _oplus_grid_counting(a: GridSet, b: GridSet) -> GridSet:
    sums = (tuple(x + y for x, y in zip(u, v, strict=True)) for u in a for v in b)
    return GridSet.of(odd_counts(sums), a.dimension)


def oplus_grid(a: GridSet, b: GridSet, *, oracle: bool = False) -> GridSet:
    """
    Odd-representation sumset of two grid sets.

    The default path maps tuples to integers by Kronecker substitution
    (mixed radix wide enough that no coordinate sum carries), multiplies
    over GF(2) and maps back.
    """
    _check_dimensions(a, b)
    if not a or not b:
        return GridSet(dimension=a.dimension)
    if oracle or a.dimension == 0:
        return _oplus_grid_counting(a, b)

    dims = range(a.dimension)
    low_a = [min(_[d] for _ in a) for d in dims]
    low_b = [min(_[d] for _ in b) for d in dims]
    radices = [
        max(_[d] for _ in a) - low_a[d] + max(_[d] for _ in b) - low_b[d] + 1
        for d in dims
    ]
    if prod(radices) > EXPONENT_MAX:
        LOGGER.debug("oplus_grid: radix product too large, counting instead")
        return _oplus_grid_counting(a, b)

    weights = [prod(radices[:d]) for d in dims]

    def encode(point: tuple[int, ...], lows: list[int]) -> int:
        return sum((point[d] - lows[d]) * weights[d] for d in dims)

    product = mul(
        from_set(encode(_, low_a) for _ in a),
        from_set(encode(_, low_b) for _ in b),
    )
    decoded = (
        tuple(
            (e // weights[d]) % radices[d] + low_a[d] + low_b[d] for d in dims
        )
        for e in product.exponents
    )
    return GridSet.of(decoded, a.dimension)
