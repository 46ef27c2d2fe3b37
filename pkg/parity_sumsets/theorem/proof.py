"""Steps of the sumset theorem's constructive proof, one function each."""

from __future__ import annotations

import logging
from collections import defaultdict
from functools import reduce
from math import gcd
from typing import TYPE_CHECKING

from ..const import COUNT_LIMIT, DEBUG, EXPONENT_MAX
from ..errors import ExponentOverflowError, InvalidInputError
from ..gf2 import from_set, geometric, mul, one
from ..models import Instance, IntSet

if TYPE_CHECKING:
    from collections.abc import Iterable

    from ..gf2 import Gf2Poly

LOGGER = logging.getLogger(__name__)


def two_adic_valuation(value: int) -> int:
    """Exponent of the largest power of two dividing value (value >= 1)."""
    return (value & -value).bit_length() - 1


def normalize_with_offset(inst: Instance) -> tuple[Instance, int, int]:
    """
    Divide out g = gcd(a) and report which residue class of V was kept.

    The product is a polynomial in x^g once V is split by residue modulo
    g; class c contributes x^c times a polynomial in x^g, and classes have
    disjoint supports. The smallest c whose class has odd size is kept, so
    the normalized instance still has odd |V|. When V lies in a single
    class (always true for V = {0}) nothing is lost and support sizes match.
    """
    g = gcd(*inst.a)
    classes: dict[int, list[int]] = defaultdict(list)
    for v in inst.v:
        classes[v % g].append(v)

    odd = sorted(c for c, members in classes.items() if len(members) % 2)
    offset = odd[0] if odd else min(classes, default=0)
    if len(classes) > 1:
        LOGGER.debug(
            "normalize: V spans %s classes mod %s, keeping class %s",
            len(classes),
            g,
            offset,
        )

    normalized = Instance(
        n=inst.n,
        a=tuple(_ // g for _ in inst.a),
        v=tuple((_ - offset) // g for _ in classes.get(offset, [])),
        allow_even_v=inst.allow_even_v,
    )
    return normalized, g, offset


def normalize(inst: Instance) -> tuple[Instance, int]:
    """Instance with gcd(a) = 1, and the extracted gcd."""
    normalized, g, _ = normalize_with_offset(inst)
    return normalized, g


def split_n(n: int) -> tuple[int, int]:
    """(alpha, t) with n = 2^alpha * t and t odd."""
    if n < 1:
        msg = f"n must be positive, got {n}"
        raise InvalidInputError(msg)
    alpha = two_adic_valuation(n)
    return alpha, n >> alpha


def _product(factors: Iterable[Gf2Poly]) -> Gf2Poly:
    return reduce(mul, factors, one())


def build_p(inst: Instance) -> Gf2Poly:
    """p_V(x) * prod_i (1 + x^a_i + ... + x^((n-1)a_i))."""
    top = (inst.n - 1) * sum(inst.a) + (inst.v[-1] if inst.v else 0)
    if top > EXPONENT_MAX:
        msg = f"product degree {top} exceeds the 64-bit exponent range"
        raise ExponentOverflowError(msg)

    p = _product(geometric(_, inst.n) for _ in inst.a)
    if not inst.is_theorem1:
        # p_V belongs with q; multiplying it into the full product is the same
        p = mul(p, from_set(inst.v))
    if DEBUG:
        LOGGER.debug("build_p(%s): %s terms", inst, p.support_size)
    return p


def build_qr(inst: Instance) -> tuple[Gf2Poly, Gf2Poly]:
    """
    The factorization p = q * r for V = {0}.

    q has the first t terms of every geometric factor, r the 2^alpha
    strides of t*a_i.
    """
    alpha, t = split_n(inst.n)
    q = _product(geometric(_, t) for _ in inst.a)
    r = _product(geometric(t * _, 1 << alpha) for _ in inst.a)
    return q, r


def residue_counts(inst: Instance) -> tuple[int, ...]:
    """
    F(b): expansion terms of p_V * q with exponent = b (mod t), before cancellation.

    True counts, not parities. Equals |V| * t^(k-1) everywhere once
    gcd(a) = 1.
    """
    if gcd(*inst.a) != 1:
        msg = f"residue counts need gcd(a) = 1, got {gcd(*inst.a)}; normalize first"
        raise InvalidInputError(msg)

    _, t = split_n(inst.n)
    if len(inst.v) * t**inst.k >= COUNT_LIMIT:
        msg = f"t^k = {t}^{inst.k} terms overflow the 128-bit counters"
        raise ExponentOverflowError(msg)

    counts = [0] * t
    for v in inst.v:
        counts[v % t] += 1

    # j * a_i for j < t hits each multiple of d = gcd(a_i, t) exactly d times
    for a in inst.a:
        d = gcd(a, t)
        class_sums = [sum(counts[r::d]) for r in range(d)]
        counts = [d * class_sums[b % d] for b in range(t)]
    return tuple(counts)


def exponent_j(alpha: int, a: Iterable[int]) -> frozenset[int]:
    """
    Bit positions of E = (2^alpha - 1) * sum_i 2^v2(a_i).

    (1 + y)^E is the part of r(x) that carries the lower bound;
    |J| >= alpha always holds.
    """
    if alpha < 0:
        msg = f"alpha must be nonnegative, got {alpha}"
        raise InvalidInputError(msg)
    power = ((1 << alpha) - 1) * sum(1 << two_adic_valuation(_) for _ in a)
    if power > EXPONENT_MAX:
        msg = f"exponent {power} exceeds the 64-bit exponent range"
        raise ExponentOverflowError(msg)
    return frozenset(b for b in range(power.bit_length()) if power >> b & 1)


def j_mask(j_bits: Iterable[int]) -> int:
    """Bitmask with the J positions set."""
    return sum(1 << _ for _ in set(j_bits))


def tile_set(j_bits: Iterable[int]) -> IntSet:
    """S: all subset sums of the powers 2^b, b in J."""
    mask = j_mask(j_bits)
    submasks = []
    sub = mask
    while True:
        submasks.append(sub)
        if not sub:
            break
        sub = (sub - 1) & mask
    return IntSet(tuple(reversed(submasks)))


def tiling_complement(j_bits: Iterable[int], bound: int) -> IntSet:
    """R below bound: nonnegative integers with every J bit clear."""
    mask = j_mask(j_bits)
    output = []
    r = 0
    while r < bound:
        output.append(r)
        # next integer with the masked bits clear
        r = ((r | mask) + 1) & ~mask
    return IntSet(tuple(output))


def color_of(m: int, j_bits: Iterable[int]) -> int:
    """The s in the unique decomposition m = s + r, s in S, r in R."""
    return m & j_mask(j_bits)


def decompose(m: int, j_bits: Iterable[int]) -> tuple[int, int]:
    """(s, r) with m = s + r, s in S and r in R."""
    mask = j_mask(j_bits)
    return m & mask, m & ~mask
