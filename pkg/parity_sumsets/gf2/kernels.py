"""
Dense carry-less kernels over int bitsets.

A dense polynomial is a nonnegative ``int`` whose bit ``e`` is the
coefficient of ``x^e``. CPython stores ints as arrays of machine-word
sized digits, so shift and XOR run word by word over the block array.
"""

from __future__ import annotations

import logging

from ..const import (
    DEBUG,
    KARATSUBA_THRESHOLD,
    SPARSE_MULTIPLIER_TERMS,
    WINDOW_BITS,
)

LOGGER = logging.getLogger(__name__)

# set bit positions of every byte value
_BYTE_BITS: tuple[tuple[int, ...], ...] = tuple(
    tuple(i for i in range(8) if value >> i & 1) for value in range(256)
)


def bits_from_exponents(exponents: tuple[int, ...] | list[int], shift: int = 0) -> int:
    """Pack ascending exponents (all >= shift) into a bitset relative to shift."""
    if not exponents:
        return 0

    buffer = bytearray(((exponents[-1] - shift) >> 3) + 1)
    for exponent in exponents:
        offset = exponent - shift
        buffer[offset >> 3] |= 1 << (offset & 7)
    return int.from_bytes(buffer, "little")


def exponents_from_bits(bits: int, shift: int = 0) -> tuple[int, ...]:
    """Unpack a bitset into ascending exponents, adding shift to each."""
    if not bits:
        return ()

    output: list[int] = []
    data = bits.to_bytes((bits.bit_length() + 7) >> 3, "little")
    for index, byte in enumerate(data):
        if byte:
            base = shift + (index << 3)
            output.extend(base + bit for bit in _BYTE_BITS[byte])
    return tuple(output)


def geometric_bits(step: int, count: int) -> int:
    """
    Bitset of 1 + x^step + ... + x^((count-1)*step).

    Built by doubling on the binary digits of count, so it costs
    O(log count) big-int operations instead of count of them.
    """
    result = 0
    terms = 0
    for digit in bin(count)[2:]:
        result |= result << (terms * step)
        terms *= 2
        if digit == "1":
            result = (result << step) | 1
            terms += 1
    return result


def _per_term(a: int, b: int) -> int:
    """Shift-XOR a once for every set bit of b."""
    product = 0
    for exponent in exponents_from_bits(b):
        product ^= a << exponent
    return product


def _windowed(a: int, b: int) -> int:
    """Shift-XOR over WINDOW_BITS-wide windows of b using a table of a·v."""
    table = [0] * (1 << WINDOW_BITS)
    for value in range(1, len(table)):
        low = value & -value
        table[value] = table[value ^ low] ^ (a << (low.bit_length() - 1))

    product = 0
    digits = f"{b:b}"
    for index, end in enumerate(range(len(digits), 0, -WINDOW_BITS)):
        window = int(digits[max(end - WINDOW_BITS, 0) : end], 2)
        if window:
            product ^= table[window] << (index * WINDOW_BITS)
    return product


def _schoolbook(a: int, b: int) -> int:
    if b.bit_count() > a.bit_count():
        a, b = b, a
    if b.bit_count() <= SPARSE_MULTIPLIER_TERMS:
        return _per_term(a, b)
    return _windowed(a, b)


def _karatsuba(a: int, b: int) -> int:
    if min(a.bit_length(), b.bit_length()) <= KARATSUBA_THRESHOLD:
        return _schoolbook(a, b)

    half = max(a.bit_length(), b.bit_length()) >> 1
    mask = (1 << half) - 1
    a_low, a_high = a & mask, a >> half
    b_low, b_high = b & mask, b >> half

    low = _karatsuba(a_low, b_low)
    high = _karatsuba(a_high, b_high)
    middle = _karatsuba(a_low ^ a_high, b_low ^ b_high) ^ low ^ high
    return (high << (2 * half)) ^ (middle << half) ^ low


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bitsets, i.e. the product over GF(2)."""
    if not a or not b:
        return 0

    if min(a.bit_length(), b.bit_length()) > KARATSUBA_THRESHOLD:
        if DEBUG:
            LOGGER.debug(
                "clmul: karatsuba on %s x %s bits", a.bit_length(), b.bit_length()
            )
        return _karatsuba(a, b)

    return _schoolbook(a, b)
