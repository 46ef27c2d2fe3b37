"""GF(2) polynomials identified with their supports."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from ..const import DEBUG, DENSE_SPAN_LIMIT, EXPONENT_MAX
from ..errors import ExponentOverflowError, InvalidInputError
from .kernels import bits_from_exponents, clmul, exponents_from_bits, geometric_bits

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

LOGGER = logging.getLogger(__name__)


def _check_exponent(value: int, what: str = "exponent") -> int:
    if value > EXPONENT_MAX:
        msg = f"{what} {value} exceeds the 64-bit exponent range"
        raise ExponentOverflowError(msg)
    return value


class Gf2Poly:
    """
    Polynomial over GF(2).

    Two interchangeable forms: sparse (ascending exponent tuple) and dense
    (int bitset plus the exponent of its lowest bit). Equality, hashing and
    every operation only look at the support, never at the form.
    """

    __slots__ = ("_bits", "_exponents", "_hash", "_shift")

    _bits: int | None
    _exponents: tuple[int, ...] | None
    _shift: int
    _hash: int | None

    def __init__(self) -> None:
        """Create the zero polynomial. Use the module constructors otherwise."""
        self._bits = None
        self._exponents = ()
        self._shift = 0
        self._hash = None

    @classmethod
    def _sparse(cls, exponents: tuple[int, ...]) -> Gf2Poly:
        output = cls()
        output._exponents = exponents
        return output

    @classmethod
    def _dense(cls, bits: int, shift: int) -> Gf2Poly:
        output = cls()
        if not bits:
            return output
        # no zero blocks below the lowest set exponent either
        trailing = (bits & -bits).bit_length() - 1
        output._bits = bits >> trailing
        output._shift = shift + trailing
        output._exponents = None
        return output

    @property
    def is_dense(self) -> bool:
        """Whether the bitset form is in use."""
        return self._bits is not None

    @property
    def exponents(self) -> tuple[int, ...]:
        """Ascending support."""
        if self._exponents is None:
            self._exponents = exponents_from_bits(self._bits, self._shift)
        return self._exponents

    @property
    def support_size(self) -> int:
        """Number of nonzero coefficients."""
        if self._bits is not None:
            return self._bits.bit_count()
        return len(self._exponents)

    @property
    def degree(self) -> int | None:
        """Highest exponent, None for zero."""
        if self._bits is not None:
            return self._shift + self._bits.bit_length() - 1
        return self._exponents[-1] if self._exponents else None

    @property
    def low(self) -> int | None:
        """Lowest exponent, None for zero."""
        if self._bits is not None:
            return self._shift
        return self._exponents[0] if self._exponents else None

    @property
    def span(self) -> int:
        """degree - low; 0 for zero and for monomials."""
        if not self:
            return 0
        return self.degree - self.low

    def bits_from(self, base: int) -> int:
        """Bitset of the support relative to exponent base (base <= low)."""
        if self._bits is not None:
            return self._bits << (self._shift - base)
        return bits_from_exponents(self._exponents, base)

    @property
    def bits(self) -> int:
        """Bitset with bit e set iff x^e is in the support."""
        return self.bits_from(0)

    def __iter__(self) -> Iterator[int]:
        """Iterate ascending exponents."""
        return iter(self.exponents)

    def __len__(self) -> int:
        """Support size."""
        return self.support_size

    def __bool__(self) -> bool:
        """Nonzero polynomial."""
        if self._bits is not None:
            return True
        return bool(self._exponents)

    def __eq__(self, other: object) -> bool:
        """Equal iff the supports are equal."""
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        if self.support_size != other.support_size or self.low != other.low:
            return False
        if self._bits is not None and other._bits is not None:
            return self._bits == other._bits
        return self.exponents == other.exponents

    def __hash__(self) -> int:
        """Hash of the support."""
        if self._hash is None:
            self._hash = hash(self.exponents)
        return self._hash

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        """Coefficientwise XOR."""
        return add(self, other)

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        """Product over GF(2)."""
        return mul(self, other)

    def __str__(self) -> str:
        """Render ascending terms as x^e joined by +, zero as 0."""
        if not self:
            return "0"
        return "+".join(f"x^{_}" for _ in self.exponents)

    def __repr__(self) -> str:
        """Debug representation."""
        form = "dense" if self.is_dense else "sparse"
        return f"Gf2Poly({self}, {form})"


def zero() -> Gf2Poly:
    """The zero polynomial."""
    return Gf2Poly()


def one() -> Gf2Poly:
    """The constant 1."""
    return Gf2Poly._sparse((0,))  # noqa: SLF001


def from_set(values: Iterable[int]) -> Gf2Poly:
    """p_S: the polynomial whose support is S."""
    exponents = tuple(sorted(set(values)))
    if exponents and exponents[0] < 0:
        msg = f"exponents must be nonnegative, got {exponents[0]}"
        raise InvalidInputError(msg)
    if exponents:
        _check_exponent(exponents[-1])
    return Gf2Poly._sparse(exponents)  # noqa: SLF001


def from_bits(bits: int, shift: int = 0) -> Gf2Poly:
    """Dense constructor: bit e of bits is the coefficient of x^(shift+e)."""
    if bits < 0 or shift < 0:
        msg = "bitset and shift must be nonnegative"
        raise InvalidInputError(msg)
    if bits:
        _check_exponent(shift + bits.bit_length() - 1)
    return Gf2Poly._dense(bits, shift)  # noqa: SLF001


def _from_sorted(exponents: list[int] | tuple[int, ...], *, dense: bool) -> Gf2Poly:
    if not exponents:
        return Gf2Poly()
    if dense and exponents[-1] - exponents[0] < DENSE_SPAN_LIMIT:
        return Gf2Poly._dense(  # noqa: SLF001
            bits_from_exponents(exponents, exponents[0]), exponents[0]
        )
    return Gf2Poly._sparse(tuple(exponents))  # noqa: SLF001


def support_size(p: Gf2Poly) -> int:
    """Number of nonzero coefficients."""
    return p.support_size


def eval_at_one(p: Gf2Poly) -> int:
    """p(1) over GF(2): parity of the support size."""
    return p.support_size & 1


def add(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    """Sum over GF(2): symmetric difference of the supports."""
    if not p:
        return q
    if not q:
        return p

    base = min(p.low, q.low)
    top = max(p.degree, q.degree)
    if (p.is_dense or q.is_dense) and top - base < DENSE_SPAN_LIMIT:
        return Gf2Poly._dense(p.bits_from(base) ^ q.bits_from(base), base)  # noqa: SLF001

    return Gf2Poly._sparse(tuple(sorted(set(p.exponents) ^ set(q.exponents))))  # noqa: SLF001


def mul(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    """
    Product over GF(2).

    Spans below DENSE_SPAN_LIMIT go through the carry-less kernel, larger
    ones through sparse hash-parity accumulation.
    """
    if not p or not q:
        return Gf2Poly()

    _check_exponent(p.degree + q.degree, "product degree")
    low = p.low + q.low
    span = p.span + q.span

    if span < DENSE_SPAN_LIMIT:
        if DEBUG:
            LOGGER.debug(
                "mul: dense path, %s x %s terms, span %s",
                p.support_size,
                q.support_size,
                span,
            )
        bits = clmul(p.bits_from(p.low), q.bits_from(q.low))
        return Gf2Poly._dense(bits, low)  # noqa: SLF001

    LOGGER.debug(
        "mul: sparse path, %s x %s terms, span %s",
        p.support_size,
        q.support_size,
        span,
    )
    return mul_sparse(p, q)


def mul_sparse(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    """Product by hash-parity accumulation of every pairwise exponent sum."""
    if not p or not q:
        return Gf2Poly()
    _check_exponent(p.degree + q.degree, "product degree")

    outer, inner = (p, q) if p.support_size <= q.support_size else (q, p)
    inner_exponents = inner.exponents
    odd: set[int] = set()
    for e in outer.exponents:
        for f in inner_exponents:
            total = e + f
            if total in odd:
                odd.remove(total)
            else:
                odd.add(total)
    return Gf2Poly._sparse(tuple(sorted(odd)))  # noqa: SLF001


def shift(p: Gf2Poly, s: int) -> Gf2Poly:
    """Multiply by x^s."""
    if s < 0:
        msg = f"shift must be nonnegative, got {s}"
        raise InvalidInputError(msg)
    if not p or s == 0:
        return p
    _check_exponent(p.degree + s)
    if p.is_dense:
        return Gf2Poly._dense(p.bits_from(p.low), p.low + s)  # noqa: SLF001
    return Gf2Poly._sparse(tuple(_ + s for _ in p.exponents))  # noqa: SLF001


def inflate(p: Gf2Poly, d: int) -> Gf2Poly:
    """Substitute x -> x^d."""
    if d < 1:
        msg = f"inflation factor must be positive, got {d}"
        raise InvalidInputError(msg)
    if not p or d == 1:
        return p
    _check_exponent(p.degree * d)
    return _from_sorted([_ * d for _ in p.exponents], dense=p.is_dense)


def residue_split(p: Gf2Poly, t: int) -> list[Gf2Poly]:
    """
    Split p into q_0..q_{t-1} with p(x) = sum_i x^i q_i(x^t).

    Exponent e of p lands in q_{e mod t} as floor(e / t).
    """
    if t < 1:
        msg = f"modulus must be positive, got {t}"
        raise InvalidInputError(msg)
    if t == 1:
        return [p]

    buckets: list[list[int]] = [[] for _ in range(t)]
    for exponent in p.exponents:
        quotient, residue = divmod(exponent, t)
        buckets[residue].append(quotient)
    return [_from_sorted(_, dense=p.is_dense) for _ in buckets]


def geometric(a: int, n: int) -> Gf2Poly:
    """1 + x^a + x^(2a) + ... + x^((n-1)a)."""
    if a < 1 or n < 1:
        msg = f"geometric needs positive step and length, got a={a}, n={n}"
        raise InvalidInputError(msg)
    top = _check_exponent((n - 1) * a)
    if top < DENSE_SPAN_LIMIT:
        return Gf2Poly._dense(geometric_bits(a, n), 0)  # noqa: SLF001
    return Gf2Poly._sparse(tuple(range(0, top + 1, a)))  # noqa: SLF001


def pow_one_plus_y(power: int) -> Gf2Poly:
    """
    (1 + y)^power over GF(2).

    By Lucas' theorem the support is every submask of power, i.e. every
    subset sum of its binary digits, so the size is 2^popcount(power).
    """
    if power < 0:
        msg = f"power must be nonnegative, got {power}"
        raise InvalidInputError(msg)
    _check_exponent(power)

    if power < DENSE_SPAN_LIMIT:
        bits = 1
        for digit in exponents_from_bits(power):
            # distinct subset sums never collide, so OR is XOR here
            bits |= bits << (1 << digit)
        return Gf2Poly._dense(bits, 0)  # noqa: SLF001

    submasks = []
    mask = power
    while True:
        submasks.append(mask)
        if not mask:
            break
        mask = (mask - 1) & power
    return Gf2Poly._sparse(tuple(reversed(submasks)))  # noqa: SLF001
