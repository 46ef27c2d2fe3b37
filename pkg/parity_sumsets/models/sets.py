"""Set models for parity sumsets."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import TYPE_CHECKING, Self

from ..errors import InvalidInputError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

_TUPLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_int(token: str, literal: str) -> int:
    try:
        return int(token.strip())
    except ValueError:
        msg = f"Not an integer {token!r} in {literal!r}"
        raise InvalidInputError(msg) from None


@dataclass(frozen=True, slots=True)
class IntSet:
    """Finite set of nonnegative integers, kept sorted and deduplicated."""

    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Validate canonical form."""
        if any(_ < 0 for _ in self.elements):
            msg = f"IntSet elements must be nonnegative: {self.elements}"
            raise InvalidInputError(msg)
        if any(x >= y for x, y in zip(self.elements, self.elements[1:], strict=False)):
            msg = f"IntSet elements must be strictly ascending: {self.elements}"
            raise InvalidInputError(msg)

    @classmethod
    def of(cls, values: Iterable[int]) -> Self:
        """Create instance from any iterable of integers."""
        return cls(tuple(sorted(set(values))))

    @classmethod
    def interval(cls, n: int, start: int = 1) -> Self:
        """[start, n]; [n] = {1, ..., n} by default."""
        return cls(tuple(range(start, n + 1)))

    @classmethod
    def parse(cls, literal: str) -> Self:
        """Parse a comma-separated literal such as ``1,2,3``."""
        text = literal.strip().strip("{}")
        if not text:
            return cls()
        return cls.of(_parse_int(_, literal) for _ in text.split(","))

    @property
    def is_positive(self) -> bool:
        """All elements >= 1."""
        return not self.elements or self.elements[0] >= 1

    def __iter__(self) -> Iterator[int]:
        """Iterate ascending elements."""
        return iter(self.elements)

    def __len__(self) -> int:
        """Cardinality."""
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        """Membership."""
        return item in self.elements

    def __str__(self) -> str:
        """Comma-joined ascending elements."""
        return ",".join(str(_) for _ in self.elements)


@dataclass(frozen=True, slots=True)
class GridSet:
    """Finite set of integer tuples of one dimension; coordinates may be negative."""

    dimension: int
    elements: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        """Validate dimension and canonical order."""
        if self.dimension < 0:
            msg = f"Grid dimension must be nonnegative, got {self.dimension}"
            raise InvalidInputError(msg)
        for element in self.elements:
            if len(element) != self.dimension:
                msg = f"Tuple {element} does not have dimension {self.dimension}"
                raise InvalidInputError(msg)
        if any(x >= y for x, y in zip(self.elements, self.elements[1:], strict=False)):
            msg = "GridSet elements must be strictly ascending"
            raise InvalidInputError(msg)

    @classmethod
    def of(
        cls, values: Iterable[tuple[int, ...]], dimension: int | None = None
    ) -> Self:
        """Create instance from tuples; dimension is inferred when omitted."""
        elements = tuple(sorted({tuple(_) for _ in values}))
        if dimension is None:
            if not elements:
                msg = "Cannot infer the dimension of an empty grid set"
                raise InvalidInputError(msg)
            dimension = len(elements[0])
        return cls(dimension=dimension, elements=elements)

    @classmethod
    def parse(cls, literal: str, dimension: int | None = None) -> Self:
        """Parse ``(0,0),(1,0)``; ``()`` is the zero-dimensional point."""
        matches = _TUPLE_RE.findall(literal)
        leftover = _TUPLE_RE.sub("", literal).replace(",", "").strip()
        if leftover:
            msg = f"Unexpected text {leftover!r} in grid literal {literal!r}"
            raise InvalidInputError(msg)

        values = []
        for body in matches:
            tokens = [_ for _ in body.split(",") if _.strip()]
            values.append(tuple(_parse_int(_, literal) for _ in tokens))
        return cls.of(values, dimension)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        """Iterate tuples in ascending order."""
        return iter(self.elements)

    def __len__(self) -> int:
        """Cardinality."""
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        """Membership."""
        return item in self.elements

    def __str__(self) -> str:
        """Parenthesized comma-separated tuples."""
        return ",".join(
            "(" + ",".join(str(_) for _ in element) + ")" for element in self.elements
        )


@dataclass(frozen=True, slots=True)
class ExponentVector:
    """Prime valuations of an integer over an ordered list of primes."""

    coordinates: tuple[int, ...]

    def reconstruct(self, primes: Iterable[int]) -> int:
        """Multiply the primes back together."""
        primes = tuple(primes)
        if len(primes) != len(self.coordinates):
            msg = (
                f"Vector of length {len(self.coordinates)}"
                f" does not match {len(primes)} primes"
            )
            raise InvalidInputError(msg)
        return prod(p**e for p, e in zip(primes, self.coordinates, strict=True))

    def __len__(self) -> int:
        """Number of primes."""
        return len(self.coordinates)
