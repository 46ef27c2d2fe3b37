"""Models for parity sumsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, Any, Self

from ..const import DEFAULT_SEED
from ..errors import InvalidInputError
from .sets import ExponentVector, GridSet, IntSet

if TYPE_CHECKING:
    from pathlib import Path

__all__ = [
    "AuditResult",
    "BenchReport",
    "Certificate",
    "CubeReport",
    "ExponentVector",
    "GridSet",
    "Instance",
    "IntSet",
    "OutputFormat",
    "ResidueWitness",
    "RunConfig",
    "ScanRecord",
    "ScanResult",
    "ScanSummary",
    "Subcommand",
    "SweepSummary",
    "VerifyReport",
]


class OutputFormat(StrEnum):
    """Output formats."""

    CSV = "csv"
    JSON = "json"
    TEXT = "text"


class Subcommand(StrEnum):
    """CLI subcommands."""

    OPLUS = "oplus"
    DELTA = "delta"
    NABLA = "nabla"
    VERIFY = "verify"
    CERTIFY = "certify"
    RESIDUE_COUNTS = "residue-counts"
    PILZ_SCAN = "pilz-scan"
    CUBE_CHECK = "cube-check"
    BENCH = "bench"
    SWEEP = "sweep"


@dataclass(frozen=True, kw_only=True)
class Instance:
    """
    Input of the sumset theorems.

    Theorem 1 is the v == (0,) case. ``allow_even_v`` lifts the odd-size
    requirement for exploratory runs that make no claim.
    """

    n: int
    a: tuple[int, ...]
    v: tuple[int, ...] = (0,)
    allow_even_v: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        """Validate the instance."""
        if self.n < 1:
            msg = f"n must be positive, got {self.n}"
            raise InvalidInputError(msg)
        if not self.a:
            msg = "at least one a_i is required"
            raise InvalidInputError(msg)
        if any(_ < 1 for _ in self.a):
            msg = f"every a_i must be positive, got {self.a}"
            raise InvalidInputError(msg)
        if any(_ < 0 for _ in self.v):
            msg = f"V must contain nonnegative integers, got {self.v}"
            raise InvalidInputError(msg)
        if any(x >= y for x, y in zip(self.v, self.v[1:], strict=False)):
            msg = f"V must be strictly ascending, got {self.v}"
            raise InvalidInputError(msg)
        if len(self.v) % 2 == 0 and not self.allow_even_v:
            msg = f"|V| must be odd, got {len(self.v)}"
            raise InvalidInputError(msg)

    @classmethod
    def of(
        cls,
        n: int,
        a: list[int] | tuple[int, ...],
        v: list[int] | tuple[int, ...] | None = None,
        *,
        allow_even_v: bool = False,
    ) -> Self:
        """Create instance, sorting and deduplicating V."""
        return cls(
            n=n,
            a=tuple(a),
            v=(0,) if v is None else tuple(sorted(set(v))),
            allow_even_v=allow_even_v,
        )

    @property
    def k(self) -> int:
        """Number of dilated factors."""
        return len(self.a)

    @property
    def is_theorem1(self) -> bool:
        """V is the default {0}."""
        return self.v == (0,)

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {"n": self.n, "a": list(self.a), "V": list(self.v)}


@dataclass(frozen=True, slots=True)
class ResidueWitness:
    """Odd-coefficient exponents of one residue class modulo t."""

    residue: int
    exponents: tuple[int, ...]

    @classmethod
    def from_dict(cls, data: dict) -> Self:
        """Create instance from dict data."""
        return cls(
            residue=int(data["i"]),
            exponents=tuple(int(_) for _ in data["exponents"]),
        )


@dataclass(frozen=True, kw_only=True)
class Certificate:
    """
    Witness that the product has at least n nonzero coefficients.

    Exponents are listed in normalized coordinates; the exponent of the
    original product is ``g * e + offset``.
    """

    g: int
    offset: int
    alpha: int
    t: int
    j_bits: tuple[int, ...]
    residues: tuple[ResidueWitness, ...]
    total: int
    truncated: bool

    @property
    def listed(self) -> int:
        """Number of exponents actually listed."""
        return sum(len(_.exponents) for _ in self.residues)

    def to_dict(self) -> dict[str, Any]:
        """Serialize with a fixed key order."""
        return {
            "g": self.g,
            "offset": self.offset,
            "alpha": self.alpha,
            "t": self.t,
            "J": list(self.j_bits),
            "residues": [
                {"i": _.residue, "exponents": list(_.exponents)} for _ in self.residues
            ],
            "total": self.total,
            "truncated": self.truncated,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Self:
        """Create instance from dict data."""
        try:
            return cls(
                g=int(data["g"]),
                offset=int(data.get("offset", 0)),
                alpha=int(data["alpha"]),
                t=int(data["t"]),
                j_bits=tuple(int(_) for _ in data["J"]),
                residues=tuple(ResidueWitness.from_dict(_) for _ in data["residues"]),
                total=int(data["total"]),
                truncated=bool(data["truncated"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            msg = f"Malformed certificate: {e}"
            raise InvalidInputError(msg) from e


@dataclass(frozen=True, slots=True)
class AuditResult:
    """Outcome of a certificate audit; falsy when the audit failed."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        """Audit passed."""
        return self.ok


@dataclass(frozen=True, kw_only=True)
class VerifyReport:
    """Result of checking one instance against a theorem."""

    theorem: int
    n: int
    support_size: int
    passed: bool
    # False for exploratory even-|V| runs
    claimed: bool = True

    @property
    def status(self) -> str:
        """PASS, FAIL or UNCLAIMED."""
        if not self.claimed:
            return "UNCLAIMED"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {
            "theorem": self.theorem,
            "size": self.support_size,
            "n": self.n,
            "pass": self.passed,
            "claimed": self.claimed,
        }


@dataclass(frozen=True, kw_only=True)
class SweepSummary:
    """Exhaustive Theorem 1 sweep outcome."""

    checked: int
    failures: tuple[Instance, ...] = ()
    mismatches: tuple[Instance, ...] = ()

    @property
    def passed(self) -> bool:
        """No failure and no oracle mismatch."""
        return not self.failures and not self.mismatches

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {
            "checked": self.checked,
            "failures": [_.to_dict() for _ in self.failures],
            "mismatches": [_.to_dict() for _ in self.mismatches],
        }


@dataclass(frozen=True, slots=True)
class ScanRecord:
    """One scanned set A for a fixed n."""

    n: int
    a: IntSet
    delta_size: int
    passed: bool

    def to_row(self) -> list[str]:
        """CSV row matching the header n,set,delta_size,pass."""
        return [str(self.n), str(self.a), str(self.delta_size), str(self.passed).lower()]


@dataclass(frozen=True, kw_only=True)
class ScanSummary:
    """Deterministic merge of a scan."""

    n: int
    universe_max: int
    max_size: int
    start: int
    checked: int
    next_cursor: int
    min_size: int | None
    argmin: tuple[IntSet, ...]
    violations: tuple[ScanRecord, ...]

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {
            "n": self.n,
            "universe_max": self.universe_max,
            "max_size": self.max_size,
            "start": self.start,
            "checked": self.checked,
            "next_cursor": self.next_cursor,
            "min_size": self.min_size,
            "argmin": [str(_) for _ in self.argmin],
            "violations": [str(_.a) for _ in self.violations],
        }


@dataclass(frozen=True, kw_only=True)
class ScanResult:
    """Records plus their summary."""

    records: tuple[ScanRecord, ...]
    summary: ScanSummary


@dataclass(frozen=True, kw_only=True)
class CubeReport:
    """2-cube exercise outcome for one A."""

    r: int
    size: int
    passed: bool


@dataclass(frozen=True, kw_only=True)
class BenchReport:
    """Dense multiply timing."""

    degree: int
    repetitions: int
    best_seconds: float
    mean_seconds: float
    product_terms: int
    checked: bool | None = None

    @property
    def bits_per_second(self) -> float:
        """Input bits processed per second on the best run."""
        if self.best_seconds <= 0:
            return float("inf")
        return 2 * (self.degree + 1) / self.best_seconds


@dataclass(frozen=True, kw_only=True)
class RunConfig:
    """Validated per-invocation CLI configuration."""

    subcommand: Subcommand
    output_format: OutputFormat = OutputFormat.TEXT
    output_path: Path | None = None
    oracle: bool = False
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        """Validate the configuration."""
        if not 0 <= self.seed < 2**64:
            msg = f"seed must fit 64 bits unsigned, got {self.seed}"
            raise InvalidInputError(msg)
        if (
            self.output_format == OutputFormat.CSV
            and self.subcommand != Subcommand.PILZ_SCAN
        ):
            msg = f"csv output is only available for {Subcommand.PILZ_SCAN}"
            raise InvalidInputError(msg)
