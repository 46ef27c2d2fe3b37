"""Sumset theorems: proof steps, verifiers and certificates."""

from .certificate import (
    certificate_from_json,
    certificate_to_json,
    make_certificate,
    read_certificate,
    verify_certificate,
    write_certificate,
)
from .proof import (
    build_p,
    build_qr,
    color_of,
    decompose,
    exponent_j,
    normalize,
    normalize_with_offset,
    residue_counts,
    split_n,
    tile_set,
    tiling_complement,
    two_adic_valuation,
)
from .verify import brute_force_support_size, sweep, verify_thm1, verify_thm2

__all__ = [
    "brute_force_support_size",
    "build_p",
    "build_qr",
    "certificate_from_json",
    "certificate_to_json",
    "color_of",
    "decompose",
    "exponent_j",
    "make_certificate",
    "normalize",
    "normalize_with_offset",
    "read_certificate",
    "residue_counts",
    "split_n",
    "sweep",
    "tile_set",
    "tiling_complement",
    "two_adic_valuation",
    "verify_certificate",
    "verify_thm1",
    "verify_thm2",
    "write_certificate",
]
