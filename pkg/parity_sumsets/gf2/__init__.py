"""GF(2) polynomial arithmetic: the engine behind every parity operator."""

from .poly import (
    Gf2Poly,
    add,
    eval_at_one,
    from_bits,
    from_set,
    geometric,
    inflate,
    mul,
    mul_sparse,
    one,
    pow_one_plus_y,
    residue_split,
    shift,
    support_size,
    zero,
)

__all__ = [
    "Gf2Poly",
    "add",
    "eval_at_one",
    "from_bits",
    "from_set",
    "geometric",
    "inflate",
    "mul",
    "mul_sparse",
    "one",
    "pow_one_plus_y",
    "residue_split",
    "shift",
    "support_size",
    "zero",
]
