"""Certificates for the sumset theorem: construction, audit and JSON form."""

from __future__ import annotations

import json
import logging
from typing import TYPE_CHECKING

from ..const import CERTIFICATE_FULL_LIMIT
from ..errors import InvalidInputError, TheoremViolationError
from ..models import AuditResult, Certificate, Instance, ResidueWitness
from .proof import build_p, exponent_j, normalize_with_offset, split_n

if TYPE_CHECKING:
    from pathlib import Path

LOGGER = logging.getLogger(__name__)


def make_certificate(inst: Instance) -> Certificate:
    """
    Witness the bound by listing odd-coefficient exponents per residue mod t.

    Every class must hold at least 2^alpha exponents; a shortfall would
    falsify the theorem and aborts with TheoremViolationError. Above
    CERTIFICATE_FULL_LIMIT terms each class is cut to exactly 2^alpha
    exponents and ``total`` keeps the full count.
    """
    normalized, g, offset = normalize_with_offset(inst)
    alpha, t = split_n(inst.n)
    j_bits = tuple(sorted(exponent_j(alpha, normalized.a)))
    if len(j_bits) < alpha:
        msg = f"|J| = {len(j_bits)} < alpha = {alpha} for {inst}"
        raise TheoremViolationError(msg)

    product = build_p(normalized)
    classes: list[list[int]] = [[] for _ in range(t)]
    for exponent in product.exponents:
        classes[exponent % t].append(exponent)

    need = 1 << alpha
    for residue, members in enumerate(classes):
        if len(members) < need:
            msg = (
                f"residue class {residue} mod {t} has {len(members)} terms,"
                f" fewer than 2^{alpha}, for {inst}"
            )
            LOGGER.error(msg)
            raise TheoremViolationError(msg)

    total = product.support_size
    truncated = total > CERTIFICATE_FULL_LIMIT
    if truncated:
        LOGGER.debug("make_certificate: %s terms, truncating to 2^%s", total, alpha)

    return Certificate(
        g=g,
        offset=offset,
        alpha=alpha,
        t=t,
        j_bits=j_bits,
        residues=tuple(
            ResidueWitness(
                residue=i,
                exponents=tuple(members[:need] if truncated else members),
            )
            for i, members in enumerate(classes)
        ),
        total=total,
        truncated=truncated,
    )


def _fail(reason: str) -> AuditResult:
    LOGGER.error("Certificate audit failed: %s", reason)
    return AuditResult(ok=False, reason=reason)


def _audit_fields(cert: Certificate) -> str | None:
    scalars = (cert.g, cert.offset, cert.alpha, cert.t, cert.total)
    exponents = [e for _ in cert.residues for e in (_.residue, *_.exponents)]
    if not all(type(_) is int for _ in (*scalars, *cert.j_bits, *exponents)):
        return "every header field and exponent must be an integer"
    if cert.g < 1 or cert.t < 1 or cert.alpha < 0:
        return f"g={cert.g} t={cert.t} alpha={cert.alpha} out of range"
    return None


def _audit_header(inst: Instance, cert: Certificate) -> str | None:
    normalized, g, offset = normalize_with_offset(inst)
    alpha, t = split_n(inst.n)
    if (cert.g, cert.offset) != (g, offset):
        return f"g/offset {cert.g}/{cert.offset} != {g}/{offset}"
    if cert.t % 2 == 0 or (1 << cert.alpha) * cert.t != inst.n:
        return f"2^{cert.alpha} * {cert.t} is not an odd split of {inst.n}"
    if (cert.alpha, cert.t) != (alpha, t):
        return f"alpha/t {cert.alpha}/{cert.t} != {alpha}/{t}"
    if cert.j_bits != tuple(sorted(exponent_j(alpha, normalized.a))):
        return f"J {list(cert.j_bits)} does not match the binary expansion"
    if len(cert.j_bits) < alpha:
        return f"|J| = {len(cert.j_bits)} < alpha = {alpha}"
    return None


def _audit_classes(cert: Certificate) -> str | None:
    if [_.residue for _ in cert.residues] != list(range(cert.t)):
        return f"residues must be exactly 0..{cert.t - 1} in order"

    need = 1 << cert.alpha
    listed: set[int] = set()
    for witness in cert.residues:
        exponents = witness.exponents
        if len(exponents) < need:
            return f"class {witness.residue} lists {len(exponents)} < 2^{cert.alpha}"
        if cert.truncated and len(exponents) != need:
            return f"truncated class {witness.residue} must list exactly {need}"
        if listed.intersection(exponents) or len(set(exponents)) != len(exponents):
            return f"class {witness.residue} repeats an exponent"
        listed.update(exponents)
        if any(_ % cert.t != witness.residue for _ in exponents):
            return f"class {witness.residue} lists an exponent of another residue"

    if not cert.truncated and len(listed) != cert.total:
        return f"{len(listed)} exponents listed but total is {cert.total}"
    return None


def verify_certificate(inst: Instance, cert: Certificate) -> AuditResult:
    """
    Audit a certificate against a freshly computed product.

    Failures are results carrying a reason, never exceptions.
    """
    reason = (
        _audit_fields(cert) or _audit_header(inst, cert) or _audit_classes(cert)
    )
    if reason:
        return _fail(reason)

    support = set(build_p(inst).exponents)
    for witness in cert.residues:
        for exponent in witness.exponents:
            original = cert.g * exponent + cert.offset
            if original not in support:
                return _fail(f"x^{original} has an even coefficient")

    total = sum(
        1
        for _ in support
        if _ >= cert.offset and (_ - cert.offset) % cert.g == 0
    )
    if total != cert.total:
        return _fail(f"total {cert.total} != recomputed {total}")
    if cert.total < inst.n:
        return _fail(f"total {cert.total} < n = {inst.n}")

    return AuditResult(ok=True)


def certificate_to_json(cert: Certificate) -> str:
    """Deterministic JSON: fixed key order, ascending lists, trailing newline."""
    return json.dumps(cert.to_dict(), indent=2) + "\n"


def certificate_from_json(text: str) -> Certificate:
    """Parse certificate_to_json output."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        msg = f"Certificate is not valid JSON: {e}"
        raise InvalidInputError(msg) from e
    return Certificate.from_dict(data)


def write_certificate(path: Path, cert: Certificate) -> None:
    """Write certificate_to_json output to path."""
    with path.open("w", encoding="utf-8") as f:
        f.write(certificate_to_json(cert))


def read_certificate(path: Path) -> Certificate:
    """Read a certificate written by write_certificate."""
    with path.open("r", encoding="utf-8") as f:
        return certificate_from_json(f.read())
