# apps/signatures/maps.py
"""
Signature maps as finite data: a pair (pos, neg) per rational
irreducible symmetric factor of F, optionally refined over the real
quadratic divisors of that factor.
"""

import logging

from apps.cyclotomic.polynomials import phi_m, totient
from apps.exact_poly.arithmetic import is_symmetric, multiplicity, trace_poly
from apps.exact_poly.models import RatInterval
from apps.exact_poly.sturm import sturm_count
from apps.local_conditions.conditions import check_c0, check_c1

from .exceptions import IndexOutOfRange
from .models import Descriptor, DescriptorKind, SalemSignatureSpec, SignatureMapSpec, Violation

logger = logging.getLogger(__name__)


def _on_unit_circle(f):
    """Whether every root of the symmetric irreducible f (degree >= 2) has absolute value 1."""
    R = trace_poly(f)
    return sturm_count(R, RatInterval(-2, 2)) == R.degree


def _sum(pairs):
    pairs = list(pairs)
    return (sum(p for p, _ in pairs), sum(n for _, n in pairs))


def validate_signature_map(spec):
    violations = []
    F = spec.F
    r, s = spec.maximum
    if not F.is_monic or not is_symmetric(F):
        violations.append(Violation('a', f"{F} is not monic symmetric"))
    if F.degree != r + s:
        violations.append(Violation('a', f"deg F = {F.degree} differs from r + s = {r + s}"))
    factors = spec.factor_assignments
    if _sum(pair for _, pair in factors) != (r, s):
        violations.append(Violation('a', f"factor values do not sum to the maximum {spec.maximum}"))

    for descriptor, (pos, neg) in factors:
        f = descriptor.factor
        n_f = multiplicity(f, F) if f.degree > 0 else 0
        if not n_f:
            violations.append(Violation('a', f"{f} does not divide {F}"))
            continue
        if pos + neg != f.degree * n_f:
            violations.append(Violation('d', f"{f}: {pos} + {neg} != {f.degree} * {n_f}"))
        if f.degree >= 2 and (pos % 2 or neg % 2) and _on_unit_circle(f):
            violations.append(Violation('d', f"{f}: values ({pos}, {neg}) must be even"))

        refinements = spec.refinements(f)
        if refinements and _sum(pair for _, pair in refinements) != (pos, neg):
            violations.append(Violation('b', f"refinements of {f} do not sum to ({pos}, {neg})"))
        for refined, (rp, rn) in refinements:
            if refined.kind == DescriptorKind.REAL_PAIR and (rp, rn) != (n_f, n_f):
                violations.append(Violation('e', f"{refined} must be ({n_f}, {n_f}), got ({rp}, {rn})"))
            elif refined.kind == DescriptorKind.UNIT_CIRCLE_PAIR:
                if rp % 2 or rn % 2 or rp + rn != 2 * n_f:
                    violations.append(Violation('d', f"{refined} must be even with sum {2 * n_f}, got ({rp}, {rn})"))
    return violations


def _salem_assignments(cert, z_index):
    pairs = cert.unit_circle_pairs
    if not 0 <= z_index < pairs:
        raise IndexOutOfRange(z_index, pairs)
    S, d = cert.polynomial, cert.degree
    assignments = [(Descriptor(DescriptorKind.FACTOR, S), (3, d - 3))]
    for i in range(pairs):
        value = (2, 0) if i == z_index else (0, 2)
        assignments.append((Descriptor(DescriptorKind.UNIT_CIRCLE_PAIR, S, i), value))
    assignments.append((Descriptor(DescriptorKind.REAL_PAIR, S, 0), (1, 1)))
    return assignments


def tau_s_z(cert, z_index):
    """The signature map of maximum (3, d - 3) on S that is (2, 0) on the chosen unit-circle pair."""
    return SignatureMapSpec(cert.polynomial, (3, cert.degree - 3), _salem_assignments(cert, z_index))


def salem_signature_map(cert, product, delta_index):
    """tau_{S,z} on S, negative definite on the cyclotomic part C."""
    assignments = _salem_assignments(cert, delta_index)
    for m, k in product.parts:
        assignments.append((Descriptor(DescriptorKind.FACTOR, phi_m(m)), (0, totient(m) * k)))
    F = cert.polynomial * product.polynomial()
    base = SignatureMapSpec(F, (3, F.degree - 3), assignments)
    logger.debug("Salem signature map on %s * %s", cert.polynomial, product)
    return SalemSignatureSpec(base=base, certificate=cert, product=product, delta_index=delta_index)


def satisfies_c0_c1(spec):
    r, s = spec.maximum
    return check_c0(spec.F, r, s) and check_c1(spec.F).holds
