# apps/reports/analysis.py
"""Assembles the report objects behind the analyze, pi, obstruction and power commands."""

import logging

from apps.classifier.decision import classify
from apps.cyclotomic.polynomials import phi_m, totient
from apps.exact_poly.arithmetic import multiplicity, resultant
from apps.exact_poly.models import X_MINUS_ONE, X_PLUS_ONE
from apps.local_conditions.conditions import check_c1
from apps.obstruction.graph import obstruction_group
from apps.obstruction.pi_sets import pi_set
from apps.obstruction.ramification import unramified_status
from apps.salem.certify import certify_salem, power_min_poly, salem_value
from apps.signatures.maps import tau_s_z, validate_signature_map
from apps.signatures.search import K3_DEGREE

from .models import (
    AnalysisReport, ObstructionReport, PiReport, PiRow, PowerReport, ReportMeta, SalemSummary, SignatureAssignment,
    SignatureMapReport, SignatureReport,
)

logger = logging.getLogger(__name__)

ALPHA_PLACES = 10


def salem_summary(cert, alpha_bits):
    alpha = salem_value(cert, alpha_bits).to_decimal_string(ALPHA_PLACES)
    return SalemSummary(cert.degree, alpha, cert.s_at_1, cert.s_at_minus1)


def pi_orders(m_cap, max_totient=None):
    """Orders 3 <= m <= m_cap, optionally only those with phi(m) <= max_totient."""
    return [m for m in range(3, m_cap + 1) if max_totient is None or totient(m) <= max_totient]


def pi_rows(S, orders, seed=0):
    rows = []
    for m in orders:
        g = phi_m(m)
        rows.append(PiRow(m, resultant(S, g), pi_set(S, g, seed).memberships))
    return tuple(rows)


def build_analysis_report(text, S, seed, m_cap, alpha_bits, version):
    cert = certify_salem(S, seed=seed)
    verdict = classify(S, seed=seed, m_cap=m_cap)
    logger.info("analysed %s: %s", S, verdict.salem_pairs.value)
    return AnalysisReport(
        input=text,
        salem=salem_summary(cert, alpha_bits),
        c1=check_c1(S),
        unramified=str(unramified_status(S)),
        pi=pi_rows(S, pi_orders(m_cap), seed),
        verdict=verdict,
        meta=ReportMeta(version, seed),
    )


def build_pi_report(f, g, seed, version):
    result = pi_set(f, g, seed)
    return PiReport(f, g, resultant(f, g), result.memberships, ReportMeta(version, seed))


def build_obstruction_report(F, s_plus, s_minus, seed, version):
    """s_plus and s_minus default to the multiplicities of X - 1 and X + 1 in F."""
    if s_plus is None:
        s_plus = multiplicity(X_MINUS_ONE, F)
    if s_minus is None:
        s_minus = multiplicity(X_PLUS_ONE, F)
    graph = obstruction_group(F, s_plus, s_minus, seed=seed)
    return ObstructionReport(F, s_plus, s_minus, graph, ReportMeta(version, seed))


def build_power_report(S, k, seed, m_cap, alpha_bits, version):
    """
    The minimal polynomial of alpha^k, with Pi_{S^k, Phi_m} for the orders
    whose Phi_m still fits beside it in degree 22.
    """
    power = power_min_poly(certify_salem(S, seed=seed), k, seed=seed)
    cert = certify_salem(power, seed=seed)
    room = K3_DEGREE - cert.degree
    orders = pi_orders(m_cap, max_totient=room) if room >= 2 else []
    return PowerReport(
        polynomial=S,
        k=k,
        power=power,
        salem=salem_summary(cert, alpha_bits),
        pi=pi_rows(power, orders, seed),
        meta=ReportMeta(version, seed),
    )


def build_signature_report(S, z, seed, version):
    """tau_{S,z} and its clause check for one unit-circle pair, or for every pair when z is None."""
    cert = certify_salem(S, seed=seed)
    indices = range(cert.unit_circle_pairs) if z is None else [z]
    maps = []
    for index in indices:
        spec = tau_s_z(cert, index)
        violations = tuple(validate_signature_map(spec))
        if violations:
            logger.warning("tau_{S,%d} on %s breaks %d clauses", index, S, len(violations))
        maps.append(SignatureMapReport(
            z=index,
            r=spec.maximum[0],
            s=spec.maximum[1],
            assignments=tuple(SignatureAssignment(d, *pair) for d, pair in spec.assignments),
            violations=violations,
        ))
    return SignatureReport(polynomial=S, maps=tuple(maps), meta=ReportMeta(version, seed))
