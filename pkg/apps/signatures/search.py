# apps/signatures/search.py

import logging

from apps.cyclotomic.generators import DEFAULT_M_CAP, enumerate_products
from apps.cyclotomic.models import CyclotomicProduct
from apps.cyclotomic.polynomials import phi_m
from apps.local_conditions.conditions import c0_from_parts, c1_from_values, check_c1
from apps.obstruction.graph import obstruction_group
from apps.obstruction.models import Exactness

from .exceptions import DegreeMismatch
from .models import SignatureRuleOutcome, TrivialObstructionSearch

logger = logging.getLogger(__name__)

K3_DEGREE = 22


def _candidate_order(product):
    return (product.factor_count, product.parts)


def _passes_c0_c1(cert, product, r, s):
    """(C0) and (C1) for F = S * C from the values of S and C alone."""
    if not c0_from_parts(product.constant_term, cert.degree + product.total_degree, r, s):
        return False
    n = (cert.degree + product.total_degree) // 2
    at_1 = cert.s_at_1 * product.value_at(1)
    at_minus1 = cert.s_at_minus1 * product.value_at(-1)
    return c1_from_values(at_1, at_minus1, n).holds


def exists_trivial_obstruction_salem_map(cert, target_max=(3, 19), m_cap=DEFAULT_M_CAP, seed=0):
    """
    First cyclotomic complement C, in order of factor count and then
    parts, for which S * C carries a Salem signature map of the given
    maximum with trivial obstruction group.
    """
    r, s = target_max
    target = r + s - cert.degree
    if target < 0:
        raise DegreeMismatch(f"S has degree {cert.degree}, more than r + s = {r + s}.")
    candidates = sorted(enumerate_products(target, m_cap, allow_linear=True), key=_candidate_order)
    blocked = False
    examined = 0
    for product in candidates:
        if not _passes_c0_c1(cert, product, r, s):
            continue
        examined += 1
        F = cert.polynomial * product.polynomial()
        graph = obstruction_group(F, product.multiplicity(1), product.multiplicity(2), seed=seed)
        if graph.is_trivial:
            logger.info("trivial obstruction for %s with %s at maximum %s", cert.polynomial, product, target_max)
            return TrivialObstructionSearch(target_max, product, graph, blocked, examined)
        if graph.best_case_rank == 0:
            blocked = True
        logger.debug("complement %s: rank %d (%s)", product, graph.gf_rank, graph.exactness)
    logger.info("no complement of degree %d gives a trivial obstruction for %s", target, cert.polynomial)
    return TrivialObstructionSearch(target_max, None, None, blocked, examined)


def power_case_rule(cert, m, k, z_on_S, seed=0):
    """
    Realizability of tau_z for F = S * Phi_m^k of degree 22 when S and
    Phi_m^k both satisfy (C1) and G_F is nonzero: exactly one of the two
    placements of z is realizable, decided by d mod 8.
    """
    product = CyclotomicProduct([(m, k)])
    if cert.degree + product.total_degree != K3_DEGREE:
        raise DegreeMismatch(f"deg S + deg Phi_{m}^{k} = {cert.degree + product.total_degree}, expected {K3_DEGREE}.")
    C = phi_m(m) ** k
    if m in (1, 2) and k == 2:
        return SignatureRuleOutcome.INAPPLICABLE
    if not check_c1(cert.polynomial).holds or not check_c1(C).holds:
        return SignatureRuleOutcome.INAPPLICABLE
    graph = obstruction_group(cert.polynomial * C, product.multiplicity(1), product.multiplicity(2), seed=seed)
    if graph.gf_rank == 0 or graph.exactness != Exactness.EXACT:
        return SignatureRuleOutcome.INAPPLICABLE

    realizable_on_S = cert.degree % 8 == 6
    if z_on_S == realizable_on_S:
        return SignatureRuleOutcome.REALIZABLE
    return SignatureRuleOutcome.NOT_REALIZABLE
