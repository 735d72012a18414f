# apps/cyclotomic/generators.py

import logging
from functools import lru_cache

from apps.exact_poly.factor import factor_over_Z

from .models import CyclotomicIndex, CyclotomicProduct
from .polynomials import phi_m, totient

logger = logging.getLogger(__name__)

# Largest order with totient at most 20.
DEFAULT_M_CAP = 66


def cyclotomic_indices(max_degree, m_cap=DEFAULT_M_CAP, start=3):
    """Orders start <= m <= m_cap with phi(m) <= max_degree, ascending."""
    return [CyclotomicIndex(m, totient(m)) for m in range(start, m_cap + 1) if totient(m) <= max_degree]


@lru_cache(maxsize=None)
def orders_with_totient(k):
    # phi(m) >= sqrt(m / 2), so every such m is below 2k^2 + 3.
    return tuple(m for m in range(1, 2 * k * k + 3) if totient(m) == k)


def _walk(orders, start, remaining):
    if remaining == 0:
        yield ()
        return
    for i in range(start, len(orders)):
        m = orders[i]
        degree = totient(m)
        for k in range(1, remaining // degree + 1):
            for rest in _walk(orders, i + 1, remaining - k * degree):
                yield ((m, k),) + rest


def enumerate_products(target_degree, m_cap=DEFAULT_M_CAP, allow_linear=False):
    """
    Every product of cyclotomic polynomials of total degree ``target_degree``
    over Phi_m with 3 <= m <= m_cap (plus Phi_1, Phi_2 when ``allow_linear``),
    each exactly once, in lexicographic order of their sorted parts.
    """
    if target_degree < 0:
        return
    orders = [1, 2] if allow_linear else []
    orders += [index.m for index in cyclotomic_indices(target_degree, m_cap)]
    for parts in _walk(orders, 0, target_degree):
        yield CyclotomicProduct(parts)


def is_cyclotomic_product(f, seed=0):
    """The decomposition of a monic f into cyclotomic factors, or None."""
    if not f.is_monic:
        return None
    factorization = factor_over_Z(f, seed=seed)
    if factorization.unit != 1 or factorization.content != 1:
        return None
    parts = []
    for g, multiplicity in factorization.factors:
        match = next((m for m in orders_with_totient(g.degree) if phi_m(m) == g), None)
        if match is None:
            logger.debug("factor %s of %s is not cyclotomic", g, f)
            return None
        parts.append((match, multiplicity))
    return CyclotomicProduct(parts)
