# apps/local_conditions/conditions.py
"""
Global conditions (C0), (C1) on a characteristic polynomial and the
per-prime conditions for an even unimodular Z_p-lattice with a semi-simple
isometry of that characteristic polynomial.
"""

import logging
from math import isqrt

from sympy import isprime, legendre_symbol, multiplicity, primefactors

from apps.exact_poly.arithmetic import is_symmetric
from apps.exact_poly.exceptions import NotSymmetric
from apps.modp.exceptions import NotAPrime
from apps.salem.decomposition import decompose_symmetric

from .exceptions import OddDegree, ZeroInput
from .models import C1Report, TwoAdicClass

logger = logging.getLogger(__name__)

UNIT_DISC_CLASSES = (1, 5)


def is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def c0_from_parts(constant_term, degree, r, s):
    return constant_term == 1 and degree == r + s and (r - s) % 8 == 0


def check_c0(F, r, s):
    return c0_from_parts(F.constant_term, F.degree, r, s)


def c1_from_values(at_1, at_minus1, n):
    """(C1) for a polynomial of degree 2n with the given values at 1 and -1."""
    return C1Report(
        f1_at_1=at_1,
        f1_at_minus1=at_minus1,
        abs_squares=(is_square(abs(at_1)), is_square(abs(at_minus1))),
        signed_square=is_square((-1) ** n * at_1 * at_minus1),
    )


def check_c1(F):
    if F.degree % 2:
        raise OddDegree(F)
    return c1_from_values(F(1), F(-1), F.degree // 2)


def two_adic_class(t):
    if not t:
        raise ZeroInput()
    valuation = int(multiplicity(2, abs(t)))
    return TwoAdicClass(valuation, (t >> valuation) % 8)


def in_unit_disc_classes(c):
    """True for the classes of 1 and -3 in Q_2^x / Q_2^x2."""
    return c.valuation % 2 == 0 and c.unit_mod8 in UNIT_DISC_CLASSES


def _valuation(p, n):
    return int(multiplicity(p, abs(n)))


def is_padic_square(t, p):
    """Whether the nonzero integer t is a square in Q_p."""
    if p == 2:
        c = two_adic_class(t)
        return c.valuation % 2 == 0 and c.unit_mod8 == 1
    if not t:
        raise ZeroInput()
    valuation = _valuation(p, t)
    return valuation % 2 == 0 and legendre_symbol((t // p ** valuation) % p, p) == 1


def local_conditions_hold(decomposition, p):
    """
    Clauses on the type 1 part F_1 of the decomposition; type 2 factors
    contribute hyperbolic planes and are ignored.
    """
    at_1, at_minus1 = decomposition.f1_values
    if _valuation(p, at_1) % 2 and not decomposition.n_plus:
        return False
    if _valuation(p, at_minus1) % 2 and not decomposition.n_minus:
        return False
    if p == 2 and not decomposition.n_plus and not decomposition.n_minus:
        t = (-1) ** decomposition.n1 * at_1 * at_minus1
        return in_unit_disc_classes(two_adic_class(t))
    return True


def local_even_unimodular_exists(F, p, seed=0):
    if not isprime(p):
        raise NotAPrime(p)
    if not F.is_monic or F.constant_term != 1 or F.degree % 2 or not is_symmetric(F):
        raise NotSymmetric(f"{F} is not monic symmetric of even degree with F(0) = 1.")
    result = local_conditions_hold(decompose_symmetric(F, seed=seed), p)
    logger.debug("local condition at %d for %s: %s", p, F, result)
    return result


def relevant_primes(decomposition):
    """Primes at which the local clauses can fail: those dividing 2 F_1(1) F_1(-1)."""
    at_1, at_minus1 = decomposition.f1_values
    return primefactors(abs(2 * at_1 * at_minus1))
