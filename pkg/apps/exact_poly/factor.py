# apps/exact_poly/factor.py
"""
Factorization over the integers through ``sympy.polys.factortools``, which
recombines Hensel-lifted factors from a small good prime.
"""

import logging

from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_factor_list

from .exceptions import PolynomialError
from .models import FactorizationZ, IntPoly, canonical_key

logger = logging.getLogger(__name__)


def to_dense(f):
    return [ZZ(c) for c in f.descending]


def factor_over_Z(f, seed=0):
    """
    unit * content * prod(g ** k) with primitive irreducible g of positive
    leading coefficient in canonical order. The factors are unique, so
    ``seed`` never changes the result; it is kept so every factoring entry
    point takes one.
    """
    if f.is_zero:
        raise PolynomialError("The zero polynomial has no factorization.")
    _, pairs = dup_factor_list(to_dense(f), ZZ)
    factors = [(IntPoly.from_descending(g).primitive_part(), int(k)) for g, k in pairs]
    factors = [(g, k) for g, k in factors if g.degree > 0]
    factors.sort(key=lambda item: canonical_key(item[0]))
    logger.debug("factored degree %d polynomial into %d irreducible factors", f.degree, len(factors))
    return FactorizationZ(unit=1 if f.leading > 0 else -1, content=f.content, factors=factors)