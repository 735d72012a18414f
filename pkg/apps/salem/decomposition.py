# apps/salem/decomposition.py

import logging

from apps.exact_poly.arithmetic import is_symmetric, reciprocal_star
from apps.exact_poly.exceptions import NotSymmetric
from apps.exact_poly.factor import factor_over_Z
from apps.exact_poly.models import X_MINUS_ONE, X_PLUS_ONE, canonical_key

from .models import SymmetricDecomposition

logger = logging.getLogger(__name__)


def decompose_symmetric(F, seed=0):
    """Split a monic symmetric F with F(0) = +-1 into its type 0, 1 and 2 parts."""
    if not F.is_monic or F.constant_term not in (1, -1) or not is_symmetric(F):
        raise NotSymmetric(f"{F} is not monic symmetric with constant term +-1.")
    factors = dict(factor_over_Z(F, seed=seed).factors)
    n_plus = factors.pop(X_MINUS_ONE, 0)
    n_minus = factors.pop(X_PLUS_ONE, 0)
    type1, type2 = [], []
    for g, multiplicity in factors.items():
        if is_symmetric(g):
            type1.append((g, multiplicity))
            continue
        partner = reciprocal_star(g)
        if factors.get(partner) != multiplicity:
            raise NotSymmetric(f"{g} and its reciprocal occur with different multiplicities in {F}.")
        if canonical_key(g) < canonical_key(partner):
            type2.append((g, multiplicity))
    type1.sort(key=lambda item: canonical_key(item[0]))
    type2.sort(key=lambda item: canonical_key(item[0]))
    logger.debug("decomposed %s: n+=%d n-=%d, %d type 1, %d type 2", F, n_plus, n_minus, len(type1), len(type2))
    return SymmetricDecomposition(
        polynomial=F, n_plus=n_plus, n_minus=n_minus, type1=type1, type2=type2,
    )
