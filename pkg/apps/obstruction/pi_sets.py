# apps/obstruction/pi_sets.py
"""
The sets Pi_{f,g} of primes linking two symmetric irreducible factors.

For coprime f, g and p not dividing (fg)(1)(fg)(-1), the factors of f
and g over Z_p reduce to coprime squarefree factors mod p, so a common
symmetric irreducible factor mod p decides membership. When p divides
those values the lifting argument fails and the prime is reported
Indeterminate.
"""

import logging
from functools import lru_cache

from sympy import multiplicity, primefactors

from apps.exact_poly.arithmetic import resultant
from apps.exact_poly.models import X_MINUS_ONE, X_PLUS_ONE
from apps.local_conditions.conditions import is_padic_square
from apps.modp.operations import common_factors_mod_p

from .exceptions import ZeroResultant
from .models import EdgeRule, PiMembership, PiSetResult, PiStatus

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def pi_set(f, g, seed=0):
    res = resultant(f, g)
    if not res:
        raise ZeroResultant(f, g)
    fg = f * g
    bad = fg(1) * fg(-1)
    memberships = []
    for p in primefactors(abs(res)):
        if bad % p == 0:
            memberships.append(PiMembership(p, PiStatus.INDETERMINATE, rule=EdgeRule.COMMON_SYMMETRIC_FACTOR))
            continue
        common = common_factors_mod_p(f, g, p, seed=seed)
        symmetric = common.symmetric_factors
        logger.debug("Res(%s, %s): %d common factors mod %d, %d symmetric", f, g, len(common.factors), p, len(symmetric))
        if symmetric:
            entry = PiMembership(
                p, PiStatus.MEMBER, rule=EdgeRule.COMMON_SYMMETRIC_FACTOR,
                witness=symmetric[0], common_factors=common.polys,
            )
        else:
            entry = PiMembership(p, PiStatus.NON_MEMBER, common_factors=common.polys)
        memberships.append(entry)
    return PiSetResult(f, g, memberships)


def _linear_rule(p):
    return EdgeRule.TWO_ADIC_LINEAR_PAIR if p == 2 else EdgeRule.ODD_VALUATION_LINEAR


def d_condition_holds(n_pm, d_pm, p):
    """When the linear factor occurs exactly twice, D must not be -1 in Q_p^x / Q_p^x2."""
    return n_pm != 2 or not is_padic_square(-d_pm, p)


def pi_set_linear(f, sign, n_pm, d_pm):
    """
    Pi_{f, X-1} for ``sign`` = 1 and Pi_{f, X+1} for ``sign`` = -1. An odd
    valuation of f(sign) at p puts p in the ramification set of f and makes
    X - sign divide f mod p.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be 1 or -1")
    value = f(sign)
    linear = X_MINUS_ONE if sign == 1 else X_PLUS_ONE
    if not value:
        raise ZeroResultant(f, linear)
    memberships = []
    for p in primefactors(abs(value)):
        valuation = int(multiplicity(p, abs(value)))
        if not d_condition_holds(n_pm, d_pm, p):
            memberships.append(PiMembership(p, PiStatus.NON_MEMBER, valuation=valuation))
        elif valuation % 2:
            memberships.append(PiMembership(p, PiStatus.MEMBER, rule=_linear_rule(p), valuation=valuation))
        else:
            memberships.append(PiMembership(p, PiStatus.INDETERMINATE, rule=_linear_rule(p), valuation=valuation))
    return PiSetResult(f, linear, memberships)


def linear_pair_holds(n_plus, n_minus, d_plus, d_minus):
    """Pi_{X-1, X+1} = {2} exactly when this holds."""
    return (
        bool(n_plus) and bool(n_minus)
        and d_condition_holds(n_plus, d_plus, 2)
        and d_condition_holds(n_minus, d_minus, 2)
    )
