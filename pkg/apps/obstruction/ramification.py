# apps/obstruction/ramification.py

import logging

from sympy import multiplicity, primefactors

from apps.local_conditions.conditions import in_unit_disc_classes, two_adic_class

from .models import RamificationKind, RamificationStatus

logger = logging.getLogger(__name__)


def ramified_prime_candidates(f):
    """Primes dividing 2 f(1) f(-1); every prime at which f ramifies is among them."""
    return set(primefactors(abs(2 * f(1) * f(-1))))


def _odd_valuation(p, value):
    return bool(value) and multiplicity(p, abs(value)) % 2 == 1


def unramified_status(f):
    at_1, at_minus1 = f(1), f(-1)
    if abs(at_1 * at_minus1) == 1:
        return RamificationStatus(RamificationKind.UNRAMIFIED)

    ramified, unresolved = [], []
    for p in sorted(ramified_prime_candidates(f)):
        if _odd_valuation(p, at_1) or _odd_valuation(p, at_minus1):
            ramified.append(p)
        elif p == 2 and not in_unit_disc_classes(two_adic_class((-1) ** (f.degree // 2) * at_1 * at_minus1)):
            ramified.append(p)
        else:
            unresolved.append(p)

    if ramified:
        status = RamificationStatus(RamificationKind.RAMIFIED_AT, tuple(ramified), tuple(unresolved))
    else:
        status = RamificationStatus(RamificationKind.UNKNOWN, (), tuple(unresolved))
    logger.debug("ramification of %s: %s (unresolved %s)", f, status, status.unresolved)
    return status
