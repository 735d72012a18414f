# apps/classifier/kondo.py
"""Orders m for which Phi_m can be the characteristic polynomial on the transcendental lattice."""

from apps.cyclotomic.polynomials import phi_values_at_pm1, totient

from .exceptions import OrderTooSmall, TotientTooLarge
from .models import KondoClass, KondoClassKind

MAX_TOTIENT = 20


def kondo_classify(m):
    if m < 3:
        raise OrderTooSmall(m)
    phi = totient(m)
    if phi > MAX_TOTIENT:
        raise TotientTooLarge(m, phi)
    at_1, at_minus1 = phi_values_at_pm1(m)
    if at_minus1 != 1:
        return KondoClass(m, KondoClassKind.NOT_ADMISSIBLE, f"Phi_{m}(-1) = {at_minus1}")
    if at_1 == 1 and phi % 8 != 4:
        return KondoClass(m, KondoClassKind.NOT_ADMISSIBLE, f"phi({m}) = {phi} is not 4 mod 8")
    if at_1 > 1:
        return KondoClass(m, KondoClassKind.OMEGA)
    if m % 2 == 0:
        return KondoClass(m, KondoClassKind.SIGMA)
    return KondoClass(m, KondoClassKind.FOLDS_TO_DOUBLE, f"Phi_{2 * m} satisfies the same conditions")


def kondo_table():
    """Every order with 3 <= m and phi(m) <= 20, classified."""
    orders = [m for m in range(3, 2 * MAX_TOTIENT ** 2 + 3) if totient(m) <= MAX_TOTIENT]
    return [kondo_classify(m) for m in orders]
