# apps/salem/families.py
"""Parametrized families of Salem polynomials, most given by their trace polynomial."""

from apps.exact_poly.arithmetic import inverse_trace_poly
from apps.exact_poly.models import X, IntPoly


def sa_polynomial(a):
    return IntPoly.from_descending([1, -a, -1, 2 * a - 1, -1, -a, 1])


def sa_trace_poly(a):
    return (X ** 2 - 4) * (X - a) - 1


def gm10_trace_poly(a):
    return (X + 1) ** 2 * (X ** 2 - 4) * (X - a) - 1


def gm10_polynomial(a):
    return inverse_trace_poly(gm10_trace_poly(a))


def b_family_trace_poly(a, b, c):
    return (X ** 2 - 4) * (X ** 3 + a * X ** 2 + (b - 1) * X + c) - 1


def b_family_polynomial(a, b, c):
    return inverse_trace_poly(b_family_trace_poly(a, b, c))


def b_family_hypothesis(a, b, c):
    """Parameters for which the family is known to be Salem."""
    return c >= 0 and a + c < -abs(b)


def smyth18_trace_poly(a):
    return X ** 2 * (X ** 2 - 4) * (X ** 2 - 3) * (X ** 2 - 1) * (X - a) - 1


def smyth18_polynomial(a):
    return inverse_trace_poly(smyth18_trace_poly(a))
