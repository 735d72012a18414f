# apps/cyclotomic/polynomials.py

from functools import lru_cache

from sympy import divisors, factorint
from sympy import totient as _sympy_totient

from apps.exact_poly.arithmetic import exact_quotient
from apps.exact_poly.models import IntPoly

from .exceptions import CyclotomicConsistencyError


@lru_cache(maxsize=None)
def totient(m):
    return int(_sympy_totient(m))


@lru_cache(maxsize=None)
def phi_m(m):
    """The m-th cyclotomic polynomial: X^m - 1 divided by Phi_d for every proper divisor d."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    poly = IntPoly.monomial(m) - 1
    for d in divisors(m)[:-1]:
        poly = exact_quotient(poly, phi_m(int(d)))
    return poly


def _closed_form_values(m):
    primes = factorint(m)
    at_one = next(iter(primes)) if len(primes) == 1 else 1
    odd = {q: k for q, k in primes.items() if q != 2}
    if primes.get(2) == 1 and len(odd) == 1:
        at_minus_one = next(iter(odd))
    elif not odd and primes.get(2, 0) >= 2:
        at_minus_one = 2
    else:
        at_minus_one = 1
    return at_one, at_minus_one


def phi_values_at_pm1(m):
    """(Phi_m(1), Phi_m(-1)) for m >= 3, cross-checked against the prime-power closed forms."""
    if m < 3:
        raise ValueError(f"order must be at least 3, got {m}")
    poly = phi_m(m)
    computed = (poly(1), poly(-1))
    expected = _closed_form_values(m)
    if computed != expected:
        raise CyclotomicConsistencyError(m, computed, expected)
    return computed
