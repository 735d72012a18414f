# apps/modp/operations.py

import random

from sympy import isprime

from .exceptions import ModularZeroConstantTerm, NotAPrime
from .galois import gf_factor, gf_gcd, gf_is_symmetric, gf_reduce
from .models import FactorizationFp, ModFactor, ModPoly


def _require_prime(p):
    if not isprime(p):
        raise NotAPrime(p)


def reduce_mod_p(f, p):
    _require_prime(p)
    return ModPoly.reduce(f.coeffs, p)


def factor_mod_p(f, seed=0):
    """
    Squarefree split, distinct-degree split, then randomized equal-degree
    splitting driven by ``random.Random(seed)``.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit, factors = gf_factor(list(f.coeffs), f.p, random.Random(seed))
    return FactorizationFp(
        p=f.p,
        unit=unit,
        factors=[ModFactor(ModPoly(f.p, tuple(g)), k) for g, k in factors],
    )


def is_symmetric_mod_p(h):
    if not h.constant_term:
        raise ModularZeroConstantTerm(h)
    return gf_is_symmetric(list(h.coeffs), h.p)


def common_factors_mod_p(f, g, p, seed=0):
    """Factorization of gcd(f mod p, g mod p); each factor reports whether it is symmetric."""
    _require_prime(p)
    common = gf_gcd(gf_reduce(f.coeffs, p), gf_reduce(g.coeffs, p), p)
    if len(common) <= 1:
        return FactorizationFp(p=p, unit=1, factors=())
    return factor_mod_p(ModPoly(p, tuple(common)), seed)
