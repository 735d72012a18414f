# apps/exact_poly/sturm.py
"""Real roots of integer polynomials through the Sturm machinery of ``sympy.Poly``."""

from fractions import Fraction

from sympy import Poly, Rational, Symbol

from .arithmetic import squarefree_part
from .exceptions import EndpointIsRoot
from .models import RatInterval

X = Symbol('x')


def as_sympy_poly(f):
    return Poly(list(f.descending), X, domain='ZZ')


def to_rational(q):
    q = Fraction(q)
    return Rational(q.numerator, q.denominator)


def to_fraction(r):
    return Fraction(int(r.p), int(r.q))


def sturm_count(f, interval):
    """Number of distinct real roots of f strictly inside the interval."""
    f = squarefree_part(f)
    lo, hi = interval.lo, interval.hi
    for point in (lo, hi):
        if f(point) == 0:
            raise EndpointIsRoot(f, point)
    if f.degree <= 0 or lo == hi:
        return 0
    return int(as_sympy_poly(f).count_roots(to_rational(lo), to_rational(hi)))


def isolate_real_roots(f, interval):
    """Disjoint isolating intervals, ascending, for the distinct real roots of f in the interval."""
    f = squarefree_part(f)
    if f.degree <= 0:
        return []
    found = as_sympy_poly(f).intervals(inf=to_rational(interval.lo), sup=to_rational(interval.hi), sqf=True)
    return sorted((RatInterval(to_fraction(a), to_fraction(b)) for a, b in found), key=lambda i: i.lo)


def root_bound(f):
    """Every real root of f lies strictly inside (-B, B)."""
    return Fraction(2 + sum(abs(c) for c in f.coeffs), abs(f.leading))


def bisect_root(f, interval, width):
    """Refine an interval isolating one root of f until it is at most ``width`` wide."""
    if interval.width <= width:
        return interval
    lo, hi = as_sympy_poly(squarefree_part(f)).refine_root(
        to_rational(interval.lo), to_rational(interval.hi), eps=to_rational(width),
    )
    return RatInterval(to_fraction(lo), to_fraction(hi))