# apps/exact_poly/arithmetic.py

import logging
from math import comb

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd, dup_resultant
from sympy.polys.sqfreetools import dup_sqf_list, dup_sqf_part

from .exceptions import InexactDivision, NonIntegralReciprocal, NotSymmetric, ZeroConstantTerm
from .models import ONE, ZERO, IntPoly

logger = logging.getLogger(__name__)


def eval_at(f, x):
    """Exact value of f at an integer or Fraction."""
    return f(x)


def reciprocal_star(f):
    """f*(X) = f(0)^-1 X^deg(f) f(1/X)."""
    c0 = f.constant_term
    if c0 == 0:
        raise ZeroConstantTerm(f)
    try:
        return IntPoly(f.descending).exact_scalar_quotient(c0)
    except InexactDivision:
        raise NonIntegralReciprocal(f) from None


def is_symmetric(f):
    return reciprocal_star(f) == f


def exact_quotient(f, g):
    quotient, remainder = divmod(f, g)
    if remainder:
        raise InexactDivision(f"{g} does not divide {f}.")
    return quotient


def divides(g, f):
    if f.is_zero:
        return True
    if g.degree > f.degree:
        return False
    if f.constant_term and g.constant_term and f.constant_term % g.constant_term:
        return False
    try:
        exact_quotient(f, g)
    except InexactDivision:
        return False
    return True


def multiplicity(g, f):
    """Largest k with g^k dividing f; g must have positive degree."""
    count = 0
    while f and divides(g, f):
        f = exact_quotient(f, g)
        count += 1
    return count


def to_dense(f):
    """Descending ZZ coefficients, the layout of ``sympy.polys`` dense routines."""
    return [ZZ(c) for c in f.descending]


def from_dense(f):
    return IntPoly.from_descending(int(c) for c in f)


def gcd(f, g):
    """Primitive greatest common divisor with positive leading coefficient."""
    return from_dense(dup_gcd(to_dense(f), to_dense(g), ZZ)).primitive_part()


def squarefree_part(f):
    if f.degree <= 0:
        return f
    return from_dense(dup_sqf_part(to_dense(f), ZZ)).primitive_part()


def squarefree_decomposition(f):
    """
    Pairs (a_i, i) with pp(f) = prod a_i^i, each a_i squarefree, primitive
    and pairwise coprime, by increasing i.
    """
    f = f.primitive_part()
    if f.degree <= 0:
        return []
    _, parts = dup_sqf_list(to_dense(f), ZZ)
    return [(from_dense(a).primitive_part(), int(i)) for a, i in parts]


def _standard_resultant(a, b):
    """lc(a)^deg(b) * prod b(alpha) over the roots alpha of a: the Sylvester determinant of (a, b)."""
    if a.is_zero or b.is_zero:
        return 0
    if a.degree == 0:
        return a.leading ** b.degree
    if b.degree == 0:
        return b.leading ** a.degree
    if a.degree < b.degree:
        # dup_resultant puts the larger degree first without adjusting the sign
        return (-1) ** (a.degree * b.degree) * _standard_resultant(b, a)
    return int(dup_resultant(to_dense(a), to_dense(b), ZZ))


def resultant(f, g):
    """
    Res(f, g) = lc(g)^deg(f) * prod f(beta) over the roots beta of g, from
    the fraction-free subresultant remainder sequence.
    """
    return _standard_resultant(g, f)


def trace_poly(S):
    """
    The R of degree n with S(X) = X^n R(X + 1/X), for S symmetric of
    degree 2n. Solved top-down against X^(n-k) (X^2 + 1)^k.
    """
    if S.is_zero or S.degree % 2:
        raise NotSymmetric(f"{S} does not have even degree.")
    n = S.degree // 2
    rest = list(S.coeffs)
    r = [0] * (n + 1)
    for k in range(n, -1, -1):
        c = rest[n + k]
        r[k] = c
        if c:
            for j in range(k + 1):
                rest[n - k + 2 * j] -= c * comb(k, j)
    if any(rest):
        raise NotSymmetric(f"{S} is not symmetric.")
    return IntPoly(r)


def inverse_trace_poly(R):
    """S(X) = X^n R(X + 1/X) with n = deg R."""
    n = R.degree
    if n < 0:
        return ZERO
    s = [0] * (2 * n + 1)
    for k, c in enumerate(R.coeffs):
        if c:
            for j in range(k + 1):
                s[n - k + 2 * j] += c * comb(k, j)
    return IntPoly(s)


def product(polys):
    result = ONE
    for poly in polys:
        result = result * poly
    return result