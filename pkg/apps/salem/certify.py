# apps/salem/certify.py
"""
Exact Salem certification through the trace polynomial R of S(X) =
X^n R(X + 1/X): S is Salem exactly when it is irreducible and R has
n - 1 roots in (-2, 2) and one root beyond 2.
"""

import logging
from fractions import Fraction
from math import ceil, floor, isqrt

from sympy import Poly, Symbol

from apps.exact_poly.arithmetic import gcd, is_symmetric, trace_poly
from apps.exact_poly.factor import factor_over_Z
from apps.exact_poly.models import IntPoly, RatInterval
from apps.exact_poly.sturm import bisect_root, isolate_real_roots, root_bound, sturm_count

from .exceptions import InternalDegeneracy, NotSalem
from .models import NotSalemReason, SalemCertificate

logger = logging.getLogger(__name__)

CERTIFICATE_BITS = 40


def certify_salem(S, seed=0):
    if not S.is_monic:
        raise NotSalem(NotSalemReason.NOT_MONIC)
    if S.degree < 4:
        raise NotSalem(NotSalemReason.DEGREE_TOO_SMALL, f"degree {S.degree} < 4")
    if S.constant_term != 1 or not is_symmetric(S):
        raise NotSalem(NotSalemReason.NOT_SYMMETRIC)
    if S.degree % 2:
        # a palindromic polynomial of odd degree vanishes at -1
        raise NotSalem(NotSalemReason.REDUCIBLE, "X+1 divides S")
    if not S(1) or not S(-1):
        raise NotSalem(NotSalemReason.REDUCIBLE, "S vanishes at 1 or -1")

    R = trace_poly(S)
    n = R.degree
    bound = root_bound(R)
    inside = sturm_count(R, RatInterval(-2, 2))
    beyond = sturm_count(R, RatInterval(2, bound))
    if (inside, beyond) != (n - 1, 1):
        raise NotSalem(
            NotSalemReason.ROOT_COUNT_MISMATCH,
            f"trace polynomial has {inside} roots in (-2, 2) and {beyond} beyond 2",
        )
    if not factor_over_Z(S, seed=seed).is_irreducible:
        raise NotSalem(NotSalemReason.REDUCIBLE)

    s_at_1, s_at_minus1 = S(1), S(-1)
    if not s_at_1 < 0 < s_at_minus1:
        raise InternalDegeneracy(f"{S} certified Salem but S(1) = {s_at_1}, S(-1) = {s_at_minus1}.")

    trace_interval = bisect_root(R, RatInterval(2, bound), Fraction(1, 2 ** CERTIFICATE_BITS))
    logger.debug("certified Salem polynomial of degree %d", S.degree)
    return SalemCertificate(
        polynomial=S,
        degree=S.degree,
        trace_poly=R,
        trace_interval=trace_interval,
        alpha_interval=_alpha_from_trace(trace_interval, CERTIFICATE_BITS + 8),
        root_counts=(inside, beyond),
        s_at_1=s_at_1,
        s_at_minus1=s_at_minus1,
    )


def _sqrt_bounds(q, bits):
    """Rationals lo <= sqrt(q) <= hi at most 2^(1 - bits) apart."""
    scale = 1 << bits
    scaled = q * scale * scale
    return Fraction(isqrt(floor(scaled)), scale), Fraction(isqrt(ceil(scaled)) + 1, scale)


def _alpha_from_trace(interval, bits):
    # alpha = (t + sqrt(t^2 - 4)) / 2 is increasing for t >= 2
    lo_root, _ = _sqrt_bounds(interval.lo ** 2 - 4, bits)
    _, hi_root = _sqrt_bounds(interval.hi ** 2 - 4, bits)
    return RatInterval((interval.lo + lo_root) / 2, (interval.hi + hi_root) / 2)


def salem_value(cert, precision_bits):
    """An interval of width at most 2^-precision_bits containing the Salem number."""
    target = Fraction(1, 2 ** precision_bits)
    extra = 4
    while True:
        trace_interval = bisect_root(cert.trace_poly, cert.trace_interval, target / 2 ** extra)
        alpha = _alpha_from_trace(trace_interval, precision_bits + extra)
        if alpha.width <= target:
            return alpha
        extra += 8


_X, _Y = Symbol('x'), Symbol('y')


def power_min_poly(cert, k, seed=0):
    """
    Minimal polynomial of alpha^k as Res_y(S(y), X - y^k), which is
    prod (X - beta^k) over the roots beta of S up to sign. It must be
    squarefree and Salem.
    """
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    S = cert.polynomial
    if k == 1:
        return S
    in_y = Poly(sum(c * _Y ** i for i, c in enumerate(S.coeffs)), _Y, _X, domain='ZZ')
    shift = Poly(_X - _Y ** k, _Y, _X, domain='ZZ')
    T = IntPoly.from_descending(int(c) for c in Poly(in_y.resultant(shift).as_expr(), _X).all_coeffs())
    if T.leading < 0:
        T = -T
    if gcd(T, T.derivative()).degree > 0:
        raise InternalDegeneracy(f"alpha^{k} has a non-squarefree characteristic polynomial.")
    try:
        certify_salem(T, seed=seed)
    except NotSalem as exc:
        raise InternalDegeneracy(f"alpha^{k} is not certified Salem: {exc}") from exc
    return T


def split_trace_roots(cert):
    """
    Isolating intervals for the n - 1 roots of the trace polynomial in
    (-2, 2), in decreasing order. Root j gives the j-th unit-circle
    conjugate pair of S.
    """
    isolated = isolate_real_roots(cert.trace_poly, RatInterval(-2, 2))
    return sorted(isolated, key=lambda interval: interval.lo, reverse=True)
